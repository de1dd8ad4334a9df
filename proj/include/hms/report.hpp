#ifndef HMS_REPORT_HPP
#define HMS_REPORT_HPP

#include <string>

#include "json.hpp"

#include "hms/ext.hpp"
#include "hms/functors.hpp"
#include "hms/toric.hpp"
#include "hms/tropical.hpp"

namespace hms {

using Json = nlohmann::ordered_json;

// JSON views of the computation results.  Field order is fixed and exact
// values are carried as strings, so identical inputs serialize identically.
Json json_subdivision(const LaurentPolySpec& spec, const Subdivision& P,
                      const DegenerationReport& report);
Json json_eval(const std::vector<Rat>& xi, const TropicalValue& value, const RegionClass& cls);
Json json_fan(const Fan& fan);
Json json_polytope(const MomentPolytope& mp);
Json json_hw(const HwBasis& basis);
Json json_localized(const PantsLabel& I, const PantsLabel& J, const GradedDims& dims);
Json json_triangle_suite(int n);
Json json_ext_dims(const MonomialModule& src, const MonomialModule& tgt, const ExtTable& table);
Json json_sg(const MonomialModule& src, const MonomialModule& tgt, const SgHomTable& sg);
Json json_compare(const CompareReport& report);
Json json_compare_all(int n, int max_k, int max_degree);
Json json_square(const FunctorReport& report);
Json json_fs(const FsMaps& maps);
Json json_local_pn(int n, int d, const LocalPnDims& dims);

// The all-sections report for one input spec: subdivision, mirror fan and
// polytope, and, when the spec matches the n-pants corpus member, morphism
// tables, the triangle suite, and the comparison matrix.
struct FullReport {
    Json doc;
    std::string markdown;
    bool pass = true;
};

FullReport build_full_report(const LaurentPolySpec& spec, const std::string& title);

}  // namespace hms

#endif
