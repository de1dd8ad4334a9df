#ifndef HMS_EXT_HPP
#define HMS_EXT_HPP

#include <array>
#include <vector>

#include "hms/pants.hpp"

namespace hms {

// R/(z_S) over R = C[z_1..z_{n+1}]/(z_1..z_{n+1}); S is a nonempty subset of
// {1..n+1} as a bitmask over those bits.  S equal to the full set encodes R
// itself, since the full product already vanishes.
struct MonomialModule {
    int n = 0;
    Mask S = 0;
};

Mask ext_full_mask(int n);  // bits 1..n+1
void validate_module(const MonomialModule& m);

// Exponent vector of a monomial in z_1..z_{n+1} (index 0 = z_1).
using Multidegree = std::vector<int>;

int multidegree_total(const Multidegree& e);

// Monomials of total degree <= max_degree divisible by neither z_S nor the
// full product, sorted lexicographically.
std::vector<Multidegree> module_basis(const MonomialModule& m, int max_degree);

// Per cohomological degree k: the set of representative multidegrees of a
// basis of Ext^k, computed from the 2-periodic resolution with alternating
// multipliers z_S (even steps) and z_{S'} (odd steps).  Kernel and image
// membership are pure divisibility tests, so no truncation error enters.
struct ExtTable {
    int n = 0;
    int max_k = 0;
    int max_degree = 0;
    std::vector<std::vector<Multidegree>> classes;  // classes[k], sorted
};

ExtTable ext_classes(const MonomialModule& src, const MonomialModule& tgt,
                     int max_k, int max_degree);

// Dimension count per total degree 0..max_degree.
std::vector<long> total_degree_series(const std::vector<Multidegree>& classes, int max_degree);

// Drops leading zeros; returns the shift (first nonzero index, -1 if all
// zero) and the remaining series.
struct AlignedSeries {
    int shift = -1;
    std::vector<long> series;
};
AlignedSeries align_series(const std::vector<long>& raw);

// Morphisms in the stabilized quotient category: per parity i, the common
// aligned dimension series of Ext^{2k+i} over a plateau of `window`
// consecutive k >= 1, plus the first such k.  Raises input_error when no
// plateau fits below max_k (truncation too small).
struct SgHomTable {
    int n = 0;
    int max_k = 0;
    int max_degree = 0;
    int window = 0;
    std::array<AlignedSeries, 2> stabilized;
    std::array<int, 2> k_star{};
};

SgHomTable sg_stabilized_dims(const MonomialModule& src, const MonomialModule& tgt,
                              int max_k, int max_degree, int window = 3);

// Mirror module of an object label: the canonical representative without 0
// gives S directly; the distinguished label {0} maps to the free module
// (S = full set).
MonomialModule mirror_module(const PantsLabel& L);

// Aligned-series comparison of the two sides, one row per cohomological
// degree: the degree-k slice of the pants morphism space (total doubled
// degree over slots 1..n+1, collapsed to integers) against the Ext^k total
// degree series.  Both are aligned by first nonzero degree and compared up
// to max_degree - (n+2).
struct CompareRow {
    int k = 0;
    bool pass = false;
    int hw_shift = -1;   // empirical alignment data, recorded per row
    int ext_shift = -1;
    std::vector<long> hw_aligned;
    std::vector<long> ext_aligned;
};

struct CompareReport {
    PantsLabel I, J;
    int max_k = 0;
    int max_degree = 0;
    bool pass = false;
    std::vector<CompareRow> rows;
};

CompareReport compare_hw_ext(int n, const PantsLabel& I, const PantsLabel& J,
                             int max_k, int max_degree);

}  // namespace hms

#endif
