#ifndef HMS_TROPICAL_HPP
#define HMS_TROPICAL_HPP

#include <string>
#include <vector>

#include "hms/geometry.hpp"

namespace hms {

// One Laurent term: exponent alpha, height rho, inert coefficient text.
// The coefficient (and any formal deformation parameter inside it) never
// enters computation.
struct SpecTerm {
    LatticePoint alpha;
    Rat rho;
    std::string coeff;
};

struct LaurentPolySpec {
    int n = 0;
    std::vector<SpecTerm> terms;
};

// Checks dimensions, pairwise distinct exponents, and term count >= n+1.
void validate_spec(const LaurentPolySpec& spec);

// Piecewise-linear max of the affine forms <alpha, xi> - rho(alpha).
struct TropicalFunction {
    int n = 0;
    std::vector<SpecTerm> forms;
};

TropicalFunction tropical_function(const LaurentPolySpec& spec);

struct TropicalValue {
    Rat value;
    std::vector<int> argmax;  // |argmax| >= 2 iff xi lies on the tropical hypersurface
};

TropicalValue tropical_eval(const TropicalFunction& phi, const std::vector<Rat>& xi);

// Regular subdivision induced by the heights: maximal lower-hull cells of
// the lifted exponents, as index sets into the term list.
struct Subdivision {
    int n = 0;
    std::vector<std::vector<int>> cells;
    std::vector<HullCell> hull_cells;  // parallel to cells, carries hyperplanes
};

Subdivision regular_subdivision(const LaurentPolySpec& spec);

struct DegenerationReport {
    bool all_cells_simplicial = false;
    bool all_cells_unimodular = false;
    bool vertices_exactly_A = false;
    bool zero_in_every_maximal_cell = false;
    std::vector<std::vector<int>> offending_cells;
    std::vector<int> missing_terms;  // term indices on no cell (empty when vertices_exactly_A)
};

DegenerationReport degeneration_report(const LaurentPolySpec& spec, const Subdivision& P);

struct RegionClass {
    bool on_hypersurface = false;
    int region = -1;  // unique argmax term index when off the hypersurface
    std::vector<int> argmax;
};

RegionClass region_classify(const LaurentPolySpec& spec, const std::vector<Rat>& xi);

}  // namespace hms

#endif
