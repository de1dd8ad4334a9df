#ifndef HMS_TORIC_HPP
#define HMS_TORIC_HPP

#include "hms/tropical.hpp"

namespace hms {

// One cone of the mirror fan, referencing positions in Fan::rays.
struct ConeRec {
    std::vector<int> ray_indices;
    bool maximal = true;
    bool smooth = false;  // ray matrix determinant +-1 (requires simplicial)
};

// Fan in Z^{n+1} with one ray (-alpha, 1) per hull-active term and one
// maximal cone per subdivision cell.  Rays are automatically primitive.
struct Fan {
    int ambient_dim = 0;
    std::vector<LatticePoint> rays;
    std::vector<int> ray_terms;  // term index generating each ray
    std::vector<ConeRec> cones;
};

Fan build_fan(const Subdivision& P, const LaurentPolySpec& spec);

// Facet eta >= <alpha, xi> - rho of the noncompact moment polytope, one per
// hull-active term (terms strictly above the lower hull cut nothing out).
struct Facet {
    LatticePoint alpha;
    Rat rho;
    int term = -1;
};

struct MomentPolytope {
    int n = 0;
    std::vector<Facet> facets;
};

MomentPolytope moment_polytope(const LaurentPolySpec& spec);

// Strata of the zero fiber: every face of dimension >= 1 of the subdivision,
// recorded by the divisor indices meeting along it.  Requires a simplicial
// subdivision (faces of a simplex are its subsets).
struct DivisorIncidence {
    std::vector<std::vector<int>> strata;
};

DivisorIncidence divisor_incidence(const Subdivision& P);

// Stabilization-by-one-variable construction: appends the exponent
// (0,..,0,1) with height 0 and lifts every existing exponent by a zero
// coordinate.  Iterating on the n-pants spec reproduces the (n+1)-pants
// spec up to term order.
LaurentPolySpec knorrer_hat(const LaurentPolySpec& spec);

}  // namespace hms

#endif
