#ifndef HMS_PANTS_HPP
#define HMS_PANTS_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hms/errors.hpp"

namespace hms {

// Subsets of {0, .., n+1} as bitmasks (bit j = element j).
using Mask = unsigned;

inline Mask full_mask(int n) { return (1u << (n + 2)) - 1u; }
std::vector<int> mask_to_indices(Mask m);
Mask indices_to_mask(const std::vector<int>& indices, int n);

// Object label: a proper nonempty subset of {0, .., n+1} up to complement,
// stored canonically.  The representative avoids 0, except that the pair
// {0} ~ {1, .., n+1} is stored as {0}.
struct PantsLabel {
    int n = 0;
    Mask members = 0;
    bool operator==(const PantsLabel&) const = default;
    bool operator<(const PantsLabel& o) const {
        return n != o.n ? n < o.n : members < o.members;
    }
};

PantsLabel canonical_label(Mask members, int n);
PantsLabel canonical_label(const std::vector<int>& members, int n);
std::vector<PantsLabel> canonical_labels(int n);

// One direct summand of a morphism space: a quotient of the polynomial ring
// on z_0..z_{n+1} by two monomial ideals, twisted by the square root of the
// variables in parity_support.
struct Summand {
    Mask parity_support = 0;
    Mask ideal_a = 0;
    Mask ideal_b = 0;
    bool dead = false;  // an ideal generated by the empty product kills the summand
};

// Q = (I cap J) u (Ic cap Jc) and its complement; the Qbar-parity summand is
// cut out by (z_{I cap J}, z_{Ic cap Jc}) and the Q-parity summand by
// (z_{I cap Jc}, z_{Ic cap J}).
struct PairDecomposition {
    int n = 0;
    Mask Q = 0;
    Mask Qbar = 0;
    Summand qbar_summand;
    Summand q_summand;
};

PairDecomposition pair_decomposition(const PantsLabel& I, const PantsLabel& J);
// Same arithmetic on raw representatives (no canonicalization); used to
// check that complementing either label permutes the summands only.
PairDecomposition pair_decomposition_raw(Mask I, Mask J, int n);

// Basis monomial with doubled exponents d_j = 2 k_j; odd entries mark square
// roots.  The cohomological degree of the element is d_0, and the doubled
// vector is also its class in the half-integer lattice.
struct HalfMonomial {
    std::vector<int> doubled;
    bool operator==(const HalfMonomial&) const = default;
    bool operator<(const HalfMonomial& o) const { return doubled < o.doubled; }
};

inline int degree(const HalfMonomial& m) { return m.doubled.empty() ? 0 : m.doubled[0]; }
int total_doubled(const HalfMonomial& m);
Mask parity_support(const HalfMonomial& m);

// Membership in one summand: parity pattern matches and the monomial is
// divisible by neither ideal generator.
bool member_of(const HalfMonomial& m, const Summand& s);
bool element_of_pair(const HalfMonomial& m, const PairDecomposition& dec);

// Dimension counts: outer key is the cohomological degree (or a parity
// class for localized results), inner key the total doubled degree over
// slots 1..n+1.
struct GradedDims {
    std::map<int, std::map<int, long>> dims;
    int truncation = 0;
};

struct HwBasis {
    PairDecomposition dec;
    std::vector<HalfMonomial> elements;  // sorted by doubled vector
    GradedDims graded;
    int bound = 0;  // enumeration bound on the total doubled degree
};

// All basis elements of the morphism space with total doubled degree (over
// all n+2 slots) at most the bound.
HwBasis hw_basis(const PantsLabel& I, const PantsLabel& J, int max_total_doubled);
// Enumeration from a prebuilt decomposition; lets tests drive raw
// representatives through the same engine.
std::vector<HalfMonomial> hw_basis_elements(const PairDecomposition& dec, int max_total_doubled);

// Composition product: componentwise sum of doubled vectors, zero (nullopt)
// when the sum is divisible by an ideal of the target space.  Inputs that
// fail membership for their own spaces raise input_error.
std::optional<HalfMonomial> mu2(const PantsLabel& I, const PantsLabel& J, const PantsLabel& K,
                                const HalfMonomial& a, const HalfMonomial& b);

// Surviving z_0-towers of the colimit under repeated multiplication by z_0:
// the internal exponent tuples (doubled d_1..d_{n+1}) per parity class,
// sorted.  Survival never depends on the slot-0 exponent, so each tower is
// listed once.
std::array<std::vector<std::vector<int>>, 2> localized_hw_towers(const PantsLabel& I,
                                                                 const PantsLabel& J,
                                                                 int truncation);

// Colimit dimensions per parity class (outer key 0/1) and total doubled
// degree over slots 1..n+1 (inner key).
GradedDims localized_hw_dims(const PantsLabel& I, const PantsLabel& J, int truncation);

// Partition triangle L_I -> L_K -> L_J -> L_I[1] with 0 in K; connecting
// morphisms are the square roots of the complementary variable blocks.
struct Triangle {
    int n = 0;
    Mask I = 0, J = 0, K = 0;
    HalfMonomial uJ, uI, uK;
};

std::vector<Triangle> enumerate_triangles(int n);

struct TriangleCheck {
    bool memberships_ok = false;
    bool compositions_zero = false;
    bool class_target_is_identity = false;
    bool identity_piece_one_dimensional = false;
    bool pass = false;
    std::string detail;
};

// Verifies connecting-morphism membership, vanishing of the consecutive
// compositions, and that the three classes sum to the identity class after
// the (2-k) half-shift with k = 3.  Malformed partitions raise input_error.
TriangleCheck check_triangle(const Triangle& t);

}  // namespace hms

#endif
