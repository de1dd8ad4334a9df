#ifndef HMS_FUNCTORS_HPP
#define HMS_FUNCTORS_HPP

#include <string>
#include <vector>

#include "hms/ext.hpp"
#include "hms/pants.hpp"
#include "hms/rational.hpp"

namespace hms {

// Symbolic object on one side of the mirror dictionary.  Labels are bitmasks
// whose meaning depends on the side: object labels over {0..n+1} on the
// complement side, subsets of {1..n} on the hypersurface/divisor sides,
// subsets of {1..n+1} on the sheaf side (full set = the whole zero fiber).
enum class Side {
    WrappedComplement,
    WrappedHypersurface,
    CohZ,
    CohD,
    FsCategory,
};

struct ObjectRef {
    Side side = Side::WrappedComplement;
    int n = 0;        // pants dimension of the ambient category
    bool zero = false;
    Mask label = 0;
    int shift = 0;    // reduced mod 2 on the hypersurface/divisor sides
    bool operator==(const ObjectRef&) const = default;
};

ObjectRef complement_object(const PantsLabel& L);
std::string object_name(const ObjectRef& o);

// Restriction to the hypersurface: subsets of {1..n} map to the divisor
// label unshifted, adjoining 0 shifts by one, and the distinguished label
// {0} dies.  Labels containing n+1 are complemented first.
ObjectRef rho_object(const ObjectRef& L);

// Lifting: divisor label I in {1..n} back to the complement object L_I.
// Right inverse to restriction on the nose.
ObjectRef j_object(const ObjectRef& l);

// Stabilized image of a sheaf on the zero fiber: O of the coordinate union
// indexed by S in {1..n} keeps its label, S containing n+1 complements and
// shifts, and the structure sheaf of the whole fiber dies.
ObjectRef sg_image(const ObjectRef& F);

// The object dictionary between the two sides, invertible on labels.
ObjectRef mirror_assignment(const ObjectRef& x);
ObjectRef mirror_assignment_inverse(const ObjectRef& x);

struct SquareRow {
    Mask label = 0;
    std::string via_restriction;  // mirror(rho(L))
    std::string via_sheaf;        // sg(mirror(L))
    bool ok = false;
};

struct MorphismRow {
    Mask I = 0, J = 0;
    bool tuple_match = false;   // localized towers vs smaller pants basis, exact
    bool series_match = false;  // localized series vs stabilized Ext series
    std::string detail;
};

struct FunctorReport {
    int n = 0;
    bool object_pass = false;
    bool morphism_pass = false;
    std::vector<SquareRow> objects;
    std::vector<MorphismRow> morphisms;
};

// Object-level commutation of restriction against the sheaf-side quotient,
// plus the morphism-dimension identities: for every ordered pair of labels,
// the localized tower multiset equals the (n-1)-pants basis multiset of the
// restricted objects under the slot dictionary (slot 0 of the smaller pants
// is slot n+1 upstairs), and the localized dimension series per parity
// equals the stabilized Ext series of the mirror modules.
FunctorReport check_square(int n, int truncation, int max_k, int max_degree, int window = 3);

struct FsMaps {
    int n = 0;
    ObjectRef alpha0_image;    // acceleration toward the origin fiber
    ObjectRef alphainf_image;  // acceleration toward infinity
    int fs_polynomial_generators = 0;
    Triangle triangle;
    bool triangle_found = false;
    bool rho_alphainf_zero = false;
};

// Images of the admissible generator under the two acceleration functors,
// the polynomial presentation of its endomorphisms, and the distinguished
// triangle tying the three objects together (cross-checked against the
// triangle enumeration).
FsMaps fs_generator_maps(int n);

struct LocalPnDims {
    Int closed_form;
    Int brute_force;
};

// Dimension of the weight-d endomorphism piece for the local projective
// example: monomials of degree (n+1)d in n+1 variables avoiding the full
// product, by the binomial formula and by direct enumeration.
LocalPnDims local_pn_dims(int n, int d);

// Generator count of the torus endomorphism ring within the exponent box
// [-bound, bound]^n; the product is exponent addition, all in degree 0.
Int torus_endo_dims(int n, int box_bound);

}  // namespace hms

#endif
