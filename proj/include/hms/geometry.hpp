#ifndef HMS_GEOMETRY_HPP
#define HMS_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "hms/rational.hpp"

namespace hms {

using LatticePoint = std::vector<Int>;

struct LiftedPoint {
    LatticePoint base;
    Rat height;
};

// Exact determinant by fraction-free (Bareiss) elimination.
// Throws input_error on non-square or empty input.
Int integer_determinant(const std::vector<std::vector<Int>>& matrix);

// True iff the d+1 vertices span a simplex whose edge matrix from
// vertices[0] has determinant +-1.  Throws input_error on a wrong vertex
// count or mixed dimensions.
bool is_unimodular_simplex(const std::vector<LatticePoint>& vertices);

// Dimension of the affine span of the points.
int affine_rank(const std::vector<LatticePoint>& points);

// Exact solve of a square rational system; nullopt when singular.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> lhs,
                                             std::vector<Rat> rhs);

// A maximal lower-hull face: member indices plus its supporting hyperplane
// height = <normal, xi> + offset (all points satisfy height >= that value,
// members with equality).
struct HullCell {
    std::vector<int> members;
    std::vector<Rat> normal;
    Rat offset;
};

// Maximal faces of the lower convex hull of lifted points, as index sets in
// canonical order (members ascending, cells lexicographic).  Preconditions:
// pairwise distinct bases (input_error) and full-dimensional affine span of
// the bases (input_error, "degenerate span").  Brute force over candidate
// supporting hyperplanes through (n+1)-subsets; exact arithmetic throughout.
std::vector<HullCell> lower_hull(const std::vector<LiftedPoint>& points);

// Single-threaded reference implementation with identical output.
std::vector<HullCell> lower_hull_serial(const std::vector<LiftedPoint>& points);

// Volume of a d-simplex given d+1 vertices: |det(edge matrix)| / d!.
Rat simplex_volume(const std::vector<LatticePoint>& vertices);

// Exact convex-hull membership via Caratheodory: x lies in conv(generators)
// iff some affinely independent subset of size <= d+1 contains it with
// nonnegative barycentric coordinates.
bool point_in_convex_hull(const LatticePoint& x, const std::vector<LatticePoint>& generators);

}  // namespace hms

#endif
