#include <random>

#include "doctest.h"
#include "hms/builtin_specs.hpp"
#include "hms/geometry.hpp"
#include "hms/tropical.hpp"
#include "oracles.hpp"

using namespace hms;

namespace {

std::vector<std::vector<Int>> int_matrix(const std::vector<std::vector<long>>& m) {
    std::vector<std::vector<Int>> out;
    for (const auto& row : m) out.emplace_back(row.begin(), row.end());
    return out;
}

LatticePoint pt(std::initializer_list<long> coords) { return LatticePoint(coords.begin(), coords.end()); }

std::vector<LiftedPoint> lift_spec(const LaurentPolySpec& spec) {
    std::vector<LiftedPoint> out;
    for (const auto& t : spec.terms) out.push_back({t.alpha, t.rho});
    return out;
}

std::vector<std::vector<int>> cell_members(const std::vector<HullCell>& cells) {
    std::vector<std::vector<int>> out;
    for (const auto& c : cells) out.push_back(c.members);
    return out;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("determinant small cases") {
    CHECK(integer_determinant(int_matrix({{2}})) == 2);
    CHECK(integer_determinant(int_matrix({{1, 2}, {3, 4}})) == -2);
    CHECK(integer_determinant(int_matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
    CHECK(integer_determinant(int_matrix({{1, 2}, {2, 4}})) == 0);
    for (int d = 1; d <= 6; ++d) {
        std::vector<std::vector<Int>> eye(d, std::vector<Int>(d, 0));
        for (int i = 0; i < d; ++i) eye[i][i] = 1;
        CHECK(integer_determinant(eye) == 1);
    }
}

TEST_CASE("determinant input validation") {
    CHECK_THROWS_AS(integer_determinant({}), input_error);
    CHECK_THROWS_AS(integer_determinant(int_matrix({{1, 2}})), input_error);
    CHECK_THROWS_AS(integer_determinant(int_matrix({{1, 2}, {3, 4}, {5, 6}})), input_error);
}

TEST_CASE("determinant row swap flips sign") {
    auto m = int_matrix({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}});
    const Int d = integer_determinant(m);
    std::swap(m[0], m[2]);
    CHECK(integer_determinant(m) == -d);
}

TEST_CASE("determinant agrees with cofactor expansion on random matrices") {
    std::mt19937 rng(12345u);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = dim(rng);
        std::vector<std::vector<Int>> m(d, std::vector<Int>(d));
        for (auto& row : m)
            for (auto& v : row) v = entry(rng);
        CHECK(integer_determinant(m) == oracles::cofactor_determinant(m));
    }
}

TEST_CASE("unimodular simplex recognition") {
    CHECK(is_unimodular_simplex({pt({0, 0}), pt({1, 0}), pt({0, 1})}));
    CHECK(is_unimodular_simplex({pt({5, 7}), pt({6, 7}), pt({5, 8})}));
    CHECK(is_unimodular_simplex({pt({0, 0}), pt({1, 0}), pt({1, 1})}));
    CHECK_FALSE(is_unimodular_simplex({pt({0, 0}), pt({2, 0}), pt({0, 1})}));
    CHECK_FALSE(is_unimodular_simplex({pt({0, 0}), pt({1, 1}), pt({-1, 1})}));
    CHECK(is_unimodular_simplex({pt({0}), pt({1})}));
    CHECK_FALSE(is_unimodular_simplex({pt({0}), pt({2})}));
    CHECK_THROWS_AS(is_unimodular_simplex({pt({0, 0}), pt({1, 0})}), input_error);
    CHECK_THROWS_AS(is_unimodular_simplex({pt({0, 0}), pt({1, 0}), pt({0})}), input_error);
}

TEST_CASE("affine rank") {
    CHECK(affine_rank({pt({3, 3})}) == 0);
    CHECK(affine_rank({pt({0, 0}), pt({1, 1}), pt({2, 2})}) == 1);
    CHECK(affine_rank({pt({0, 0}), pt({1, 0}), pt({0, 1})}) == 2);
    CHECK(affine_rank({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0})}) == 2);
}

TEST_CASE("linear solve") {
    auto sol = solve_linear({{Rat(2), Rat(1)}, {Rat(1), Rat(3)}}, {Rat(5), Rat(10)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rat(1));
    CHECK((*sol)[1] == Rat(3));
    CHECK_FALSE(solve_linear({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, {Rat(1), Rat(1)}).has_value());
}

TEST_CASE("simplex volume") {
    CHECK(simplex_volume({pt({0, 0}), pt({1, 0}), pt({0, 1})}) == Rat(1, 2));
    CHECK(simplex_volume({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}) ==
          Rat(1, 6));
    CHECK(simplex_volume({pt({0, 0}), pt({2, 0}), pt({0, 3})}) == Rat(3));
}

TEST_CASE("convex hull membership") {
    const std::vector<LatticePoint> tri = {pt({0, 0}), pt({4, 0}), pt({0, 4})};
    CHECK(point_in_convex_hull(pt({1, 1}), tri));
    CHECK(point_in_convex_hull(pt({0, 0}), tri));
    CHECK(point_in_convex_hull(pt({2, 0}), tri));
    CHECK(point_in_convex_hull(pt({2, 2}), tri));
    CHECK_FALSE(point_in_convex_hull(pt({3, 3}), tri));
    CHECK_FALSE(point_in_convex_hull(pt({-1, 0}), tri));
}

TEST_CASE("lower hull of the flat pants lift is a single simplex") {
    for (int n = 1; n <= 4; ++n) {
        const auto points = lift_spec(pants_spec(n));
        const auto cells = lower_hull(points);
        REQUIRE(cells.size() == 1);
        std::vector<int> expect(n + 1);
        for (int i = 0; i <= n; ++i) expect[i] = i;
        CHECK(cells[0].members == expect);
        for (const auto& c : cells[0].normal) CHECK(c == Rat(0));
        CHECK(cells[0].offset == Rat(0));
        CHECK(oracles::verify_hull(points, cells));
    }
}

TEST_CASE("lower hull golden cells for the lifted examples") {
    const auto p1 = lower_hull(lift_spec(local_pn_spec(1)));
    CHECK(cell_members(p1) == std::vector<std::vector<int>>{{0, 2}, {1, 2}});

    const auto p2 = lower_hull(lift_spec(local_pn_spec(2)));
    CHECK(cell_members(p2) == std::vector<std::vector<int>>{{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});

    const auto h = lower_hull(lift_spec(hirzebruch3_spec()));
    CHECK(cell_members(h) == std::vector<std::vector<int>>{
                                 {0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 4}, {1, 3, 4}});

    CHECK(oracles::verify_hull(lift_spec(local_pn_spec(1)), p1));
    CHECK(oracles::verify_hull(lift_spec(local_pn_spec(2)), p2));
    CHECK(oracles::verify_hull(lift_spec(hirzebruch3_spec()), h));
}

TEST_CASE("hull cells tile the exponent hull") {
    // degree-3 ruled surface: five half-unit triangles tile the triangle
    // spanned by the three extreme exponents, total area 5/2
    const auto spec = hirzebruch3_spec();
    const auto cells = lower_hull(lift_spec(spec));
    Rat total(0);
    for (const auto& c : cells) {
        std::vector<LatticePoint> verts;
        for (int i : c.members) verts.push_back(spec.terms[i].alpha);
        const Rat vol = simplex_volume(verts);
        CHECK(vol == Rat(1, 2));
        total += vol;
    }
    CHECK(total == Rat(5, 2));
    const std::vector<LatticePoint> extremes = {spec.terms[1].alpha, spec.terms[2].alpha,
                                                spec.terms[4].alpha};
    CHECK(simplex_volume(extremes) == Rat(5, 2));
    CHECK(point_in_convex_hull(spec.terms[0].alpha, extremes));
    CHECK(point_in_convex_hull(spec.terms[3].alpha, extremes));
}

TEST_CASE("lower hull input validation") {
    CHECK_THROWS_AS(lower_hull({{pt({0, 0}), Rat(0)}, {pt({0, 0}), Rat(1)}, {pt({1, 0}), Rat(0)}}),
                    input_error);
    CHECK_THROWS_AS(lower_hull({{pt({0, 0}), Rat(0)}, {pt({1, 1}), Rat(0)}, {pt({2, 2}), Rat(0)}}),
                    input_error);
    CHECK_THROWS_AS(lower_hull({}), input_error);
}

TEST_CASE("parallel hull matches serial reference on random instances") {
    std::mt19937 rng(777u);
    std::uniform_int_distribution<int> coord(-5, 5);
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 6);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<LiftedPoint> points = {{pt({0, 0}), Rat(0)}};
        auto have = [&](const LatticePoint& b) {
            for (const auto& p : points)
                if (p.base == b) return true;
            return false;
        };
        const LatticePoint e1 = pt({1, 0}), e2 = pt({0, 1});
        points.push_back({e1, Rat(num(rng), den(rng))});
        points.push_back({e2, Rat(num(rng), den(rng))});
        for (int extra = 0; extra < 6; ++extra) {
            LatticePoint b = pt({coord(rng), coord(rng)});
            if (!have(b)) points.push_back({b, Rat(num(rng), den(rng))});
        }
        const auto fast = lower_hull(points);
        const auto slow = lower_hull_serial(points);
        CHECK(cell_members(fast) == cell_members(slow));
        CHECK(oracles::verify_hull(points, fast));
    }
}

}  // TEST_SUITE
