#include <algorithm>
#include <set>
#include <utility>

#include "doctest.h"
#include "hms/builtin_specs.hpp"
#include "hms/toric.hpp"

using namespace hms;

namespace {

std::set<std::pair<LatticePoint, Rat>> term_set(const LaurentPolySpec& spec) {
    std::set<std::pair<LatticePoint, Rat>> out;
    for (const auto& t : spec.terms) out.insert({t.alpha, t.rho});
    return out;
}

LatticePoint pt(std::initializer_list<long> coords) { return LatticePoint(coords.begin(), coords.end()); }

}  // namespace

TEST_SUITE("toric") {

TEST_CASE("fan over the flat pants subdivision is a single smooth cone") {
    for (int n = 1; n <= 4; ++n) {
        const auto spec = pants_spec(n);
        const auto fan = build_fan(regular_subdivision(spec), spec);
        CHECK(fan.ambient_dim == n + 1);
        REQUIRE(fan.rays.size() == static_cast<std::size_t>(n + 1));
        for (int i = 0; i < n; ++i) {
            LatticePoint expect(n + 1, 0);
            expect[i] = -1;
            expect[n] = 1;
            CHECK(fan.rays[i] == expect);
        }
        LatticePoint last(n + 1, 0);
        last[n] = 1;
        CHECK(fan.rays[n] == last);
        REQUIRE(fan.cones.size() == 1);
        CHECK(fan.cones[0].maximal);
        CHECK(fan.cones[0].smooth);
        std::vector<int> expect_rays(n + 1);
        for (int i = 0; i <= n; ++i) expect_rays[i] = i;
        CHECK(fan.cones[0].ray_indices == expect_rays);
        // the single cone is the positive orthant in suitable coordinates
        std::vector<std::vector<Int>> m;
        for (const auto& r : fan.rays) m.emplace_back(r.begin(), r.end());
        const Int det = integer_determinant(m);
        CHECK((det == 1 || det == -1));
    }
}

TEST_CASE("fan of the shifted product example has three smooth cones") {
    const auto spec = local_pn_spec(2);
    const auto fan = build_fan(regular_subdivision(spec), spec);
    CHECK(fan.ambient_dim == 3);
    REQUIRE(fan.rays.size() == 4);
    CHECK(fan.rays[0] == pt({-1, 0, 1}));
    CHECK(fan.rays[1] == pt({0, -1, 1}));
    CHECK(fan.rays[2] == pt({1, 1, 1}));
    CHECK(fan.rays[3] == pt({0, 0, 1}));
    CHECK(fan.ray_terms == std::vector<int>{0, 1, 2, 3});
    REQUIRE(fan.cones.size() == 3);
    std::vector<std::vector<int>> cone_rays;
    for (const auto& c : fan.cones) {
        CHECK(c.smooth);
        cone_rays.push_back(c.ray_indices);
    }
    CHECK(cone_rays == std::vector<std::vector<int>>{{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

TEST_CASE("fan of the ruled surface example is smooth with five cones") {
    const auto spec = hirzebruch3_spec();
    const auto fan = build_fan(regular_subdivision(spec), spec);
    CHECK(fan.ambient_dim == 3);
    REQUIRE(fan.rays.size() == 5);
    CHECK(fan.rays[0] == pt({0, 0, 1}));
    CHECK(fan.rays[1] == pt({1, 0, 1}));
    CHECK(fan.rays[2] == pt({0, 1, 1}));
    CHECK(fan.rays[3] == pt({0, -1, 1}));
    CHECK(fan.rays[4] == pt({-1, -3, 1}));
    REQUIRE(fan.cones.size() == 5);
    for (const auto& c : fan.cones) CHECK(c.smooth);
}

TEST_CASE("terms above the hull contribute no ray") {
    LaurentPolySpec spec{1, {{{-1}, Rat(0), "1"}, {{0}, Rat(1), "t"}, {{1}, Rat(0), "1"}}};
    const auto fan = build_fan(regular_subdivision(spec), spec);
    REQUIRE(fan.rays.size() == 2);
    CHECK(fan.rays[0] == pt({1, 1}));
    CHECK(fan.rays[1] == pt({-1, 1}));
    CHECK(fan.ray_terms == std::vector<int>{0, 2});
    REQUIRE(fan.cones.size() == 1);
    CHECK_FALSE(fan.cones[0].smooth);  // index-2 sublattice
}

TEST_CASE("fan construction validates dimensions") {
    const auto spec = pants_spec(2);
    auto P = regular_subdivision(spec);
    P.n = 1;
    CHECK_THROWS_AS(build_fan(P, spec), input_error);
}

TEST_CASE("moment polytope facets") {
    const auto poly = moment_polytope(pants_spec(2));
    CHECK(poly.n == 2);
    REQUIRE(poly.facets.size() == 3);
    CHECK(poly.facets[0].alpha == pt({1, 0}));
    CHECK(poly.facets[1].alpha == pt({0, 1}));
    CHECK(poly.facets[2].alpha == pt({0, 0}));
    for (const auto& f : poly.facets) CHECK(f.rho == Rat(0));

    const auto ruled = moment_polytope(hirzebruch3_spec());
    CHECK(ruled.facets.size() == 5);
    CHECK(ruled.facets[3].rho == Rat(1));
    CHECK(ruled.facets[4].rho == Rat(4));

    // hull-inactive terms cut out nothing
    LaurentPolySpec spec{1, {{{-1}, Rat(0), "1"}, {{0}, Rat(1), "t"}, {{1}, Rat(0), "1"}}};
    const auto gap = moment_polytope(spec);
    REQUIRE(gap.facets.size() == 2);
    CHECK(gap.facets[0].term == 0);
    CHECK(gap.facets[1].term == 2);
}

TEST_CASE("divisor incidence strata of the shifted product example") {
    const auto inc = divisor_incidence(regular_subdivision(local_pn_spec(2)));
    const std::vector<std::vector<int>> expect = {
        {0, 1}, {0, 1, 3}, {0, 2}, {0, 2, 3}, {0, 3}, {1, 2}, {1, 2, 3}, {1, 3}, {2, 3}};
    CHECK(inc.strata == expect);
}

TEST_CASE("divisor incidence requires simplicial cells") {
    LaurentPolySpec square{2,
                           {{{0, 0}, Rat(0), "1"},
                            {{1, 0}, Rat(0), "1"},
                            {{0, 1}, Rat(0), "1"},
                            {{1, 1}, Rat(0), "1"}}};
    const auto P = regular_subdivision(square);
    REQUIRE(P.cells == std::vector<std::vector<int>>{{0, 1, 2, 3}});
    CHECK_THROWS_AS(divisor_incidence(P), input_error);
}

TEST_CASE("stabilization reproduces the next pants spec") {
    for (int n = 1; n <= 3; ++n) {
        const auto lifted = knorrer_hat(pants_spec(n));
        const auto target = pants_spec(n + 1);
        CHECK(lifted.n == target.n);
        CHECK(term_set(lifted) == term_set(target));
    }
}

TEST_CASE("stabilization preserves the degeneration flags") {
    auto spec = local_pn_spec(2);
    for (int round = 0; round < 2; ++round) {
        spec = knorrer_hat(spec);
        const auto rep = degeneration_report(spec, regular_subdivision(spec));
        CHECK(rep.all_cells_simplicial);
        CHECK(rep.all_cells_unimodular);
        CHECK(rep.vertices_exactly_A);
        CHECK(rep.zero_in_every_maximal_cell);
    }
    CHECK(spec.n == 4);
    CHECK(spec.terms.size() == 6);
}

}  // TEST_SUITE
