#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "hms/pants.hpp"
#include "oracles.hpp"

using namespace hms;

namespace {

HalfMonomial hm(std::initializer_list<int> doubled) {
    HalfMonomial m;
    m.doubled.assign(doubled.begin(), doubled.end());
    return m;
}

PantsLabel lab(std::initializer_list<int> members, int n) {
    return canonical_label(std::vector<int>(members.begin(), members.end()), n);
}

std::set<HalfMonomial> element_set(const PairDecomposition& dec, int bound) {
    const auto v = hw_basis_elements(dec, bound);
    return {v.begin(), v.end()};
}

// slot permutation acting on monomials and label masks
HalfMonomial permute(const HalfMonomial& m, const std::vector<int>& perm) {
    HalfMonomial out;
    out.doubled.assign(m.doubled.size(), 0);
    for (std::size_t j = 0; j < m.doubled.size(); ++j) out.doubled[perm[j]] = m.doubled[j];
    return out;
}

Mask permute_mask(Mask m, const std::vector<int>& perm) {
    Mask out = 0;
    for (std::size_t j = 0; j < perm.size(); ++j)
        if (m & (1u << j)) out |= 1u << perm[j];
    return out;
}

}  // namespace

TEST_SUITE("pants") {

TEST_CASE("canonical label representatives") {
    CHECK(canonical_label(std::vector<int>{1}, 1).members == 2u);
    CHECK(canonical_label(std::vector<int>{0}, 1).members == 1u);
    // complement rule: a representative containing 0 flips, except {0} itself
    CHECK(canonical_label(std::vector<int>{0, 1}, 1).members == 4u);
    CHECK(canonical_label(std::vector<int>{1, 2}, 1).members == 1u);
    CHECK(canonical_label(std::vector<int>{0, 3}, 2).members == 6u);
    CHECK(canonical_label(std::vector<int>{1, 2, 3}, 2).members == 1u);
    // errors: empty, full, out of range
    CHECK_THROWS_AS(canonical_label(0u, 1), input_error);
    CHECK_THROWS_AS(canonical_label(full_mask(1), 1), input_error);
    CHECK_THROWS_AS(canonical_label(std::vector<int>{3}, 1), input_error);
    CHECK_THROWS_AS(canonical_label(2u, -1), input_error);
}

TEST_CASE("canonical label counts") {
    CHECK(canonical_labels(0).size() == 1);  // the point model keeps only {0}
    CHECK(canonical_labels(1).size() == 3);
    CHECK(canonical_labels(2).size() == 7);
    CHECK(canonical_labels(3).size() == 15);
    for (int n = 1; n <= 3; ++n)
        CHECK(canonical_labels(n).size() == (1u << (n + 1)) - 1);
    const auto l1 = canonical_labels(1);
    CHECK(l1[0].members == 1u);
    CHECK(l1[1].members == 2u);
    CHECK(l1[2].members == 4u);
}

TEST_CASE("pair decomposition splits by parity support") {
    // equal labels: live summand on even parity, odd summand dead
    const auto same = pair_decomposition(lab({1}, 1), lab({1}, 1));
    CHECK(same.Q == 7u);
    CHECK(same.Qbar == 0u);
    CHECK_FALSE(same.qbar_summand.dead);
    CHECK(same.qbar_summand.ideal_a == 2u);
    CHECK(same.qbar_summand.ideal_b == 5u);
    CHECK(same.q_summand.dead);

    // disjoint labels: live summand on the symmetric difference
    const auto cross = pair_decomposition(lab({1}, 1), lab({2}, 1));
    CHECK(cross.Q == 1u);
    CHECK(cross.qbar_summand.dead);
    CHECK_FALSE(cross.q_summand.dead);
    CHECK(cross.q_summand.parity_support == 1u);
    CHECK(cross.q_summand.ideal_a == 2u);
    CHECK(cross.q_summand.ideal_b == 4u);

    CHECK_THROWS_AS(pair_decomposition(lab({1}, 1), lab({1}, 2)), input_error);
}

TEST_CASE("endomorphism bases are the expected quotient rings") {
    // End(L_0) = C[z_1,z_2]/(z_1 z_2): unit plus pure powers, degree 0
    const auto e0 = hw_basis(lab({0}, 1), lab({0}, 1), 6);
    std::set<HalfMonomial> expect;
    expect.insert(hm({0, 0, 0}));
    for (int d = 2; d <= 6; d += 2) {
        expect.insert(hm({0, d, 0}));
        expect.insert(hm({0, 0, d}));
    }
    CHECK(element_set(e0.dec, 6) == expect);
    for (const auto& m : e0.elements) CHECK(degree(m) == 0);

    // End(L_1) = C[z_2,z_0]/(z_2 z_0): z_0 carries degree 2
    const auto e1 = hw_basis(lab({1}, 1), lab({1}, 1), 4);
    std::vector<HalfMonomial> expect1 = {hm({0, 0, 0}), hm({0, 0, 2}), hm({0, 0, 4}),
                                         hm({2, 0, 0}), hm({4, 0, 0})};
    CHECK(e1.elements == expect1);
    CHECK(degree(e1.elements[3]) == 2);
    CHECK(e1.graded.dims.at(0) == std::map<int, long>{{0, 1}, {2, 1}, {4, 1}});
    CHECK(e1.graded.dims.at(2) == std::map<int, long>{{0, 1}});
    CHECK(e1.graded.dims.at(4) == std::map<int, long>{{0, 1}});
}

TEST_CASE("bimodule bases and generator degrees") {
    // Hom(L_1,L_2) = C[z_0] u with u = z_0^{1/2} in degree 1
    const auto b12 = hw_basis(lab({1}, 1), lab({2}, 1), 5);
    CHECK(b12.elements == std::vector<HalfMonomial>{hm({1, 0, 0}), hm({3, 0, 0}), hm({5, 0, 0})});
    CHECK(degree(b12.elements[0]) == 1);
    CHECK(degree(b12.elements[1]) == 3);
    CHECK(degree(b12.elements[2]) == 5);

    // Hom(L_0,L_1) = C[z_2] u with u = z_2^{1/2} in degree 0
    const auto b01 = hw_basis(lab({0}, 1), lab({1}, 1), 5);
    CHECK(b01.elements == std::vector<HalfMonomial>{hm({0, 0, 1}), hm({0, 0, 3}), hm({0, 0, 5})});
    for (const auto& m : b01.elements) CHECK(degree(m) == 0);

    // Hom(L_2,L_0) = C[z_1] u with u = z_1^{1/2} in degree 0
    const auto b20 = hw_basis(lab({2}, 1), lab({0}, 1), 5);
    CHECK(b20.elements == std::vector<HalfMonomial>{hm({0, 1, 0}), hm({0, 3, 0}), hm({0, 5, 0})});

    // morphism spaces are direction-symmetric as sets in this model
    CHECK(element_set(pair_decomposition(lab({2}, 1), lab({1}, 1)), 5) ==
          std::set<HalfMonomial>(b12.elements.begin(), b12.elements.end()));
}

TEST_CASE("degree zero slice in two dimensions") {
    const auto basis = hw_basis(lab({1}, 2), lab({1}, 2), 4);
    std::vector<HalfMonomial> slice;
    for (const auto& m : basis.elements)
        if (degree(m) == 0) slice.push_back(m);
    const std::vector<HalfMonomial> expect = {hm({0, 0, 0, 0}), hm({0, 0, 0, 2}),
                                              hm({0, 0, 0, 4}), hm({0, 0, 2, 0}),
                                              hm({0, 0, 2, 2}), hm({0, 0, 4, 0})};
    CHECK(slice == expect);
}

TEST_CASE("graded dimension bookkeeping matches the element list") {
    for (int n = 1; n <= 2; ++n)
        for (const auto& I : canonical_labels(n))
            for (const auto& J : canonical_labels(n)) {
                const auto basis = hw_basis(I, J, 8);
                std::map<int, std::map<int, long>> recount;
                for (const auto& m : basis.elements)
                    ++recount[degree(m)][total_doubled(m) - degree(m)];
                CHECK(basis.graded.dims == recount);
            }
}

TEST_CASE("composition golden table") {
    const auto L0 = lab({0}, 1), L1 = lab({1}, 1), L2 = lab({2}, 1);
    const auto u12 = hm({1, 0, 0});
    const auto u01 = hm({0, 0, 1});
    const auto u20 = hm({0, 1, 0});

    // the three squares of connecting morphisms hit the corner variables
    auto r = mu2(L1, L2, L1, u12, u12);
    REQUIRE(r.has_value());
    CHECK(*r == hm({2, 0, 0}));
    r = mu2(L0, L1, L0, u01, u01);
    REQUIRE(r.has_value());
    CHECK(*r == hm({0, 0, 2}));
    r = mu2(L2, L0, L2, u20, u20);
    REQUIRE(r.has_value());
    CHECK(*r == hm({0, 2, 0}));

    // consecutive sides of the distinguished triangle compose to zero
    CHECK_FALSE(mu2(L0, L1, L2, u01, u12).has_value());
    CHECK_FALSE(mu2(L1, L2, L0, u12, u20).has_value());
    CHECK_FALSE(mu2(L2, L0, L1, u20, u01).has_value());

    // polynomial module structure of the bimodule C[z_2] u
    r = mu2(L0, L0, L1, hm({0, 0, 2}), u01);
    REQUIRE(r.has_value());
    CHECK(*r == hm({0, 0, 3}));
    CHECK_FALSE(mu2(L0, L0, L1, hm({0, 2, 0}), u01).has_value());  // z_1 annihilates
}

TEST_CASE("composition input validation") {
    const auto L1 = lab({1}, 1), L2 = lab({2}, 1);
    CHECK_THROWS_AS(mu2(L1, L2, L1, hm({2, 0, 0}), hm({1, 0, 0})), input_error);
    CHECK_THROWS_AS(mu2(L1, L2, L1, hm({1, 0}), hm({1, 0, 0})), input_error);
    CHECK_THROWS_AS(mu2(L1, L2, lab({1}, 2), hm({1, 0, 0}), hm({1, 0, 0})), input_error);
}

TEST_CASE("unit laws") {
    for (int n = 1; n <= 2; ++n)
        for (const auto& I : canonical_labels(n))
            for (const auto& J : canonical_labels(n)) {
                HalfMonomial unit;
                unit.doubled.assign(n + 2, 0);
                CHECK(element_of_pair(unit, pair_decomposition(I, I)));
                for (const auto& b : hw_basis(I, J, 6).elements) {
                    auto left = mu2(I, I, J, unit, b);
                    REQUIRE(left.has_value());
                    CHECK(*left == b);
                    auto right = mu2(I, J, J, b, unit);
                    REQUIRE(right.has_value());
                    CHECK(*right == b);
                }
            }
}

TEST_CASE("complementing either label leaves the morphism space unchanged") {
    for (int n = 1; n <= 3; ++n) {
        const Mask full = full_mask(n);
        for (Mask I = 1; I < full; ++I)
            for (Mask J = 1; J < full; ++J) {
                const auto base = element_set(pair_decomposition_raw(I, J, n), 8);
                CHECK(element_set(pair_decomposition_raw(I ^ full, J, n), 8) == base);
                CHECK(element_set(pair_decomposition_raw(I, J ^ full, n), 8) == base);
                CHECK(element_set(pair_decomposition_raw(I ^ full, J ^ full, n), 8) == base);
            }
    }
}

TEST_CASE("composition is associative and degree-additive") {
    for (int n = 1; n <= 2; ++n) {
        const auto labels = canonical_labels(n);
        const int bound = 8;
        // bases grouped per ordered pair, sorted by total doubled degree
        std::map<std::pair<Mask, Mask>, std::vector<HalfMonomial>> basis;
        for (const auto& I : labels)
            for (const auto& J : labels) {
                auto v = hw_basis(I, J, bound).elements;
                std::stable_sort(v.begin(), v.end(),
                                 [](const HalfMonomial& a, const HalfMonomial& b) {
                                     return total_doubled(a) < total_doubled(b);
                                 });
                basis[{I.members, J.members}] = std::move(v);
            }
        for (const auto& I : labels)
            for (const auto& J : labels)
                for (const auto& K : labels)
                    for (const auto& L : labels) {
                        const auto& as = basis[{I.members, J.members}];
                        const auto& bs = basis[{J.members, K.members}];
                        const auto& cs = basis[{K.members, L.members}];
                        for (const auto& a : as) {
                            if (total_doubled(a) > bound) break;
                            for (const auto& b : bs) {
                                const int tab = total_doubled(a) + total_doubled(b);
                                if (tab > bound) break;
                                const auto ab = mu2(I, J, K, a, b);
                                if (ab)
                                    for (std::size_t j = 0; j < ab->doubled.size(); ++j)
                                        CHECK(ab->doubled[j] == a.doubled[j] + b.doubled[j]);
                                for (const auto& c : cs) {
                                    if (tab + total_doubled(c) > bound) break;
                                    const auto bc = mu2(J, K, L, b, c);
                                    const auto lhs =
                                        ab ? mu2(I, K, L, *ab, c) : std::nullopt;
                                    const auto rhs =
                                        bc ? mu2(I, J, L, a, *bc) : std::nullopt;
                                    CHECK(lhs == rhs);
                                }
                            }
                        }
                    }
    }
}

TEST_CASE("index permutations act on bases and products") {
    const int n = 2;
    // images of slots 0..3 under a transposition fixing 0, a 3-cycle fixing
    // 0, and a transposition moving 0
    const std::vector<std::vector<int>> perms = {
        {0, 2, 1, 3}, {0, 2, 3, 1}, {1, 0, 2, 3}};
    const auto labels = canonical_labels(n);
    for (const auto& perm : perms) {
        for (const auto& I : labels)
            for (const auto& J : labels) {
                const auto pI = canonical_label(permute_mask(I.members, perm), n);
                const auto pJ = canonical_label(permute_mask(J.members, perm), n);
                std::set<HalfMonomial> mapped;
                for (const auto& m : hw_basis(I, J, 6).elements) mapped.insert(permute(m, perm));
                const auto direct = element_set(pair_decomposition(pI, pJ), 6);
                CHECK(mapped == direct);
            }
        // equivariance of composition on all short triples
        for (const auto& I : labels)
            for (const auto& J : labels)
                for (const auto& K : labels) {
                    const auto pI = canonical_label(permute_mask(I.members, perm), n);
                    const auto pJ = canonical_label(permute_mask(J.members, perm), n);
                    const auto pK = canonical_label(permute_mask(K.members, perm), n);
                    for (const auto& a : hw_basis(I, J, 4).elements)
                        for (const auto& b : hw_basis(J, K, 4).elements) {
                            const auto direct = mu2(I, J, K, a, b);
                            const auto mapped = mu2(pI, pJ, pK, permute(a, perm), permute(b, perm));
                            if (direct) {
                                REQUIRE(mapped.has_value());
                                CHECK(*mapped == permute(*direct, perm));
                            } else {
                                CHECK_FALSE(mapped.has_value());
                            }
                        }
                }
    }
}

TEST_CASE("localization keeps only towers unbounded in the base class") {
    // endomorphisms of L_1: the even tower of z_0 powers survives
    auto dims = localized_hw_dims(lab({1}, 1), lab({1}, 1), 6);
    CHECK(dims.dims.at(0) == std::map<int, long>{{0, 1}});
    CHECK(dims.dims.at(1).empty());

    // crossing pair: the odd tower survives
    dims = localized_hw_dims(lab({1}, 1), lab({2}, 1), 6);
    CHECK(dims.dims.at(0).empty());
    CHECK(dims.dims.at(1) == std::map<int, long>{{0, 1}});

    // both ideals of End(L_0) contain the base class only on one side
    dims = localized_hw_dims(lab({0}, 1), lab({0}, 1), 6);
    CHECK(dims.dims.at(0).empty());
    CHECK(dims.dims.at(1).empty());

    const auto towers = localized_hw_towers(lab({1}, 1), lab({1}, 1), 6);
    CHECK(towers[0] == std::vector<std::vector<int>>{{0, 0}});
    CHECK(towers[1].empty());

    CHECK_THROWS_AS(localized_hw_towers(lab({1}, 1), lab({1}, 1), -1), input_error);
}

TEST_CASE("localized dimensions match the brute force colimit") {
    for (int n = 1; n <= 2; ++n)
        for (const auto& I : canonical_labels(n))
            for (const auto& J : canonical_labels(n)) {
                const auto fast = localized_hw_dims(I, J, 6);
                const auto brute = oracles::localized_dims_empirical(I, J, 6);
                CHECK(fast.dims.at(0) == brute[0]);
                CHECK(fast.dims.at(1) == brute[1]);
            }
}

TEST_CASE("triangle enumeration counts") {
    CHECK(enumerate_triangles(1).size() == 2);
    CHECK(enumerate_triangles(2).size() == 12);
    CHECK(enumerate_triangles(3).size() == 50);
    CHECK_THROWS_AS(enumerate_triangles(0), input_error);
}

TEST_CASE("triangle checks pass on every partition") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_triangles(n)) {
            const auto check = check_triangle(t);
            CHECK(check.memberships_ok);
            CHECK(check.compositions_zero);
            CHECK(check.class_target_is_identity);
            CHECK(check.identity_piece_one_dimensional);
            CHECK(check.pass);
        }
}

TEST_CASE("triangle validation rejects malformed partitions") {
    auto t = enumerate_triangles(1)[0];
    auto bad = t;
    bad.I |= bad.J;  // overlap
    CHECK_THROWS_AS(check_triangle(bad), input_error);
    bad = t;
    std::swap(bad.I, bad.K);  // 0 leaves the third part
    CHECK_THROWS_AS(check_triangle(bad), input_error);
    bad = t;
    bad.J = 0;
    bad.I = full_mask(1) & ~bad.K;
    CHECK_THROWS_AS(check_triangle(bad), input_error);
}

TEST_CASE("enumeration bound is respected") {
    const auto basis = hw_basis(lab({1}, 1), lab({2}, 1), 0);
    CHECK(basis.elements.empty());  // the generator already has total 1
    CHECK_THROWS_AS(hw_basis(lab({1}, 1), lab({2}, 1), -1), input_error);
}

}  // TEST_SUITE
