#include "hms/toric.hpp"

#include <algorithm>
#include <set>

namespace hms {

namespace {

std::vector<int> active_terms(const Subdivision& P, std::size_t term_count) {
    std::vector<bool> seen(term_count, false);
    for (const auto& cell : P.cells)
        for (int idx : cell) seen[idx] = true;
    std::vector<int> active;
    for (std::size_t t = 0; t < term_count; ++t)
        if (seen[t]) active.push_back(static_cast<int>(t));
    return active;
}

}  // namespace

Fan build_fan(const Subdivision& P, const LaurentPolySpec& spec) {
    validate_spec(spec);
    if (P.n != spec.n) throw input_error("build_fan: dimension mismatch");

    Fan fan;
    fan.ambient_dim = spec.n + 1;
    const auto active = active_terms(P, spec.terms.size());
    std::vector<int> ray_of_term(spec.terms.size(), -1);
    for (int t : active) {
        LatticePoint ray(spec.n + 1);
        for (int j = 0; j < spec.n; ++j) ray[j] = -spec.terms[t].alpha[j];
        ray[spec.n] = 1;  // last coordinate 1 keeps the vector primitive
        ray_of_term[t] = static_cast<int>(fan.rays.size());
        fan.rays.push_back(std::move(ray));
        fan.ray_terms.push_back(t);
    }

    for (const auto& cell : P.cells) {
        ConeRec cone;
        cone.maximal = true;
        for (int idx : cell) cone.ray_indices.push_back(ray_of_term[idx]);
        if (static_cast<int>(cell.size()) == spec.n + 1) {
            std::vector<std::vector<Int>> m;
            m.reserve(cell.size());
            for (int idx : cone.ray_indices) {
                std::vector<Int> row(fan.rays[idx].begin(), fan.rays[idx].end());
                m.push_back(std::move(row));
            }
            const Int det = integer_determinant(m);
            cone.smooth = (det == 1 || det == -1);
        } else {
            cone.smooth = false;
        }
        fan.cones.push_back(std::move(cone));
    }
    return fan;
}

MomentPolytope moment_polytope(const LaurentPolySpec& spec) {
    const auto P = regular_subdivision(spec);
    MomentPolytope poly;
    poly.n = spec.n;
    for (int t : active_terms(P, spec.terms.size())) {
        Facet f;
        f.alpha = spec.terms[t].alpha;
        f.rho = spec.terms[t].rho;
        f.term = t;
        poly.facets.push_back(std::move(f));
    }
    return poly;
}

DivisorIncidence divisor_incidence(const Subdivision& P) {
    for (const auto& cell : P.cells)
        if (static_cast<int>(cell.size()) != P.n + 1)
            throw input_error("divisor_incidence requires a simplicial subdivision");

    std::set<std::vector<int>> strata;
    for (const auto& cell : P.cells) {
        const int k = static_cast<int>(cell.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            if (__builtin_popcount(mask) < 2) continue;
            std::vector<int> face;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) face.push_back(cell[i]);
            strata.insert(std::move(face));
        }
    }
    DivisorIncidence inc;
    inc.strata.assign(strata.begin(), strata.end());
    return inc;
}

LaurentPolySpec knorrer_hat(const LaurentPolySpec& spec) {
    validate_spec(spec);
    LaurentPolySpec out;
    out.n = spec.n + 1;
    for (const auto& t : spec.terms) {
        SpecTerm lifted = t;
        lifted.alpha.push_back(0);
        out.terms.push_back(std::move(lifted));
    }
    SpecTerm hat;
    hat.alpha.assign(out.n, 0);
    hat.alpha[out.n - 1] = 1;
    hat.rho = 0;
    hat.coeff = "1";
    out.terms.push_back(std::move(hat));
    return out;
}

}  // namespace hms
