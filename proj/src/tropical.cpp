#include "hms/tropical.hpp"

#include <algorithm>

namespace hms {

void validate_spec(const LaurentPolySpec& spec) {
    if (spec.n <= 0) throw input_error("spec dimension must be positive");
    if (static_cast<int>(spec.terms.size()) < spec.n + 1)
        throw input_error("spec needs at least n+1 terms");
    for (const auto& t : spec.terms)
        if (static_cast<int>(t.alpha.size()) != spec.n)
            throw input_error("spec term exponent has wrong dimension");
    for (std::size_t i = 0; i < spec.terms.size(); ++i)
        for (std::size_t j = i + 1; j < spec.terms.size(); ++j)
            if (spec.terms[i].alpha == spec.terms[j].alpha)
                throw input_error("spec exponents must be pairwise distinct");
}

TropicalFunction tropical_function(const LaurentPolySpec& spec) {
    validate_spec(spec);
    return TropicalFunction{spec.n, spec.terms};
}

TropicalValue tropical_eval(const TropicalFunction& phi, const std::vector<Rat>& xi) {
    if (static_cast<int>(xi.size()) != phi.n)
        throw input_error("tropical_eval: point dimension mismatch");
    TropicalValue result;
    bool first = true;
    for (std::size_t t = 0; t < phi.forms.size(); ++t) {
        Rat v = -phi.forms[t].rho;
        for (int j = 0; j < phi.n; ++j) v += Rat(phi.forms[t].alpha[j]) * xi[j];
        if (first || v > result.value) {
            result.value = v;
            result.argmax.assign(1, static_cast<int>(t));
            first = false;
        } else if (v == result.value) {
            result.argmax.push_back(static_cast<int>(t));
        }
    }
    return result;
}

Subdivision regular_subdivision(const LaurentPolySpec& spec) {
    validate_spec(spec);
    std::vector<LiftedPoint> lifted;
    lifted.reserve(spec.terms.size());
    for (const auto& t : spec.terms) lifted.push_back({t.alpha, t.rho});
    Subdivision P;
    P.n = spec.n;
    P.hull_cells = lower_hull(lifted);
    for (const auto& c : P.hull_cells) P.cells.push_back(c.members);
    return P;
}

DegenerationReport degeneration_report(const LaurentPolySpec& spec, const Subdivision& P) {
    DegenerationReport report;
    report.all_cells_simplicial = true;
    report.all_cells_unimodular = true;
    report.vertices_exactly_A = true;
    report.zero_in_every_maximal_cell = true;

    int zero_index = -1;
    for (std::size_t t = 0; t < spec.terms.size(); ++t) {
        if (std::all_of(spec.terms[t].alpha.begin(), spec.terms[t].alpha.end(),
                        [](const Int& c) { return c == 0; })) {
            zero_index = static_cast<int>(t);
            break;
        }
    }

    std::vector<bool> seen(spec.terms.size(), false);
    for (const auto& cell : P.cells) {
        bool offending = false;
        std::vector<LatticePoint> verts;
        verts.reserve(cell.size());
        for (int idx : cell) {
            seen[idx] = true;
            verts.push_back(spec.terms[idx].alpha);
        }

        const bool simplicial = static_cast<int>(cell.size()) == spec.n + 1;
        if (!simplicial) {
            report.all_cells_simplicial = false;
            report.all_cells_unimodular = false;
            offending = true;
        } else if (!is_unimodular_simplex(verts)) {
            report.all_cells_unimodular = false;
            offending = true;
        }

        // Every listed member must be an actual vertex of the cell.
        for (std::size_t i = 0; i < verts.size(); ++i) {
            std::vector<LatticePoint> others;
            for (std::size_t j = 0; j < verts.size(); ++j)
                if (j != i) others.push_back(verts[j]);
            if (point_in_convex_hull(verts[i], others)) {
                report.vertices_exactly_A = false;
                offending = true;
                break;
            }
        }

        if (zero_index < 0 ||
            std::find(cell.begin(), cell.end(), zero_index) == cell.end()) {
            report.zero_in_every_maximal_cell = false;
            offending = true;
        }

        if (offending) report.offending_cells.push_back(cell);
    }

    for (std::size_t t = 0; t < spec.terms.size(); ++t)
        if (!seen[t]) report.missing_terms.push_back(static_cast<int>(t));
    if (!report.missing_terms.empty()) report.vertices_exactly_A = false;

    return report;
}

RegionClass region_classify(const LaurentPolySpec& spec, const std::vector<Rat>& xi) {
    const auto value = tropical_eval(tropical_function(spec), xi);
    RegionClass rc;
    rc.argmax = value.argmax;
    rc.on_hypersurface = value.argmax.size() >= 2;
    if (!rc.on_hypersurface) rc.region = value.argmax[0];
    return rc;
}

}  // namespace hms
