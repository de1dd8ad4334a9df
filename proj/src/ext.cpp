#include "hms/ext.hpp"

#include <algorithm>

#include "hms/errors.hpp"

namespace hms {

Mask ext_full_mask(int n) { return ((1u << (n + 1)) - 1u) << 1; }

void validate_module(const MonomialModule& m) {
    if (m.n < 1) throw input_error("module dimension must be >= 1");
    if (m.S == 0) throw input_error("module subset must be nonempty");
    if ((m.S & ~ext_full_mask(m.n)) != 0)
        throw input_error("module subset must lie in {1..n+1}");
}

int multidegree_total(const Multidegree& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
}

namespace {

// Variable bit j (1..n+1) corresponds to exponent slot j-1.
bool divisible(const Multidegree& e, Mask block) {
    for (int j : mask_to_indices(block))
        if (e[j - 1] < 1) return false;
    return true;
}

// Zero in the target module: divisible by its defining block or by the full
// product (the ambient relation).
bool zero_in_module(const Multidegree& e, const MonomialModule& tgt) {
    return divisible(e, tgt.S) || divisible(e, ext_full_mask(tgt.n));
}

Multidegree plus_block(const Multidegree& e, Mask block) {
    Multidegree out = e;
    for (int j : mask_to_indices(block)) ++out[j - 1];
    return out;
}

}  // namespace

std::vector<Multidegree> module_basis(const MonomialModule& m, int max_degree) {
    validate_module(m);
    if (max_degree < 0) throw input_error("module_basis: negative bound");
    std::vector<Multidegree> out;
    Multidegree e(m.n + 1, 0);
    auto recurse = [&](auto&& self, int slot, int used) -> void {
        if (slot == m.n + 1) {
            if (!zero_in_module(e, m)) out.push_back(e);
            return;
        }
        for (int d = 0; used + d <= max_degree; ++d) {
            e[slot] = d;
            self(self, slot + 1, used + d);
        }
        e[slot] = 0;
    };
    recurse(recurse, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

ExtTable ext_classes(const MonomialModule& src, const MonomialModule& tgt,
                     int max_k, int max_degree) {
    validate_module(src);
    validate_module(tgt);
    if (src.n != tgt.n) throw input_error("ext_classes: modules of different dimension");
    if (max_k < 0) throw input_error("ext_classes: negative cohomological bound");
    if (max_degree < 0) throw input_error("ext_classes: negative degree bound");

    ExtTable table;
    table.n = src.n;
    table.max_k = max_k;
    table.max_degree = max_degree;
    table.classes.resize(max_k + 1);

    const auto basis = module_basis(tgt, max_degree);

    if (src.S == ext_full_mask(src.n)) {
        // Free source: the resolution degenerates, morphisms are the target
        // itself in degree zero.
        table.classes[0] = basis;
        return table;
    }

    const Mask even_block = src.S;
    const Mask odd_block = src.S ^ ext_full_mask(src.n);
    for (int k = 0; k <= max_k; ++k) {
        const Mask step = (k % 2 == 0) ? even_block : odd_block;
        const Mask prev = (k % 2 == 0) ? odd_block : even_block;
        for (const auto& e : basis) {
            if (!zero_in_module(plus_block(e, step), tgt)) continue;  // not in the kernel
            if (k > 0 && divisible(e, prev)) continue;                // in the image
            table.classes[k].push_back(e);
        }
    }
    return table;
}

std::vector<long> total_degree_series(const std::vector<Multidegree>& classes, int max_degree) {
    std::vector<long> series(max_degree + 1, 0);
    for (const auto& e : classes) {
        const int d = multidegree_total(e);
        if (d <= max_degree) ++series[d];
    }
    return series;
}

AlignedSeries align_series(const std::vector<long>& raw) {
    AlignedSeries out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] != 0) {
            out.shift = static_cast<int>(i);
            out.series.assign(raw.begin() + out.shift, raw.end());
            return out;
        }
    }
    return out;  // all zero: shift -1, empty series
}

namespace {

// Truncate an aligned series to the guard length so plateau and equality
// tests never read past what both operands reliably know.
std::vector<long> guard_truncate(const AlignedSeries& a, int guard) {
    if (a.shift < 0 || guard <= 0) return {};
    std::vector<long> out = a.series;
    if (static_cast<int>(out.size()) > guard) out.resize(guard);
    return out;
}

}  // namespace

SgHomTable sg_stabilized_dims(const MonomialModule& src, const MonomialModule& tgt,
                              int max_k, int max_degree, int window) {
    if (window < 1) throw input_error("sg_stabilized_dims: window must be >= 1");
    const auto table = ext_classes(src, tgt, max_k, max_degree);
    const int guard = max_degree - (src.n + 2);

    SgHomTable sg;
    sg.n = src.n;
    sg.max_k = max_k;
    sg.max_degree = max_degree;
    sg.window = window;

    for (int parity = 0; parity <= 1; ++parity) {
        std::vector<std::pair<int, AlignedSeries>> rows;  // (k, aligned Ext^{2k+parity})
        for (int k = 1; 2 * k + parity <= max_k; ++k)
            rows.emplace_back(k, align_series(total_degree_series(
                                     table.classes[2 * k + parity], max_degree)));
        bool found = false;
        for (std::size_t start = 0; start + window <= rows.size() && !found; ++start) {
            bool flat = true;
            for (int w = 1; w < window && flat; ++w) {
                if (guard_truncate(rows[start].second, guard) !=
                        guard_truncate(rows[start + w].second, guard) ||
                    (rows[start].second.shift < 0) != (rows[start + w].second.shift < 0))
                    flat = false;
            }
            if (flat) {
                sg.stabilized[parity] = rows[start].second;
                sg.stabilized[parity].series = guard_truncate(rows[start].second, guard);
                sg.k_star[parity] = rows[start].first;
                found = true;
            }
        }
        if (!found)
            throw input_error("sg_stabilized_dims: no plateau below max_k (truncation too small)");
    }
    return sg;
}

MonomialModule mirror_module(const PantsLabel& L) {
    MonomialModule m;
    m.n = L.n;
    if (L.members == 1u) {
        m.S = ext_full_mask(L.n);
    } else if (L.members & 1u) {
        throw input_error("mirror_module: label must be canonical");
    } else {
        m.S = L.members;
    }
    return m;
}

CompareReport compare_hw_ext(int n, const PantsLabel& I, const PantsLabel& J,
                             int max_k, int max_degree) {
    if (max_k < 0 || max_degree < 0) throw input_error("compare_hw_ext: negative bound");
    if (I.n != n || J.n != n) throw input_error("compare_hw_ext: label dimension mismatch");
    CompareReport report;
    report.I = I;
    report.J = J;
    report.max_k = max_k;
    report.max_degree = max_degree;

    // Total doubled degree can spend max_k on slot 0 and 2*max_degree+1 on
    // the rest, so this bound keeps every compared slice complete.
    const auto basis = hw_basis(I, J, max_k + 2 * max_degree + 2);
    const auto table = ext_classes(mirror_module(I), mirror_module(J), max_k, max_degree);
    const int guard = max_degree - (n + 2);

    report.pass = true;
    for (int k = 0; k <= max_k; ++k) {
        CompareRow row;
        row.k = k;

        std::vector<long> hw_raw(max_degree + 1, 0);
        for (const auto& m : basis.elements) {
            if (degree(m) != k) continue;
            const int internal = (total_doubled(m) - degree(m)) / 2;
            if (internal <= max_degree) ++hw_raw[internal];
        }
        const auto hw = align_series(hw_raw);
        const auto ext = align_series(total_degree_series(table.classes[k], max_degree));

        row.hw_shift = hw.shift;
        row.ext_shift = ext.shift;
        row.hw_aligned = guard_truncate(hw, guard);
        row.ext_aligned = guard_truncate(ext, guard);
        row.pass = ((hw.shift < 0) == (ext.shift < 0)) && row.hw_aligned == row.ext_aligned;
        if (!row.pass) report.pass = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace hms
