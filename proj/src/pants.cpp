#include "hms/pants.hpp"

#include <algorithm>

namespace hms {

std::vector<int> mask_to_indices(Mask m) {
    std::vector<int> out;
    for (int j = 0; m; ++j, m >>= 1)
        if (m & 1u) out.push_back(j);
    return out;
}

Mask indices_to_mask(const std::vector<int>& indices, int n) {
    Mask m = 0;
    for (int j : indices) {
        if (j < 0 || j > n + 1) throw input_error("label index out of range 0..n+1");
        m |= 1u << j;
    }
    return m;
}

PantsLabel canonical_label(Mask members, int n) {
    if (n < 0) throw input_error("label dimension must be >= 0");
    const Mask full = full_mask(n);
    if ((members & ~full) != 0) throw input_error("label index out of range 0..n+1");
    if (members == 0 || members == full) throw input_error("label must be a proper nonempty subset");
    if (members == 1u) return {n, 1u};
    if (members == (full ^ 1u)) return {n, 1u};  // {1,..,n+1} ~ {0}
    if (members & 1u) return {n, static_cast<Mask>(members ^ full)};
    return {n, members};
}

PantsLabel canonical_label(const std::vector<int>& members, int n) {
    return canonical_label(indices_to_mask(members, n), n);
}

std::vector<PantsLabel> canonical_labels(int n) {
    std::vector<PantsLabel> out;
    const Mask full = full_mask(n);
    for (Mask m = 1; m < full; ++m) {
        const PantsLabel l = canonical_label(m, n);
        if (l.members == m) out.push_back(l);
    }
    return out;
}

PairDecomposition pair_decomposition_raw(Mask I, Mask J, int n) {
    const Mask full = full_mask(n);
    const Mask Ic = I ^ full, Jc = J ^ full;
    PairDecomposition dec;
    dec.n = n;
    dec.Q = (I & J) | (Ic & Jc);
    dec.Qbar = dec.Q ^ full;

    dec.qbar_summand.parity_support = dec.Qbar;
    dec.qbar_summand.ideal_a = I & J;
    dec.qbar_summand.ideal_b = Ic & Jc;
    dec.qbar_summand.dead = (dec.qbar_summand.ideal_a == 0) || (dec.qbar_summand.ideal_b == 0);

    dec.q_summand.parity_support = dec.Q;
    dec.q_summand.ideal_a = I & Jc;
    dec.q_summand.ideal_b = Ic & J;
    dec.q_summand.dead = (dec.q_summand.ideal_a == 0) || (dec.q_summand.ideal_b == 0);
    return dec;
}

PairDecomposition pair_decomposition(const PantsLabel& I, const PantsLabel& J) {
    if (I.n != J.n) throw input_error("pair_decomposition: labels of different dimension");
    return pair_decomposition_raw(I.members, J.members, I.n);
}

int total_doubled(const HalfMonomial& m) {
    int s = 0;
    for (int d : m.doubled) s += d;
    return s;
}

Mask parity_support(const HalfMonomial& m) {
    Mask p = 0;
    for (std::size_t j = 0; j < m.doubled.size(); ++j)
        if (m.doubled[j] & 1) p |= 1u << j;
    return p;
}

namespace {

// True iff every slot of the mask carries doubled exponent >= 2, i.e. the
// monomial is divisible by the product of the mask's variables.
bool divisible_by_block(const HalfMonomial& m, Mask block) {
    for (int j : mask_to_indices(block))
        if (m.doubled[j] < 2) return false;
    return true;
}

}  // namespace

bool member_of(const HalfMonomial& m, const Summand& s) {
    if (s.dead) return false;
    if (parity_support(m) != s.parity_support) return false;
    return !divisible_by_block(m, s.ideal_a) && !divisible_by_block(m, s.ideal_b);
}

bool element_of_pair(const HalfMonomial& m, const PairDecomposition& dec) {
    return member_of(m, dec.qbar_summand) || member_of(m, dec.q_summand);
}

namespace {

void enumerate_summand(const Summand& s, int slots, int bound,
                       std::vector<HalfMonomial>& out) {
    if (s.dead) return;
    HalfMonomial m;
    m.doubled.assign(slots, 0);
    int base = 0;
    for (int j = 0; j < slots; ++j)
        if (s.parity_support & (1u << j)) {
            m.doubled[j] = 1;
            ++base;
        }
    if (base > bound) return;

    auto recurse = [&](auto&& self, int slot, int used) -> void {
        if (slot == slots) {
            if (!divisible_by_block(m, s.ideal_a) && !divisible_by_block(m, s.ideal_b))
                out.push_back(m);
            return;
        }
        const int start = m.doubled[slot];
        for (int d = start; used - start + d <= bound; d += 2) {
            m.doubled[slot] = d;
            self(self, slot + 1, used - start + d);
        }
        m.doubled[slot] = start;
    };
    recurse(recurse, 0, base);
}

}  // namespace

std::vector<HalfMonomial> hw_basis_elements(const PairDecomposition& dec, int max_total_doubled) {
    if (max_total_doubled < 0) throw input_error("hw_basis: negative bound");
    std::vector<HalfMonomial> out;
    enumerate_summand(dec.qbar_summand, dec.n + 2, max_total_doubled, out);
    enumerate_summand(dec.q_summand, dec.n + 2, max_total_doubled, out);
    std::sort(out.begin(), out.end());
    return out;
}

HwBasis hw_basis(const PantsLabel& I, const PantsLabel& J, int max_total_doubled) {
    HwBasis basis;
    basis.dec = pair_decomposition(I, J);
    basis.bound = max_total_doubled;
    basis.elements = hw_basis_elements(basis.dec, max_total_doubled);
    basis.graded.truncation = max_total_doubled;
    for (const auto& m : basis.elements)
        ++basis.graded.dims[degree(m)][total_doubled(m) - degree(m)];
    return basis;
}

std::optional<HalfMonomial> mu2(const PantsLabel& I, const PantsLabel& J, const PantsLabel& K,
                                const HalfMonomial& a, const HalfMonomial& b) {
    if (I.n != J.n || J.n != K.n) throw input_error("mu2: labels of different dimension");
    const int slots = I.n + 2;
    if (static_cast<int>(a.doubled.size()) != slots || static_cast<int>(b.doubled.size()) != slots)
        throw input_error("mu2: malformed generator (wrong slot count)");
    if (!element_of_pair(a, pair_decomposition(I, J)))
        throw input_error("mu2: first factor is not a basis element of its space");
    if (!element_of_pair(b, pair_decomposition(J, K)))
        throw input_error("mu2: second factor is not a basis element of its space");

    HalfMonomial sum;
    sum.doubled.resize(slots);
    for (int j = 0; j < slots; ++j) sum.doubled[j] = a.doubled[j] + b.doubled[j];

    const auto dec = pair_decomposition(I, K);
    const Mask p = parity_support(sum);
    // The parity of a composite always lands on Q or Qbar of the outer pair.
    const Summand& s = (p == dec.q_summand.parity_support) ? dec.q_summand : dec.qbar_summand;
    if (p != s.parity_support) throw input_error("mu2: parity mismatch of inputs");
    if (!member_of(sum, s)) return std::nullopt;
    return sum;
}

std::array<std::vector<std::vector<int>>, 2> localized_hw_towers(const PantsLabel& I,
                                                                 const PantsLabel& J,
                                                                 int truncation) {
    if (truncation < 0) throw input_error("localized_hw_towers: negative truncation");
    const auto dec = pair_decomposition(I, J);
    std::array<std::vector<std::vector<int>>, 2> out;

    for (const Summand* s : {&dec.qbar_summand, &dec.q_summand}) {
        if (s->dead) continue;
        const int parity = (s->parity_support & 1u) ? 1 : 0;
        const int slots = dec.n + 2;

        // Tower survival per ideal: a variable of the block other than z_0
        // must stay below doubled exponent 2.  A block equal to {0} alone
        // can never satisfy that, so such towers die.
        auto survives = [&](const HalfMonomial& internal) {
            for (Mask block : {s->ideal_a, s->ideal_b}) {
                bool ok = false;
                for (int j : mask_to_indices(block))
                    if (j >= 1 && internal.doubled[j] <= 1) { ok = true; break; }
                if (!ok) return false;
            }
            return true;
        };

        HalfMonomial m;
        m.doubled.assign(slots, 0);
        if (s->parity_support & 1u) m.doubled[0] = 1;
        int base = 0;
        for (int j = 1; j < slots; ++j)
            if (s->parity_support & (1u << j)) {
                m.doubled[j] = 1;
                ++base;
            }
        if (base > truncation) continue;
        auto recurse = [&](auto&& self, int slot, int used) -> void {
            if (slot == slots) {
                if (survives(m))
                    out[parity].emplace_back(m.doubled.begin() + 1, m.doubled.end());
                return;
            }
            const int start = m.doubled[slot];
            for (int d = start; used - start + d <= truncation; d += 2) {
                m.doubled[slot] = d;
                self(self, slot + 1, used - start + d);
            }
            m.doubled[slot] = start;
        };
        recurse(recurse, 1, base);  // slot 0 fixed: towers are counted once
    }
    std::sort(out[0].begin(), out[0].end());
    std::sort(out[1].begin(), out[1].end());
    return out;
}

GradedDims localized_hw_dims(const PantsLabel& I, const PantsLabel& J, int truncation) {
    const auto towers = localized_hw_towers(I, J, truncation);
    GradedDims out;
    out.truncation = truncation;
    out.dims[0];
    out.dims[1];
    for (int parity = 0; parity < 2; ++parity)
        for (const auto& t : towers[parity]) {
            int total = 0;
            for (int d : t) total += d;
            ++out.dims[parity][total];
        }
    return out;
}

std::vector<Triangle> enumerate_triangles(int n) {
    if (n < 1) throw input_error("enumerate_triangles: n must be >= 1");
    std::vector<Triangle> out;
    const int movable = n + 1;  // elements 1..n+1; 0 always joins K
    std::vector<int> assign(movable, 0);
    while (true) {
        Mask I = 0, J = 0, K = 1u;
        for (int e = 0; e < movable; ++e) {
            const Mask bit = 1u << (e + 1);
            if (assign[e] == 0) I |= bit;
            else if (assign[e] == 1) J |= bit;
            else K |= bit;
        }
        if (I != 0 && J != 0) {
            Triangle t;
            t.n = n;
            t.I = I;
            t.J = J;
            t.K = K;
            const int slots = n + 2;
            t.uJ.doubled.assign(slots, 0);
            t.uI.doubled.assign(slots, 0);
            t.uK.doubled.assign(slots, 0);
            for (int j = 0; j < slots; ++j) {
                if (J & (1u << j)) t.uJ.doubled[j] = 1;
                if (I & (1u << j)) t.uI.doubled[j] = 1;
                if (K & (1u << j)) t.uK.doubled[j] = 1;
            }
            out.push_back(std::move(t));
        }
        int e = 0;
        while (e < movable && assign[e] == 2) assign[e++] = 0;
        if (e == movable) break;
        ++assign[e];
    }
    return out;
}

TriangleCheck check_triangle(const Triangle& t) {
    const Mask full = full_mask(t.n);
    if ((t.I & t.J) || (t.I & t.K) || (t.J & t.K) || (t.I | t.J | t.K) != full ||
        t.I == 0 || t.J == 0 || t.K == 0 || !(t.K & 1u))
        throw input_error("check_triangle: not a partition with 0 in the third part");

    const PantsLabel LI = canonical_label(t.I, t.n);
    const PantsLabel LJ = canonical_label(t.J, t.n);
    const PantsLabel LK = canonical_label(t.K, t.n);

    TriangleCheck check;
    check.memberships_ok = element_of_pair(t.uJ, pair_decomposition(LI, LK)) &&
                           element_of_pair(t.uI, pair_decomposition(LK, LJ)) &&
                           element_of_pair(t.uK, pair_decomposition(LJ, LI));
    if (check.memberships_ok) {
        check.compositions_zero = !mu2(LI, LK, LJ, t.uJ, t.uI).has_value() &&
                                  !mu2(LK, LJ, LI, t.uI, t.uK).has_value() &&
                                  !mu2(LJ, LI, LK, t.uK, t.uJ).has_value();
    }

    // Class of the would-be triple product: sum of the three classes minus
    // the half-shift (1,..,1) in doubled coordinates.
    std::vector<int> target(t.n + 2, -1);
    for (int j = 0; j < t.n + 2; ++j)
        target[j] += t.uJ.doubled[j] + t.uI.doubled[j] + t.uK.doubled[j];
    check.class_target_is_identity =
        std::all_of(target.begin(), target.end(), [](int d) { return d == 0; });

    const auto identity_piece = hw_basis(LI, LI, 0);
    check.identity_piece_one_dimensional = identity_piece.elements.size() == 1;

    check.pass = check.memberships_ok && check.compositions_zero &&
                 check.class_target_is_identity && check.identity_piece_one_dimensional;
    if (!check.pass) check.detail = "triangle check failed";
    return check;
}

}  // namespace hms
