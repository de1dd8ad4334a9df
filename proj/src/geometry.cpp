#include "hms/geometry.hpp"

#include <algorithm>
#include <map>

namespace hms {

Int integer_determinant(const std::vector<std::vector<Int>>& matrix) {
    const std::size_t n = matrix.size();
    if (n == 0) throw input_error("determinant of empty matrix");
    for (const auto& row : matrix)
        if (row.size() != n) throw input_error("determinant of non-square matrix");

    // Bareiss: every division below is exact.
    std::vector<std::vector<Int>> a = matrix;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

bool is_unimodular_simplex(const std::vector<LatticePoint>& vertices) {
    if (vertices.empty()) throw input_error("unimodularity test needs vertices");
    const std::size_t d = vertices[0].size();
    for (const auto& v : vertices)
        if (v.size() != d) throw input_error("unimodularity test: mixed dimensions");
    if (vertices.size() != d + 1)
        throw input_error("unimodularity test needs exactly d+1 vertices");

    std::vector<std::vector<Int>> edges(d, std::vector<Int>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            edges[i][j] = vertices[i + 1][j] - vertices[0][j];
    const Int det = integer_determinant(edges);
    return det == 1 || det == -1;
}

namespace {

// Row echelon rank of a rational matrix, destructive.
int rational_rank(std::vector<std::vector<Rat>>& m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            const Rat f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
    }
    return static_cast<int>(row);
}

}  // namespace

int affine_rank(const std::vector<LatticePoint>& points) {
    if (points.size() <= 1) return 0;
    const std::size_t d = points[0].size();
    std::vector<std::vector<Rat>> m;
    m.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Rat> row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = Rat(points[i][j] - points[0][j]);
        m.push_back(std::move(row));
    }
    return rational_rank(m);
}

std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> lhs,
                                             std::vector<Rat> rhs) {
    const std::size_t n = lhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && lhs[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(lhs[col], lhs[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || lhs[i][col] == 0) continue;
            const Rat f = lhs[i][col] / lhs[col][col];
            for (std::size_t j = col; j < n; ++j) lhs[i][j] -= f * lhs[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / lhs[i][i];
    return x;
}

namespace {

void validate_hull_input(const std::vector<LiftedPoint>& points, std::size_t n) {
    for (const auto& p : points)
        if (p.base.size() != n) throw input_error("lower_hull: mixed base dimensions");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].base == points[j].base)
                throw input_error("lower_hull: duplicate base points");
    std::vector<LatticePoint> bases;
    bases.reserve(points.size());
    for (const auto& p : points) bases.push_back(p.base);
    if (affine_rank(bases) != static_cast<int>(n))
        throw input_error("lower_hull: degenerate span");
}

// Supporting-hyperplane test for one (n+1)-subset; returns the cell (full
// on-set) when the subset spans a non-vertical lower supporting hyperplane
// whose face is n-dimensional.
std::optional<HullCell> candidate_cell(const std::vector<LiftedPoint>& points,
                                       const std::vector<int>& subset, std::size_t n) {
    std::vector<std::vector<Rat>> lhs;
    std::vector<Rat> rhs;
    for (int idx : subset) {
        std::vector<Rat> row(n + 1);
        for (std::size_t j = 0; j < n; ++j) row[j] = Rat(points[idx].base[j]);
        row[n] = 1;
        lhs.push_back(std::move(row));
        rhs.push_back(points[idx].height);
    }
    const auto sol = solve_linear(std::move(lhs), std::move(rhs));
    if (!sol) return std::nullopt;  // vertical or affinely dependent

    HullCell cell;
    cell.normal.assign(sol->begin(), sol->begin() + n);
    cell.offset = (*sol)[n];
    for (std::size_t p = 0; p < points.size(); ++p) {
        Rat value = cell.offset;
        for (std::size_t j = 0; j < n; ++j) value += cell.normal[j] * Rat(points[p].base[j]);
        if (points[p].height < value) return std::nullopt;  // point below: not supporting
        if (points[p].height == value) cell.members.push_back(static_cast<int>(p));
    }
    std::vector<LatticePoint> face_bases;
    for (int idx : cell.members) face_bases.push_back(points[idx].base);
    if (affine_rank(face_bases) != static_cast<int>(n)) return std::nullopt;  // not maximal
    return cell;
}

std::vector<HullCell> collect_cells(const std::vector<LiftedPoint>& points,
                                    bool parallel) {
    const std::size_t n = points.empty() ? 0 : points[0].base.size();
    if (points.empty() || n == 0) throw input_error("lower_hull: empty input");
    validate_hull_input(points, n);

    // All (n+1)-subsets, materialized so the scan can be split across threads.
    std::vector<std::vector<int>> subsets;
    std::vector<int> current;
    const int m = static_cast<int>(points.size());
    const int k = static_cast<int>(n) + 1;
    auto recurse = [&](auto&& self, int start) -> void {
        if (static_cast<int>(current.size()) == k) {
            subsets.push_back(current);
            return;
        }
        for (int i = start; i <= m - (k - static_cast<int>(current.size())); ++i) {
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);

    std::map<std::vector<int>, HullCell> found;
#ifdef HMS_HAVE_OPENMP
    if (parallel) {
#pragma omp parallel
        {
            std::map<std::vector<int>, HullCell> local;
#pragma omp for schedule(dynamic, 64) nowait
            for (long i = 0; i < static_cast<long>(subsets.size()); ++i) {
                auto cell = candidate_cell(points, subsets[i], n);
                if (cell) local.emplace(cell->members, *cell);
            }
#pragma omp critical
            found.merge(local);
        }
    } else
#else
    (void)parallel;
#endif
    {
        for (const auto& subset : subsets) {
            auto cell = candidate_cell(points, subset, n);
            if (cell) found.emplace(cell->members, *cell);
        }
    }

    std::vector<HullCell> cells;
    cells.reserve(found.size());
    for (auto& [members, cell] : found) cells.push_back(std::move(cell));
    return cells;  // map order is already members-lexicographic
}

}  // namespace

std::vector<HullCell> lower_hull(const std::vector<LiftedPoint>& points) {
    return collect_cells(points, true);
}

std::vector<HullCell> lower_hull_serial(const std::vector<LiftedPoint>& points) {
    return collect_cells(points, false);
}

Rat simplex_volume(const std::vector<LatticePoint>& vertices) {
    if (vertices.empty()) throw input_error("simplex_volume: no vertices");
    const std::size_t d = vertices[0].size();
    if (vertices.size() != d + 1) throw input_error("simplex_volume: need d+1 vertices");
    std::vector<std::vector<Int>> edges(d, std::vector<Int>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            edges[i][j] = vertices[i + 1][j] - vertices[0][j];
    Int det = integer_determinant(edges);
    if (det < 0) det = -det;
    Int fact = 1;
    for (std::size_t i = 2; i <= d; ++i) fact *= Int(i);
    return Rat(det, fact);
}

bool point_in_convex_hull(const LatticePoint& x, const std::vector<LatticePoint>& generators) {
    if (generators.empty()) return false;
    const std::size_t d = x.size();
    const int max_support = static_cast<int>(d) + 1;

    std::vector<int> subset;
    auto try_subsets = [&](auto&& self, int start) -> bool {
        if (!subset.empty()) {
            // Barycentric solve: sum lambda_i g_i = x, sum lambda_i = 1.
            const std::size_t s = subset.size();
            std::vector<std::vector<Rat>> lhs(d + 1, std::vector<Rat>(s));
            std::vector<Rat> rhs(d + 1);
            for (std::size_t j = 0; j < s; ++j)
                for (std::size_t i = 0; i < d; ++i)
                    lhs[i][j] = Rat(generators[subset[j]][i]);
            for (std::size_t j = 0; j < s; ++j) lhs[d][j] = 1;
            for (std::size_t i = 0; i < d; ++i) rhs[i] = Rat(x[i]);
            rhs[d] = 1;
            // Overdetermined: reduce to square via rank-revealing elimination.
            // Affinely independent subsets give a unique candidate solution.
            std::vector<std::vector<Rat>> aug(d + 1, std::vector<Rat>(s + 1));
            for (std::size_t i = 0; i <= d; ++i) {
                for (std::size_t j = 0; j < s; ++j) aug[i][j] = lhs[i][j];
                aug[i][s] = rhs[i];
            }
            std::size_t row = 0;
            std::vector<int> pivot_col;
            for (std::size_t col = 0; col < s && row <= d; ++col) {
                std::size_t p = row;
                while (p <= d && aug[p][col] == 0) ++p;
                if (p > d) continue;
                std::swap(aug[row], aug[p]);
                for (std::size_t i = 0; i <= d; ++i) {
                    if (i == row || aug[i][col] == 0) continue;
                    const Rat f = aug[i][col] / aug[row][col];
                    for (std::size_t j = col; j <= s; ++j) aug[i][j] -= f * aug[row][j];
                }
                pivot_col.push_back(static_cast<int>(col));
                ++row;
            }
            bool consistent = true;
            for (std::size_t i = row; i <= d; ++i)
                if (aug[i][s] != 0) consistent = false;
            if (consistent && pivot_col.size() == s) {
                bool nonneg = true;
                for (std::size_t i = 0; i < s; ++i)
                    if (aug[i][s] / aug[i][pivot_col[i]] < 0) nonneg = false;
                if (nonneg) return true;
            }
        }
        if (static_cast<int>(subset.size()) == max_support) return false;
        for (int i = start; i < static_cast<int>(generators.size()); ++i) {
            subset.push_back(i);
            if (self(self, i + 1)) return true;
            subset.pop_back();
        }
        return false;
    };
    return try_subsets(try_subsets, 0);
}

}  // namespace hms
