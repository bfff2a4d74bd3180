#pragma once

// Exact k-subspaces of F_p^n in reduced row echelon form.
//
// The echelon basis is the canonical representative of a subspace: two
// subspaces are equal iff their bases compare equal element-wise.  Every
// module comparison in the library bottoms out here.

#include "field.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace pairops {

using Vec = std::vector<fe>;
using Mat = std::vector<Vec>;

struct Subspace {
    fe p = 2;
    std::size_t ambient_dim = 0;
    Mat basis;                    // reduced row echelon form, no zero rows
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return basis.size(); }

    bool operator==(const Subspace& o) const {
        return p == o.p && ambient_dim == o.ambient_dim && basis == o.basis;
    }
};

// In-place Gauss-Jordan to reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(Mat& rows, fe p) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t n = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        fe inv = finv(rows[r][c], p);
        for (std::size_t j = c; j < n; ++j) rows[r][j] = fmul(rows[r][j], inv, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            fe f = rows[i][c];
            for (std::size_t j = c; j < n; ++j)
                rows[i][j] = fsub(rows[i][j], fmul(f, rows[r][j], p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

inline Subspace echelonize(Mat rows, fe p, std::size_t ambient_dim) {
    for (const auto& row : rows)
        if (row.size() != ambient_dim)
            throw std::invalid_argument("echelonize: ragged input rows");
    Subspace V;
    V.p = p;
    V.ambient_dim = ambient_dim;
    V.pivots = rref(rows, p);
    V.basis = std::move(rows);
    return V;
}

inline Subspace zero_subspace(fe p, std::size_t ambient_dim) {
    return echelonize({}, p, ambient_dim);
}

inline Subspace full_subspace(fe p, std::size_t n) {
    Mat id(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return echelonize(std::move(id), p, n);
}

// Reduce v against the echelon basis; the remainder is zero iff v is in V.
inline Vec reduce_against(Vec v, const Subspace& V) {
    for (std::size_t i = 0; i < V.basis.size(); ++i) {
        fe c = v[V.pivots[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = fsub(v[j], fmul(c, V.basis[i][j], V.p), V.p);
    }
    return v;
}

inline bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](fe x) { return x == 0; });
}

inline bool membership_solve(const Vec& v, const Subspace& V) {
    if (v.size() != V.ambient_dim)
        throw std::invalid_argument("membership_solve: length mismatch");
    return is_zero_vec(reduce_against(v, V));
}

inline void check_compatible(const Subspace& V, const Subspace& W) {
    if (V.p != W.p || V.ambient_dim != W.ambient_dim)
        throw std::invalid_argument("subspace ambient/modulus mismatch");
}

inline Subspace subspace_sum(const Subspace& V, const Subspace& W) {
    check_compatible(V, W);
    Mat rows = V.basis;
    rows.insert(rows.end(), W.basis.begin(), W.basis.end());
    return echelonize(std::move(rows), V.p, V.ambient_dim);
}

// Zassenhaus: echelonize [B_V | B_V; B_W | 0]; rows whose left half vanishes
// carry a basis of the intersection in the right half.
inline Subspace subspace_intersect(const Subspace& V, const Subspace& W) {
    check_compatible(V, W);
    const std::size_t n = V.ambient_dim;
    Mat big;
    big.reserve(V.rank() + W.rank());
    for (const auto& v : V.basis) {
        Vec row(2 * n, 0);
        std::copy(v.begin(), v.end(), row.begin());
        std::copy(v.begin(), v.end(), row.begin() + n);
        big.push_back(std::move(row));
    }
    for (const auto& w : W.basis) {
        Vec row(2 * n, 0);
        std::copy(w.begin(), w.end(), row.begin());
        big.push_back(std::move(row));
    }
    rref(big, V.p);
    Mat inter;
    for (const auto& row : big) {
        bool left_zero = std::all_of(row.begin(), row.begin() + n,
                                     [](fe x) { return x == 0; });
        if (left_zero) inter.emplace_back(row.begin() + n, row.end());
    }
    return echelonize(std::move(inter), V.p, n);
}

inline bool subspace_contains(const Subspace& V, const Subspace& W) {
    check_compatible(V, W);
    for (const auto& w : W.basis)
        if (!membership_solve(w, V)) return false;
    return true;
}

inline bool subspace_equals(const Subspace& V, const Subspace& W) {
    check_compatible(V, W);
    return V.basis == W.basis;
}

// Kernel of the linear map k^n -> k^m whose j-th column is columns[j].
inline Subspace kernel_of_map(const Mat& columns, std::size_t m, fe p) {
    const std::size_t n = columns.size();
    Mat a(m, Vec(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        if (columns[j].size() != m)
            throw std::invalid_argument("kernel_of_map: column length mismatch");
        for (std::size_t i = 0; i < m; ++i) a[i][j] = columns[j][i];
    }
    std::vector<std::size_t> piv = rref(a, p);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    Mat ker;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec v(n, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = fneg(a[i][c], p);
        ker.push_back(std::move(v));
    }
    return echelonize(std::move(ker), p, n);
}

// Solve sum_j x_j * columns[j] = target; empty result means inconsistent.
inline std::pair<bool, Vec> solve_in_span(const Mat& columns, const Vec& target, fe p) {
    const std::size_t n = columns.size();
    const std::size_t m = target.size();
    Mat a(m, Vec(n + 1, 0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) a[i][j] = columns[j][i];
    for (std::size_t i = 0; i < m; ++i) a[i][n] = target[i];
    std::vector<std::size_t> piv = rref(a, p);
    Vec x(n, 0);
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == n) return {false, {}};
        x[piv[i]] = a[i][n];
    }
    return {true, x};
}

} // namespace pairops
