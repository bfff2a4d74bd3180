#pragma once

// Module model over the DVR R = k[x]_(x).  Finitely generated modules are
// presented by polynomial matrices; classification is by Smith invariant
// factors (computed exactly from minor valuations), and submodule arithmetic
// happens in a high-precision truncation (k[x]/x^D)^f, where localized
// membership of low-degree vectors is decided faithfully because all data
// degrees stay far below D.

#include "subspace.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace pairops {

using UPoly = std::vector<fe>; // coefficients, low degree first

inline UPoly up_trim(UPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline bool up_is_zero(const UPoly& a) { return up_trim(a).empty(); }

inline int up_valuation(const UPoly& a) { // -1 for the zero polynomial
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

inline UPoly up_add(const UPoly& a, const UPoly& b, fe p) {
    UPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = fadd(c[i], b[i], p);
    return up_trim(std::move(c));
}

inline UPoly up_mul(const UPoly& a, const UPoly& b, fe p) {
    if (up_is_zero(a) || up_is_zero(b)) return {};
    UPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = fadd(c[i + j], fmul(a[i], b[j], p), p);
    }
    return up_trim(std::move(c));
}

inline UPoly up_neg(UPoly a, fe p) {
    for (auto& c : a) c = fneg(c, p);
    return a;
}

// Presentation matrix P (rows x cols of polynomials): M = R^rows / col(P).
using PolyMatrix = std::vector<std::vector<UPoly>>;

namespace detail {

inline UPoly pm_det(const PolyMatrix& a, fe p) {
    const std::size_t n = a.size();
    if (n == 0) return {1};
    if (n == 1) return a[0][0];
    UPoly det;
    for (std::size_t j = 0; j < n; ++j) {
        if (up_is_zero(a[0][j])) continue;
        PolyMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<UPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        UPoly term = up_mul(a[0][j], pm_det(minor, p), p);
        if (j % 2) term = up_neg(std::move(term), p);
        det = up_add(det, term, p);
    }
    return det;
}

} // namespace detail

struct SmithResult {
    std::vector<int> exponents; // invariant factor x-exponents, ascending
    int rank = 0;
    int free_rank = 0;          // of M = R^rows / col(P)
};

// Invariant factors from minor valuations: val_i = min x-valuation over all
// i x i minors; the i-th invariant factor is x^(val_i - val_{i-1}).
inline SmithResult dvr_smith(const PolyMatrix& P, fe p) {
    const std::size_t rows = P.size();
    const std::size_t cols = rows ? P[0].size() : 0;
    SmithResult out;
    out.free_rank = static_cast<int>(rows);
    int prev_val = 0;
    for (std::size_t i = 1; i <= std::min(rows, cols); ++i) {
        int best = -1;
        std::vector<std::size_t> ri(i), ci(i);
        auto choose = [&](auto&& self, std::vector<std::size_t>& idx, std::size_t lo,
                          std::size_t limit, std::size_t pos, auto&& done) -> void {
            if (pos == i) {
                done();
                return;
            }
            for (std::size_t v = lo; v + (i - pos) <= limit + 1 && v <= limit; ++v) {
                idx[pos] = v;
                self(self, idx, v + 1, limit, pos + 1, done);
            }
        };
        choose(choose, ri, 0, rows - 1, 0, [&] {
            choose(choose, ci, 0, cols - 1, 0, [&] {
                PolyMatrix sub(i, std::vector<UPoly>(i));
                for (std::size_t a = 0; a < i; ++a)
                    for (std::size_t b = 0; b < i; ++b) sub[a][b] = P[ri[a]][ci[b]];
                int v = up_valuation(detail::pm_det(sub, p));
                if (v >= 0 && (best == -1 || v < best)) best = v;
            });
        });
        if (best == -1) break;
        out.exponents.push_back(best - prev_val);
        prev_val = best;
        out.rank = static_cast<int>(i);
        --out.free_rank;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Truncated submodule spans of R^f
// ---------------------------------------------------------------------------

struct DvrContext {
    fe p = 2;
    int f = 1;   // free rank of the ambient
    int D = 48;  // working precision; data degrees must stay well below D/2
};

// k-span of {x^j * column} in (k[x]/x^D)^f; coordinate (row, degree) at
// index row*D + degree.  This equals the image of the localized module, so
// membership of vectors of degree < D/2 is exact.
struct DvrModule {
    DvrContext ctx;
    Subspace span;
};

inline Vec dvr_flatten(const DvrContext& c, const std::vector<UPoly>& column) {
    Vec v(static_cast<std::size_t>(c.f) * c.D, 0);
    for (int r = 0; r < c.f; ++r) {
        if (r >= static_cast<int>(column.size())) break;
        for (std::size_t d = 0; d < column[r].size() && d < static_cast<std::size_t>(c.D); ++d)
            v[static_cast<std::size_t>(r) * c.D + d] = column[r][d];
    }
    return v;
}

inline Vec dvr_shift(const DvrContext& c, const Vec& v, int k) { // multiply by x^k
    Vec w(v.size(), 0);
    for (int r = 0; r < c.f; ++r)
        for (int d = 0; d + k < c.D; ++d)
            w[static_cast<std::size_t>(r) * c.D + d + k] =
                v[static_cast<std::size_t>(r) * c.D + d];
    return w;
}

inline DvrModule dvr_module(const DvrContext& c, const std::vector<std::vector<UPoly>>& columns) {
    Mat rows;
    for (const auto& col : columns) {
        Vec base = dvr_flatten(c, col);
        for (int j = 0; j < c.D; ++j) {
            Vec r = dvr_shift(c, base, j);
            if (!is_zero_vec(r)) rows.push_back(std::move(r));
        }
    }
    return DvrModule{c, echelonize(std::move(rows), c.p, static_cast<std::size_t>(c.f) * c.D)};
}

inline int dvr_vec_valuation(const DvrContext& c, const Vec& v) {
    int best = -1;
    for (int r = 0; r < c.f; ++r)
        for (int d = 0; d < c.D; ++d)
            if (v[static_cast<std::size_t>(r) * c.D + d] != 0 && (best == -1 || d < best))
                best = d;
    return best;
}

// A remainder supported entirely above D/2 is below working precision and
// counts as zero: with generator and query degrees bounded by D/4, the Smith
// exponents of any generator matrix stay under D/2, so agreement to that
// order forces genuine membership in the localized module.
inline bool dvr_member(const DvrModule& N, const Vec& v) {
    Vec rem = reduce_against(v, N.span);
    if (is_zero_vec(rem)) return true;
    return dvr_vec_valuation(N.ctx, rem) >= N.ctx.D / 2;
}

inline DvrModule dvr_sum(const DvrModule& A, const DvrModule& B) {
    return DvrModule{A.ctx, subspace_sum(A.span, B.span)};
}

inline bool dvr_contains(const DvrModule& big, const DvrModule& small) {
    for (const auto& b : small.span.basis) {
        if (dvr_vec_valuation(small.ctx, b) >= small.ctx.D / 2) continue; // truncation junk
        if (!dvr_member(big, b)) return false;
    }
    return true;
}

inline bool dvr_equal(const DvrModule& A, const DvrModule& B) {
    return dvr_contains(A, B) && dvr_contains(B, A);
}

// (N : x^k) inside (k[x]/x^D)^f.
inline DvrModule dvr_colon_xk(const DvrModule& N, int k) {
    const DvrContext& c = N.ctx;
    const std::size_t amb = static_cast<std::size_t>(c.f) * c.D;
    Mat cols(amb);
    for (std::size_t j = 0; j < amb; ++j) {
        Vec e(amb, 0);
        e[j] = 1;
        cols[j] = reduce_against(dvr_shift(c, e, k), N.span);
    }
    return DvrModule{c, kernel_of_map(cols, amb, c.p)};
}

// ---------------------------------------------------------------------------
// EHU and liftable closure for pairs over the DVR
// ---------------------------------------------------------------------------

struct DvrPair {
    DvrContext ctx;
    PolyMatrix P;                        // M = R^f / col(P)
    std::vector<std::vector<UPoly>> K;   // extra generators of K beyond col(P); L = K/col(P)
};

inline std::vector<std::vector<UPoly>> pm_columns(const PolyMatrix& P) {
    std::vector<std::vector<UPoly>> cols;
    if (P.empty()) return cols;
    for (std::size_t j = 0; j < P[0].size(); ++j) {
        std::vector<UPoly> col;
        for (const auto& row : P) col.push_back(row[j]);
        cols.push_back(std::move(col));
    }
    return cols;
}

enum class DvrClosureKind { ehu, liftable, liftable_hereditary };

struct DvrClosureResult {
    DvrModule preimage;  // the closure pulled back to R^f (contains col(P))
    bool equals_L = false;
};

// liftable: submodules of free modules over a DVR are integrally closed, so
// the closure of K is K and the result is L itself.  The same holds after an
// embedding of M into a free or divisible module, so the hereditary variant
// is also L.  ehu: the versal map to a free module kills exactly the
// torsion, so the result is L + tau(M); the preimage of tau(M) is the
// x-saturation of col(P), reached in one colon step by the largest Smith
// exponent.
inline DvrClosureResult dvr_closure(const DvrPair& pair, DvrClosureKind kind) {
    DvrModule colP = dvr_module(pair.ctx, pm_columns(pair.P));
    std::vector<std::vector<UPoly>> kgens = pair.K;
    for (const auto& col : pm_columns(pair.P)) kgens.push_back(col);
    DvrModule K = dvr_module(pair.ctx, kgens);
    if (kind != DvrClosureKind::ehu) return DvrClosureResult{K, true};

    SmithResult sm = dvr_smith(pair.P, pair.ctx.p);
    int bound = 0;
    for (int e : sm.exponents) bound = std::max(bound, e);
    DvrModule sat = bound == 0 ? colP : dvr_colon_xk(colP, bound);
    DvrModule result = dvr_sum(K, sat);
    return DvrClosureResult{result, dvr_equal(result, K)};
}

} // namespace pairops
