#pragma once

// Finite-dimensional local models A = k[x_1..x_n]/(relations + m^N) and
// numerical-semigroup truncations k[t^S]/(t^N).  Submodules of A^s are
// k-subspaces closed under the variable action; colon, product, socle,
// presentations, injective embeddings (Gorenstein) and the duality pairing
// all reduce to the echelon machinery in subspace.hpp.
//
// Power series rings are modeled by truncations.  Results about k[[...]] are
// only reported below a stabilization guard; see compare_truncations.

#include "monomial.hpp"
#include "subspace.hpp"

#include <cassert>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

namespace pairops {

struct TruncatedAlgebra;
using AlgebraPtr = std::shared_ptr<const TruncatedAlgebra>;

// One term of a relation polynomial.
using PolyTerm = std::pair<Monomial, long long>;
using Poly = std::vector<PolyTerm>;

struct TruncatedAlgebra {
    fe p = 2;
    int n = 1;          // number of variables (1 in semigroup mode)
    int N = 2;          // truncation order: m^N = 0 (t^N = 0 in semigroup mode)
    bool semigroup_mode = false;
    std::vector<int> sg_gens;

    int dim = 0;
    std::vector<Monomial> basis;     // representative monomials, graded order
    std::vector<int> basis_degree;   // total degree / semigroup value
    std::vector<Vec> var_elems;      // the algebra generators of m as elements
    std::vector<std::vector<Vec>> table; // table[i][j] = basis_i * basis_j

    Vec zero_elem() const { return Vec(dim, 0); }
    Vec one_elem() const {
        Vec e(dim, 0);
        e[0] = 1;
        return e;
    }

    Vec mul(const Vec& a, const Vec& b) const {
        Vec c(dim, 0);
        for (int i = 0; i < dim; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < dim; ++j) {
                if (b[j] == 0) continue;
                fe coef = fmul(a[i], b[j], p);
                const Vec& t = table[i][j];
                for (int k = 0; k < dim; ++k)
                    if (t[k]) c[k] = fadd(c[k], fmul(coef, t[k], p), p);
            }
        }
        return c;
    }

    std::string basis_name(int i) const {
        if (semigroup_mode) {
            int v = basis_degree[i];
            if (v == 0) return "1";
            if (v == 1) return "t";
            return "t^" + std::to_string(v);
        }
        return to_string(basis[i]);
    }
};

namespace detail {

inline std::vector<Monomial> monomials_below(int n, int N) {
    std::vector<Monomial> out;
    Monomial m(n, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n) {
            out.push_back(m);
            return;
        }
        for (m[pos] = 0; m[pos] <= left; ++m[pos]) self(self, pos + 1, left - m[pos]);
        m[pos] = 0;
    };
    rec(rec, 0, N - 1);
    std::sort(out.begin(), out.end(), graded_less);
    return out;
}

} // namespace detail

// Polynomial-truncation constructor.
inline AlgebraPtr build_algebra(fe p, int n, int N, const std::vector<Poly>& relations) {
    require_prime(p);
    if (N < 2) throw std::invalid_argument("build_algebra: need N >= 2");
    auto A = std::make_shared<TruncatedAlgebra>();
    A->p = p;
    A->n = n;
    A->N = N;

    std::vector<Monomial> monos = detail::monomials_below(n, N);
    std::map<Monomial, int> idx;
    for (std::size_t i = 0; i < monos.size(); ++i) idx[monos[i]] = static_cast<int>(i);
    const std::size_t D = monos.size();

    // Degree-< N slice of the ideal (relations) + m^N: spanned by all
    // truncated products monomial * relation.
    Mat span;
    for (const auto& rel : relations) {
        for (const auto& mono : monos) {
            Vec row(D, 0);
            bool nonzero = false;
            for (const auto& [t, c] : rel) {
                Monomial prod(n);
                for (int i = 0; i < n; ++i) prod[i] = mono[i] + t[i];
                if (total_degree(prod) >= N) continue;
                int j = idx.at(prod);
                row[j] = fadd(row[j], fnorm(c, p), p);
                nonzero = nonzero || row[j] != 0;
            }
            if (nonzero) span.push_back(std::move(row));
        }
    }
    Subspace E = echelonize(std::move(span), p, D);

    Vec unit(D, 0);
    unit[idx.at(Monomial(n, 0))] = 1;
    if (membership_solve(unit, E))
        throw std::invalid_argument("build_algebra: relations force 1 = 0");

    std::vector<bool> is_pivot(D, false);
    for (std::size_t c : E.pivots) is_pivot[c] = true;
    std::vector<int> coord_of(D, -1);
    for (std::size_t i = 0; i < D; ++i) {
        if (is_pivot[i]) continue;
        coord_of[i] = A->dim++;
        A->basis.push_back(monos[i]);
        A->basis_degree.push_back(total_degree(monos[i]));
    }

    auto nf = [&](const Monomial& m) -> Vec {
        Vec full(D, 0);
        Vec out(A->dim, 0);
        if (total_degree(m) >= N) return out;
        full[idx.at(m)] = 1;
        full = reduce_against(full, E);
        for (std::size_t i = 0; i < D; ++i)
            if (coord_of[i] >= 0) out[coord_of[i]] = full[i];
        return out;
    };

    A->table.assign(A->dim, std::vector<Vec>(A->dim));
    for (int i = 0; i < A->dim; ++i)
        for (int j = 0; j < A->dim; ++j) {
            Monomial prod(n);
            for (int v = 0; v < n; ++v) prod[v] = A->basis[i][v] + A->basis[j][v];
            A->table[i][j] = nf(prod);
        }

    for (int v = 0; v < n; ++v) {
        Monomial x(n, 0);
        x[v] = 1;
        A->var_elems.push_back(nf(x));
    }
    return A;
}

// Numerical-semigroup truncation constructor: basis {t^v : v in S, v < N}.
inline AlgebraPtr build_semigroup_algebra(fe p, const std::vector<int>& gens, int N) {
    require_prime(p);
    if (N < 2) throw std::invalid_argument("build_algebra: need N >= 2");
    int g = 0;
    for (int x : gens) g = std::gcd(g, x);
    if (g != 1) throw std::invalid_argument("semigroup generators must be coprime");

    std::vector<bool> in_S(N, false);
    in_S[0] = true;
    for (int v = 1; v < N; ++v)
        for (int s : gens)
            if (s <= v && in_S[v - s]) { in_S[v] = true; break; }

    auto A = std::make_shared<TruncatedAlgebra>();
    A->p = p;
    A->n = 1;
    A->N = N;
    A->semigroup_mode = true;
    A->sg_gens = gens;
    std::map<int, int> idx;
    for (int v = 0; v < N; ++v) {
        if (!in_S[v]) continue;
        idx[v] = A->dim++;
        A->basis.push_back({v});
        A->basis_degree.push_back(v);
    }
    A->table.assign(A->dim, std::vector<Vec>(A->dim));
    for (int i = 0; i < A->dim; ++i)
        for (int j = 0; j < A->dim; ++j) {
            Vec c(A->dim, 0);
            int v = A->basis_degree[i] + A->basis_degree[j];
            if (v < N) c[idx.at(v)] = 1;
            A->table[i][j] = std::move(c);
        }
    for (int s : gens) {
        Vec e(A->dim, 0);
        if (s < N) e[idx.at(s)] = 1;
        A->var_elems.push_back(std::move(e));
    }
    return A;
}

// ---------------------------------------------------------------------------
// Submodules of A^s
// ---------------------------------------------------------------------------

// A module vector in A^s is flattened as s blocks of dim coordinates.
using ModVec = Vec;

struct SubspaceModule {
    AlgebraPtr A;
    std::size_t s = 1;
    Subspace space;

    std::size_t ambient() const { return s * A->dim; }
    bool operator==(const SubspaceModule& o) const {
        return s == o.s && space == o.space;
    }
};

inline ModVec mod_scale(const AlgebraPtr& A, std::size_t s, const Vec& g, const ModVec& v) {
    ModVec out(s * A->dim, 0);
    for (std::size_t c = 0; c < s; ++c) {
        Vec comp(v.begin() + c * A->dim, v.begin() + (c + 1) * A->dim);
        Vec prod = A->mul(g, comp);
        std::copy(prod.begin(), prod.end(), out.begin() + c * A->dim);
    }
    return out;
}

inline SubspaceModule zero_module(const AlgebraPtr& A, std::size_t s) {
    return SubspaceModule{A, s, zero_subspace(A->p, s * A->dim)};
}

inline SubspaceModule full_module(const AlgebraPtr& A, std::size_t s) {
    return SubspaceModule{A, s, full_subspace(A->p, s * A->dim)};
}

// Smallest submodule containing the given vectors: saturate under the
// variable action until the span is stable.
inline SubspaceModule generate_submodule(const AlgebraPtr& A, std::size_t s,
                                         const std::vector<ModVec>& gens) {
    Mat rows;
    for (const auto& g : gens) {
        if (g.size() != s * static_cast<std::size_t>(A->dim))
            throw std::invalid_argument("generate_submodule: vector length mismatch");
        rows.push_back(g);
    }
    Subspace V = echelonize(std::move(rows), A->p, s * A->dim);
    for (;;) {
        Mat extra;
        for (const auto& b : V.basis)
            for (const auto& x : A->var_elems) {
                ModVec w = mod_scale(A, s, x, b);
                if (!membership_solve(w, V)) extra.push_back(std::move(w));
            }
        if (extra.empty()) break;
        Mat rows2 = V.basis;
        rows2.insert(rows2.end(), extra.begin(), extra.end());
        V = echelonize(std::move(rows2), A->p, s * A->dim);
    }
    return SubspaceModule{A, s, std::move(V)};
}

inline SubspaceModule module_from_subspace(const AlgebraPtr& A, std::size_t s, Subspace V) {
    SubspaceModule U{A, s, std::move(V)};
    return generate_submodule(A, s, U.space.basis); // re-saturate defensively
}

inline SubspaceModule module_sum(const SubspaceModule& U, const SubspaceModule& V) {
    return SubspaceModule{U.A, U.s, subspace_sum(U.space, V.space)};
}

inline SubspaceModule module_intersect(const SubspaceModule& U, const SubspaceModule& V) {
    return SubspaceModule{U.A, U.s, subspace_intersect(U.space, V.space)};
}

// Convenience: the ideal generated by algebra elements.
inline SubspaceModule make_ideal(const AlgebraPtr& A, const std::vector<Vec>& gens) {
    std::vector<ModVec> g(gens.begin(), gens.end());
    return generate_submodule(A, 1, g);
}

inline SubspaceModule maximal_ideal(const AlgebraPtr& A) {
    return make_ideal(A, A->var_elems);
}

inline SubspaceModule unit_ideal(const AlgebraPtr& A) {
    return make_ideal(A, {A->one_elem()});
}

// Minimal generators: a lift of a basis of U / mU, deterministic because the
// echelon basis of U is canonical.
inline std::vector<ModVec> minimal_generators(const SubspaceModule& U) {
    Subspace mU = zero_subspace(U.A->p, U.ambient());
    {
        Mat rows;
        for (const auto& b : U.space.basis)
            for (const auto& x : U.A->var_elems)
                rows.push_back(mod_scale(U.A, U.s, x, b));
        mU = echelonize(std::move(rows), U.A->p, U.ambient());
    }
    std::vector<ModVec> gens;
    Subspace acc = mU;
    for (const auto& b : U.space.basis) {
        if (membership_solve(b, acc)) continue;
        gens.push_back(b);
        Mat rows = acc.basis;
        rows.push_back(b);
        acc = echelonize(std::move(rows), U.A->p, U.ambient());
    }
    return gens;
}

// (U :_{A^s} J) for an ideal J, via the simultaneous kernel of the maps
// v -> g*v mod U over the minimal generators g of J.
inline SubspaceModule module_colon(const SubspaceModule& U, const SubspaceModule& J) {
    if (J.s != 1) throw std::invalid_argument("module_colon: J must be an ideal");
    if (U.A != J.A) throw std::invalid_argument("module_colon: algebra mismatch");
    const std::size_t amb = U.ambient();
    std::vector<ModVec> gens = minimal_generators(J);
    if (gens.empty()) return full_module(U.A, U.s);
    Mat cols(amb);
    const std::size_t rows_per = amb;
    for (std::size_t t = 0; t < amb; ++t) {
        ModVec e(amb, 0);
        e[t] = 1;
        Vec col;
        col.reserve(gens.size() * rows_per);
        for (const auto& g : gens) {
            Vec gv(g.begin(), g.begin() + U.A->dim); // ideal element (s = 1)
            ModVec prod = mod_scale(U.A, U.s, gv, e);
            Vec red = reduce_against(prod, U.space);
            col.insert(col.end(), red.begin(), red.end());
        }
        cols[t] = std::move(col);
    }
    Subspace K = kernel_of_map(cols, gens.size() * rows_per, U.A->p);
    return SubspaceModule{U.A, U.s, std::move(K)};
}

// J * U for an ideal J: span of products of generators, saturated.
inline SubspaceModule ideal_multiply(const SubspaceModule& J, const SubspaceModule& U) {
    if (J.s != 1) throw std::invalid_argument("ideal_multiply: J must be an ideal");
    Mat rows;
    for (const auto& g : J.space.basis) {
        Vec gv(g.begin(), g.begin() + J.A->dim);
        for (const auto& u : U.space.basis)
            rows.push_back(mod_scale(U.A, U.s, gv, u));
    }
    return SubspaceModule{U.A, U.s, echelonize(std::move(rows), U.A->p, U.ambient())};
}

struct StructureInvariants {
    SubspaceModule socle;
    bool is_gorenstein = false;
    int embdim = 0;
};

inline StructureInvariants structure_invariants(const AlgebraPtr& A) {
    SubspaceModule m = maximal_ideal(A);
    SubspaceModule socle = module_colon(zero_module(A, 1), m);
    SubspaceModule m2 = ideal_multiply(m, m);
    return StructureInvariants{socle, socle.space.rank() == 1,
                               static_cast<int>(m.space.rank() - m2.space.rank())};
}

inline SubspaceModule annihilator(const SubspaceModule& U) {
    return module_colon(zero_module(U.A, U.s), U); // only for ideals (s = 1)
}

// ---------------------------------------------------------------------------
// Module maps A^s -> A^t
// ---------------------------------------------------------------------------

struct LinearModuleMap {
    AlgebraPtr A;
    std::size_t s = 1, t = 1;
    std::vector<std::vector<Vec>> matrix; // t x s entries, algebra elements

    ModVec apply(const ModVec& v) const {
        ModVec out(t * A->dim, 0);
        for (std::size_t i = 0; i < t; ++i) {
            Vec acc(A->dim, 0);
            for (std::size_t j = 0; j < s; ++j) {
                Vec comp(v.begin() + j * A->dim, v.begin() + (j + 1) * A->dim);
                Vec prod = A->mul(matrix[i][j], comp);
                for (int k = 0; k < A->dim; ++k) acc[k] = fadd(acc[k], prod[k], A->p);
            }
            std::copy(acc.begin(), acc.end(), out.begin() + i * A->dim);
        }
        return out;
    }
};

inline LinearModuleMap map_from_columns(const AlgebraPtr& A, std::size_t s, std::size_t t,
                                        const std::vector<ModVec>& cols) {
    // cols[j] in A^t is the image of the j-th free generator of A^s.
    LinearModuleMap f{A, s, t, {}};
    f.matrix.assign(t, std::vector<Vec>(s));
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < t; ++i)
            f.matrix[i][j] = Vec(cols[j].begin() + i * A->dim,
                                 cols[j].begin() + (i + 1) * A->dim);
    return f;
}

inline SubspaceModule transport_image(const LinearModuleMap& f, const SubspaceModule& X) {
    if (X.s != f.s) throw std::invalid_argument("transport: rank mismatch");
    Mat rows;
    for (const auto& b : X.space.basis) rows.push_back(f.apply(b));
    return SubspaceModule{f.A, f.t, echelonize(std::move(rows), f.A->p, f.t * f.A->dim)};
}

inline SubspaceModule transport_preimage(const LinearModuleMap& f, const SubspaceModule& X) {
    if (X.s != f.t) throw std::invalid_argument("transport: rank mismatch");
    const std::size_t amb = f.s * f.A->dim;
    Mat cols(amb);
    for (std::size_t j = 0; j < amb; ++j) {
        ModVec e(amb, 0);
        e[j] = 1;
        cols[j] = reduce_against(f.apply(e), X.space);
    }
    Subspace K = kernel_of_map(cols, f.t * f.A->dim, f.A->p);
    return SubspaceModule{f.A, f.s, std::move(K)};
}

inline SubspaceModule map_kernel(const LinearModuleMap& f) {
    return transport_preimage(f, zero_module(f.A, f.t));
}

// ---------------------------------------------------------------------------
// Duality pairing in A^t (Gorenstein Artinian case: E = A)
// ---------------------------------------------------------------------------

// U^perp = {w in A^t : <w, u> = 0 for all u in U} with <w,u> = sum w_i u_i.
// Over a Gorenstein algebra this realizes Matlis duality: (A^t/U)^dual is
// U^perp and (U)^dual is A^t/U^perp, with perp(perp(U)) = U.
inline SubspaceModule perp(const SubspaceModule& U) {
    const AlgebraPtr& A = U.A;
    const std::size_t amb = U.ambient();
    Mat cols(amb);
    for (std::size_t j = 0; j < amb; ++j) {
        std::size_t comp = j / A->dim;
        int bidx = static_cast<int>(j % A->dim);
        Vec col;
        col.reserve(U.space.rank() * A->dim);
        for (const auto& u : U.space.basis) {
            // <e_j, u> = basis_bidx * u_comp
            Vec ucomp(u.begin() + comp * A->dim, u.begin() + (comp + 1) * A->dim);
            Vec ebasis(A->dim, 0);
            ebasis[bidx] = 1;
            Vec prod = A->mul(ebasis, ucomp);
            col.insert(col.end(), prod.begin(), prod.end());
        }
        cols[j] = std::move(col);
    }
    Subspace K = kernel_of_map(cols, U.space.rank() * A->dim, A->p);
    return SubspaceModule{A, U.s, std::move(K)};
}

// Transpose over A: the dual of the map A^s -> A^t under the pairing.
inline LinearModuleMap map_transpose(const LinearModuleMap& f) {
    LinearModuleMap g{f.A, f.t, f.s, {}};
    g.matrix.assign(f.s, std::vector<Vec>(f.t));
    for (std::size_t i = 0; i < f.t; ++i)
        for (std::size_t j = 0; j < f.s; ++j)
            g.matrix[j][i] = f.matrix[i][j];
    return g;
}

// ---------------------------------------------------------------------------
// Presentations and envelopes
// ---------------------------------------------------------------------------

struct Presentation {
    LinearModuleMap pi;      // A^r -> A^t, columns = minimal generators
    SubspaceModule kernel;   // ker(A^r -> V/W) as a submodule of A^r
};

// Free presentation of the subquotient V/W of A^t (W contained in V).
inline Presentation free_presentation(const SubspaceModule& V, const SubspaceModule& W) {
    const AlgebraPtr& A = V.A;
    // minimal generators of V/W: lift a basis of V/(mV + W)
    SubspaceModule mV = ideal_multiply(maximal_ideal(A), V);
    Subspace low = subspace_sum(mV.space, W.space);
    std::vector<ModVec> gens;
    Subspace acc = low;
    for (const auto& b : V.space.basis) {
        if (membership_solve(b, acc)) continue;
        gens.push_back(b);
        Mat rows = acc.basis;
        rows.push_back(b);
        acc = echelonize(std::move(rows), A->p, V.ambient());
    }
    std::size_t r = gens.size();
    LinearModuleMap pi = map_from_columns(A, r, V.s, gens);
    SubspaceModule ker = transport_preimage(pi, module_from_subspace(A, V.s, W.space));
    return Presentation{pi, ker};
}

// Injective embedding of M = A^t/K into A^r over a Gorenstein algebra:
// take minimal generators h_1..h_r of K^perp and send x to (<x,h_j>)_j.
// The kernel is perp(perp(K)) = K, so the induced map on M is injective.
struct Embedding {
    LinearModuleMap iota; // A^t -> A^r, vanishes on K
    std::size_t r = 0;
};

inline Embedding injective_embedding(const AlgebraPtr& A, std::size_t t,
                                     const SubspaceModule& K) {
    if (!structure_invariants(A).is_gorenstein)
        throw std::invalid_argument("injective_embedding: algebra is not Gorenstein");
    SubspaceModule Kp = perp(K);
    std::vector<ModVec> h = minimal_generators(Kp);
    std::size_t r = h.size();
    LinearModuleMap iota{A, t, r, {}};
    iota.matrix.assign(r, std::vector<Vec>(t));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t l = 0; l < t; ++l)
            iota.matrix[j][l] = Vec(h[j].begin() + l * A->dim,
                                    h[j].begin() + (l + 1) * A->dim);
    return Embedding{iota, r};
}

// Free pre-envelope of M = A^t/K.  Hom(M, A) is K^perp under the pairing;
// alpha is the same construction as the injective embedding (E = A here),
// and every map M -> A factors through it by definition of the generators.
inline Embedding free_preenvelope(const AlgebraPtr& A, std::size_t t,
                                  const SubspaceModule& K) {
    return injective_embedding(A, t, K);
}

// ---------------------------------------------------------------------------
// Truncation stabilization guard
// ---------------------------------------------------------------------------

// Intersect U with the coordinate subspace of basis entries of degree < d.
inline Subspace truncate_below(const SubspaceModule& U, int d) {
    const AlgebraPtr& A = U.A;
    Mat rows;
    for (std::size_t j = 0; j < U.ambient(); ++j) {
        if (A->basis_degree[j % A->dim] >= d) continue;
        Vec e(U.ambient(), 0);
        e[j] = 1;
        rows.push_back(std::move(e));
    }
    Subspace coord = echelonize(std::move(rows), A->p, U.ambient());
    return subspace_intersect(U.space, coord);
}

struct TruncationComparison {
    bool stable = false;
    SubspaceModule low_degree_result; // in the order-N algebra
};

// Run the same recipe at orders N and N+2 and compare everything below
// degree N - guard.  Basis entries of degree < N - guard agree between the
// two algebras (same monomials, same order), so subspaces compare by
// restricting coordinates to that common prefix.
inline TruncationComparison compare_truncations(
    const std::function<AlgebraPtr(int)>& builder,
    const std::function<SubspaceModule(const AlgebraPtr&)>& recipe,
    int N, int guard) {
    AlgebraPtr A1 = builder(N);
    AlgebraPtr A2 = builder(N + 2);
    SubspaceModule U1 = recipe(A1);
    SubspaceModule U2 = recipe(A2);
    const int d = N - guard;

    int prefix1 = 0, prefix2 = 0;
    while (prefix1 < A1->dim && A1->basis_degree[prefix1] < d) ++prefix1;
    while (prefix2 < A2->dim && A2->basis_degree[prefix2] < d) ++prefix2;
    bool aligned = prefix1 == prefix2;
    for (int i = 0; aligned && i < prefix1; ++i)
        aligned = A1->basis[i] == A2->basis[i];

    auto restricted = [&](const SubspaceModule& U, int prefix, int dim) {
        Subspace low = truncate_below(U, d);
        Mat rows;
        for (const auto& b : low.basis) {
            Vec r(U.s * prefix, 0);
            for (std::size_t c = 0; c < U.s; ++c)
                for (int i = 0; i < prefix; ++i)
                    r[c * prefix + i] = b[c * dim + i];
            rows.push_back(std::move(r));
        }
        return echelonize(std::move(rows), U.A->p, U.s * prefix);
    };

    TruncationComparison out;
    out.low_degree_result = SubspaceModule{A1, U1.s, truncate_below(U1, d)};
    out.stable = aligned && U1.s == U2.s &&
                 restricted(U1, prefix1, A1->dim) == restricted(U2, prefix2, A2->dim);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing: relation polynomials and the algebra spec grammar
// ---------------------------------------------------------------------------

inline Poly parse_poly(const std::string& text, int n) {
    Poly out;
    std::size_t i = 0;
    while (i < text.size()) {
        long long sign = 1;
        while (i < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= text.size()) break;
        std::size_t start = i;
        while (i < text.size() && text[i] != '+' && text[i] != '-') ++i;
        std::string term = text.substr(start, i - start);
        // optional leading integer coefficient
        long long coef = 1;
        std::size_t j = 0;
        while (j < term.size() && std::isspace(static_cast<unsigned char>(term[j]))) ++j;
        if (j < term.size() && std::isdigit(static_cast<unsigned char>(term[j]))) {
            std::size_t k = j;
            while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
            // bare constant vs coefficient*monomial
            std::size_t rest = k;
            while (rest < term.size() && (std::isspace(static_cast<unsigned char>(term[rest])) || term[rest] == '*'))
                ++rest;
            coef = std::stoll(term.substr(j, k - j));
            term = rest < term.size() ? term.substr(rest) : "1";
        }
        std::map<int, int> exps = parse_monomial_raw(term);
        Monomial m(n, 0);
        for (const auto& [idx, e] : exps) {
            if (idx >= n) throw std::invalid_argument("parse_poly: variable out of range");
            m[idx] = e;
        }
        out.emplace_back(std::move(m), sign * coef);
    }
    return out;
}

// `artinian p=2 vars=x,y trunc=8 rels=[x^3-y^2]` or
// `semigroup p=2 gens=2,3 trunc=12`
inline AlgebraPtr parse_algebra_spec(const std::string& text) {
    std::vector<std::string> words;
    {
        std::istringstream in(text);
        std::string w;
        // rels=[...] may contain spaces; re-join bracketed chunks
        while (in >> w) {
            if (!words.empty() && words.back().find('[') != std::string::npos &&
                words.back().find(']') == std::string::npos)
                words.back() += w;
            else
                words.push_back(w);
        }
    }
    if (words.empty()) throw std::invalid_argument("empty algebra spec");
    std::string kind = words[0];
    std::map<std::string, std::string> kv;
    for (std::size_t i = 1; i < words.size(); ++i) {
        auto eq = words[i].find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad algebra spec token '" + words[i] + "'");
        kv[words[i].substr(0, eq)] = words[i].substr(eq + 1);
    }
    fe p = kv.count("p") ? static_cast<fe>(std::stoul(kv["p"])) : 2;
    int N = kv.count("trunc") ? std::stoi(kv["trunc"]) : 8;
    if (kind == "semigroup") {
        std::vector<int> gens;
        for (const auto& s : split_list(kv.at("gens"))) gens.push_back(std::stoi(s));
        return build_semigroup_algebra(p, gens, N);
    }
    if (kind != "artinian") throw std::invalid_argument("unknown algebra kind '" + kind + "'");
    int n = kv.count("vars") ? static_cast<int>(split_list(kv.at("vars")).size()) : 1;
    std::vector<Poly> rels;
    if (kv.count("rels")) {
        std::string r = kv["rels"];
        if (r.size() >= 2 && r.front() == '[' && r.back() == ']')
            r = r.substr(1, r.size() - 2);
        if (!r.empty())
            for (const auto& piece : split_list(r, ';'))
                rels.push_back(parse_poly(piece, n));
    }
    return build_algebra(p, n, N, rels);
}

// Element of A from monomial-combination text, e.g. "t2+t3" in semigroup
// mode means t^2 + t^3; in polynomial mode "x^2*y" etc.
inline Vec parse_element(const AlgebraPtr& A, const std::string& text) {
    Vec out = A->zero_elem();
    if (A->semigroup_mode) {
        // terms like t5 or t^5, separated by +
        for (const auto& term : split_list(text, '+')) {
            std::string s = term;
            s.erase(std::remove_if(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isspace(c); }),
                    s.end());
            if (s.empty()) continue;
            if (s[0] != 't') throw std::invalid_argument("bad semigroup element '" + term + "'");
            std::string digits = s.substr(1);
            if (!digits.empty() && digits[0] == '^') digits = digits.substr(1);
            int v = digits.empty() ? 1 : std::stoi(digits);
            for (int i = 0; i < A->dim; ++i)
                if (A->basis_degree[i] == v) out[i] = fadd(out[i], 1, A->p);
        }
        return out;
    }
    Poly poly = parse_poly(text, A->n);
    for (const auto& [m, c] : poly) {
        // normal form via the multiplication table: multiply variables out
        Vec e = A->one_elem();
        for (int v = 0; v < A->n; ++v)
            for (int k = 0; k < m[v]; ++k) e = A->mul(e, A->var_elems[v]);
        fe cc = fnorm(c, A->p);
        for (int i = 0; i < A->dim; ++i)
            out[i] = fadd(out[i], fmul(cc, e[i], A->p), A->p);
    }
    return out;
}

inline SubspaceModule parse_ideal_in(const AlgebraPtr& A, const std::string& text) {
    std::string t = text;
    if (t == "m") return maximal_ideal(A);
    if (t == "0") return zero_module(A, 1);
    if (t == "1") return unit_ideal(A);
    std::vector<Vec> gens;
    for (const auto& part : split_list(t)) gens.push_back(parse_element(A, part));
    return make_ideal(A, gens);
}

} // namespace pairops
