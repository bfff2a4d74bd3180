#pragma once

// The generic pair-operation layer.  A pair (L, M) over a truncated algebra
// is carried as a triple K <= V <= A^t of submodules of a free module:
// L = V/K and M = A^t/K.  Every operation consumes and produces subspaces of
// A^t containing K, so the residual / hereditary / dual constructions reduce
// to presentations, colons and the perp pairing from artinian.hpp.

#include "artinian.hpp"

#include <array>
#include <functional>
#include <random>
#include <sstream>

namespace pairops {

struct PairTriple {
    AlgebraPtr A;
    std::size_t t = 1;
    Subspace K, V; // K <= V <= A^t
};

inline PairTriple make_triple(const AlgebraPtr& A, std::size_t t, Subspace K, Subspace V) {
    if (!subspace_contains(V, K))
        throw std::invalid_argument("make_triple: K not contained in V");
    return PairTriple{A, t, std::move(K), std::move(V)};
}

namespace detail {

inline SubspaceModule wrap(const AlgebraPtr& A, std::size_t t, Subspace S) {
    return SubspaceModule{A, t, std::move(S)};
}

} // namespace detail

// An operation sends a triple to the preimage in A^t of p(L, M); the result
// always contains K because p(L, M) is a submodule of M.
struct PairOpHandle {
    std::string name;
    std::function<Subspace(const PairTriple&)> eval;
};

inline Subspace evaluate(const PairOpHandle& op, const PairTriple& T) {
    Subspace W = op.eval(T);
    if (!subspace_contains(W, T.K))
        throw std::logic_error("pair op '" + op.name + "' dropped below K");
    return W;
}

inline PairOpHandle op_identity() {
    return PairOpHandle{"identity", [](const PairTriple& T) { return T.V; }};
}

// jbf(J)(L, M) = (JL :_M J)
inline PairOpHandle op_jbf(const SubspaceModule& J, const std::string& jname = "J") {
    return PairOpHandle{
        "jbf(" + jname + ")", [J](const PairTriple& T) {
            SubspaceModule JV = ideal_multiply(J, detail::wrap(T.A, T.t, T.V));
            SubspaceModule target = detail::wrap(T.A, T.t, subspace_sum(JV.space, T.K));
            return module_colon(target, J).space;
        }};
}

// jbe(J)(L, M) = J (L :_M J)
inline PairOpHandle op_jbe(const SubspaceModule& J, const std::string& jname = "J") {
    return PairOpHandle{
        "jbe(" + jname + ")", [J](const PairTriple& T) {
            SubspaceModule colon = module_colon(detail::wrap(T.A, T.t, T.V), J);
            SubspaceModule prod = ideal_multiply(J, colon);
            return subspace_sum(prod.space, T.K);
        }};
}

// ---------------------------------------------------------------------------
// Pairs inside an arbitrary ambient module M <= A^t
// ---------------------------------------------------------------------------

struct PresentedPair {
    Presentation pres; // pi : A^r ->> M
    PairTriple tri;    // over A^r
};

// Present L <= M (submodules of A^t) as a triple over a free cover of M.
inline PresentedPair present_pair(const SubspaceModule& L, const SubspaceModule& M) {
    if (!subspace_contains(M.space, L.space))
        throw std::invalid_argument("present_pair: L not contained in M");
    Presentation pres = free_presentation(M, zero_module(M.A, M.s));
    std::size_t r = pres.pi.s;
    Subspace K = pres.kernel.space;
    Subspace V = transport_preimage(pres.pi, L).space;
    return PresentedPair{pres, PairTriple{M.A, r, std::move(K), std::move(V)}};
}

// p(L, M) as a submodule of M <= A^t.
inline SubspaceModule evaluate_in(const PairOpHandle& op, const SubspaceModule& L,
                                  const SubspaceModule& M) {
    PresentedPair P = present_pair(L, M);
    if (P.tri.t == 0) return zero_module(M.A, M.s); // M = 0
    Subspace W = evaluate(op, P.tri);
    return transport_image(P.pres.pi, detail::wrap(M.A, P.tri.t, std::move(W)));
}

// N <= p(L, M)?
inline bool is_cl_reduction(const SubspaceModule& L, const SubspaceModule& N,
                            const SubspaceModule& M, const PairOpHandle& op) {
    if (!subspace_contains(N.space, L.space) || !subspace_contains(M.space, N.space))
        throw std::invalid_argument("is_cl_reduction: need L <= N <= M");
    return subspace_contains(evaluate_in(op, L, M).space, N.space);
}

// ---------------------------------------------------------------------------
// Residual / hereditary / pre-envelope versions and the smile dual
// ---------------------------------------------------------------------------

// p^re(L, M) = pi(p(pi^{-1}(L), P)) for the free cover pi : A^t ->> M.
// In triple terms the free cover is built in: evaluate with K = 0 and push
// back down by adding K.
inline PairOpHandle residual_version(const PairOpHandle& op) {
    return PairOpHandle{
        "rv(" + op.name + ")", [op](const PairTriple& T) {
            Subspace W = evaluate(op, PairTriple{T.A, T.t,
                                                 zero_subspace(T.A->p, T.V.ambient_dim), T.V});
            return subspace_sum(W, T.K);
        }};
}

// p^h(L, M) = i^{-1}(p(i(L), E)) for an injective embedding i : M -> E;
// over a Gorenstein algebra E = A^r built from minimal generators of K^perp.
inline PairOpHandle hereditary_version(const PairOpHandle& op) {
    return PairOpHandle{
        "hv(" + op.name + ")", [op](const PairTriple& T) {
            Embedding emb = injective_embedding(T.A, T.t, detail::wrap(T.A, T.t, T.K));
            SubspaceModule iV = transport_image(emb.iota, detail::wrap(T.A, T.t, T.V));
            Subspace W = evaluate(op, PairTriple{T.A, emb.r,
                                                 zero_subspace(T.A->p, iV.space.ambient_dim),
                                                 iV.space});
            return transport_preimage(emb.iota, detail::wrap(T.A, emb.r, std::move(W))).space;
        }};
}

// Versal-map version through a pre-envelope alpha : M -> C of the chosen
// class.  For Gorenstein truncations the free and injective pre-envelopes
// coincide (C = A^r from K^perp), so this matches hereditary_version; the
// construction recomputes through a second, padded envelope and insists the
// two answers agree.
enum class EnvelopeClass { free_modules, injectives };

inline PairOpHandle preenvelope_version(const PairOpHandle& op, EnvelopeClass cls) {
    std::string tag = cls == EnvelopeClass::free_modules ? "free" : "inj";
    return PairOpHandle{
        "pe(" + op.name + "," + tag + ")", [op, cls](const PairTriple& T) {
            SubspaceModule K = detail::wrap(T.A, T.t, T.K);
            Embedding emb = cls == EnvelopeClass::free_modules
                                ? free_preenvelope(T.A, T.t, K)
                                : injective_embedding(T.A, T.t, K);
            auto through = [&](const LinearModuleMap& alpha, std::size_t r) {
                SubspaceModule aV = transport_image(alpha, detail::wrap(T.A, T.t, T.V));
                Subspace W = evaluate(op, PairTriple{T.A, r,
                                                     zero_subspace(T.A->p, aV.space.ambient_dim),
                                                     aV.space});
                return transport_preimage(alpha, detail::wrap(T.A, r, std::move(W))).space;
            };
            Subspace first = through(emb.iota, emb.r);

            // second pre-envelope: pad with a duplicate component
            if (emb.r > 0) {
                LinearModuleMap padded{T.A, T.t, emb.r + 1, {}};
                padded.matrix = emb.iota.matrix;
                padded.matrix.push_back(emb.iota.matrix.front());
                Subspace second = through(padded, emb.r + 1);
                if (!(first == second))
                    throw std::logic_error("preenvelope_version: envelope dependence detected");
            }
            return first;
        }};
}

// p-smile(L, M) = (M-dual / p((M/L)-dual, M-dual))-dual, computed through
// the perp pairing: M-dual = K^perp presented by its minimal generators,
// (M/L)-dual = V^perp, and the final dual is a perp back in A^t.
inline PairOpHandle smile_dual(const PairOpHandle& op) {
    return PairOpHandle{
        "sm(" + op.name + ")", [op](const PairTriple& T) {
            SubspaceModule Kp = perp(detail::wrap(T.A, T.t, T.K));
            SubspaceModule Vp = perp(detail::wrap(T.A, T.t, T.V));
            std::vector<ModVec> h = minimal_generators(Kp);
            std::size_t r = h.size();
            if (r == 0) return full_subspace(T.A->p, T.t * T.A->dim); // M = 0
            LinearModuleMap pi = map_from_columns(T.A, r, T.t, h);
            Subspace Kq = map_kernel(pi).space;
            Subspace Vq = transport_preimage(pi, Vp).space;
            Subspace W = evaluate(op, PairTriple{T.A, r, std::move(Kq), std::move(Vq)});
            SubspaceModule Q = transport_image(pi, detail::wrap(T.A, r, std::move(W)));
            return perp(Q).space;
        }};
}

// ---------------------------------------------------------------------------
// Submodule selectors and their lifts
// ---------------------------------------------------------------------------

// alpha assigns to each module A^t/K a submodule, reported as its preimage
// in A^t.
struct Selector {
    std::string name;
    std::function<Subspace(const AlgebraPtr&, std::size_t, const Subspace&)> eval;
};

inline Selector selector_socle() {
    return Selector{"socle", [](const AlgebraPtr& A, std::size_t t, const Subspace& K) {
                        return module_colon(detail::wrap(A, t, K), maximal_ideal(A)).space;
                    }};
}

inline Selector selector_mpow(int k) {
    return Selector{"m^" + std::to_string(k) + "*",
                    [k](const AlgebraPtr& A, std::size_t t, const Subspace& K) {
                        SubspaceModule U = full_module(A, t);
                        SubspaceModule m = maximal_ideal(A);
                        for (int i = 0; i < k; ++i) U = ideal_multiply(m, U);
                        return subspace_sum(U.space, K);
                    }};
}

// rho(alpha)(L, M) = preimage of alpha(M/L); residual by construction.
inline PairOpHandle selector_lift_rho(const Selector& alpha) {
    return PairOpHandle{"rho(" + alpha.name + ")", [alpha](const PairTriple& T) {
                            return alpha.eval(T.A, T.t, T.V);
                        }};
}

// gamma(alpha)(L, M) = alpha(L); absolute by construction.  L is presented
// by its own free cover and the answer pushed back into A^t.
inline PairOpHandle selector_lift_gamma(const Selector& alpha) {
    return PairOpHandle{
        "gamma(" + alpha.name + ")", [alpha](const PairTriple& T) {
            Presentation pres = free_presentation(detail::wrap(T.A, T.t, T.V),
                                                  detail::wrap(T.A, T.t, T.K));
            std::size_t r = pres.pi.s;
            if (r == 0) return T.K; // L = 0
            Subspace W = alpha.eval(T.A, r, pres.kernel.space);
            SubspaceModule img = transport_image(pres.pi, detail::wrap(T.A, r, std::move(W)));
            return subspace_sum(img.space, T.K);
        }};
}

// alpha-smile(M) = (M-dual / alpha(M-dual))-dual, same route as smile_dual.
inline Selector selector_smile(const Selector& alpha) {
    return Selector{
        "sm(" + alpha.name + ")",
        [alpha](const AlgebraPtr& A, std::size_t t, const Subspace& K) {
            SubspaceModule Kp = perp(detail::wrap(A, t, K));
            std::vector<ModVec> h = minimal_generators(Kp);
            std::size_t r = h.size();
            if (r == 0) return full_subspace(A->p, t * A->dim);
            LinearModuleMap pi = map_from_columns(A, r, t, h);
            Subspace Kq = map_kernel(pi).space;
            Subspace W = alpha.eval(A, r, Kq);
            SubspaceModule Q = transport_image(pi, detail::wrap(A, r, std::move(W)));
            return perp(Q).space;
        }};
}

// Conjugation spot-check: alpha commutes with an automorphism of A^t of the
// form identity + nilpotent random part.
inline bool selector_isomorphism_spot_check(const Selector& alpha, const AlgebraPtr& A,
                                            std::size_t t, unsigned seed) {
    std::mt19937 rng(seed);
    SubspaceModule m = maximal_ideal(A);
    LinearModuleMap G{A, t, t, {}};
    G.matrix.assign(t, std::vector<Vec>(t));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            Vec e = A->zero_elem();
            if (!m.space.basis.empty()) {
                const Vec& b = m.space.basis[rng() % m.space.basis.size()];
                Vec mb(b.begin(), b.begin() + A->dim);
                if (rng() % 2) e = mb;
            }
            if (i == j) e[0] = fadd(e[0], 1, A->p);
            G.matrix[i][j] = e;
        }
    for (int trial = 0; trial < 5; ++trial) {
        // the first trial is always the zero submodule; small modules are the
        // ones a coordinate-pinned selector fails to track through G
        std::vector<ModVec> gens;
        if (trial > 0)
            for (int g = 0; g < 2; ++g) {
                ModVec v(t * A->dim, 0);
                for (auto& c : v) c = rng() % A->p;
                gens.push_back(std::move(v));
            }
        SubspaceModule K = generate_submodule(A, t, gens);
        Subspace lhs = transport_image(G, detail::wrap(A, t, alpha.eval(A, t, K.space))).space;
        Subspace rhs = alpha.eval(A, t, transport_image(G, K).space);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

inline PairOpHandle selector_lift(const Selector& alpha, bool rho, const AlgebraPtr& A,
                                  std::size_t t, unsigned seed = 11) {
    if (!selector_isomorphism_spot_check(alpha, A, t, seed))
        throw std::invalid_argument("selector '" + alpha.name + "' is not isomorphism-invariant");
    return rho ? selector_lift_rho(alpha) : selector_lift_gamma(alpha);
}

// ---------------------------------------------------------------------------
// Sample contexts and the property checker
// ---------------------------------------------------------------------------

struct MapInstance {
    PairTriple src, dst;   // dst is the pushforward of src along G
    LinearModuleMap G;     // A^t -> A^t with G(K) <= K', G(V) <= V'
    bool surjective = false;
};

struct PairContext {
    AlgebraPtr A;
    std::size_t t = 1;
    std::string description;
    std::vector<PairTriple> pairs;
    std::vector<std::array<Subspace, 3>> chains; // K <= V <= U
    std::vector<MapInstance> maps;
};

// Build a context from a family of submodules of A^t: all nested pairs and
// chains, quotient surjections, and seeded random module maps.
inline PairContext make_context(const AlgebraPtr& A, std::size_t t,
                                const std::vector<SubspaceModule>& family,
                                const std::string& description, unsigned seed = 2024,
                                std::size_t max_pairs = 600, std::size_t max_maps = 80) {
    PairContext ctx{A, t, description, {}, {}, {}};
    for (const auto& K : family)
        for (const auto& V : family) {
            if (!subspace_contains(V.space, K.space)) continue;
            if (ctx.pairs.size() >= max_pairs) break;
            ctx.pairs.push_back(PairTriple{A, t, K.space, V.space});
        }
    for (const auto& K : family)
        for (const auto& V : family) {
            if (!subspace_contains(V.space, K.space)) continue;
            for (const auto& U : family) {
                if (!subspace_contains(U.space, V.space)) continue;
                if (ctx.chains.size() >= max_pairs) break;
                ctx.chains.push_back({K.space, V.space, U.space});
            }
        }

    std::mt19937 rng(seed);
    // quotient surjections: identity matrix, kernel enlarged
    for (const auto& T : ctx.pairs) {
        if (ctx.maps.size() >= max_maps / 2) break;
        const auto& K2 = family[rng() % family.size()];
        if (!subspace_contains(K2.space, T.K)) continue;
        LinearModuleMap id{A, t, t, {}};
        id.matrix.assign(t, std::vector<Vec>(t, A->zero_elem()));
        for (std::size_t i = 0; i < t; ++i) id.matrix[i][i] = A->one_elem();
        PairTriple dst{A, t, K2.space, subspace_sum(T.V, K2.space)};
        ctx.maps.push_back(MapInstance{T, dst, id, true});
    }
    // random algebra-matrix maps
    SubspaceModule full = full_module(A, t);
    while (ctx.maps.size() < max_maps && !ctx.pairs.empty()) {
        const PairTriple& T = ctx.pairs[rng() % ctx.pairs.size()];
        LinearModuleMap G{A, t, t, {}};
        G.matrix.assign(t, std::vector<Vec>(t));
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) {
                Vec e = A->zero_elem();
                for (auto& c : e) c = rng() % A->p;
                G.matrix[i][j] = e;
            }
        SubspaceModule GK = transport_image(G, detail::wrap(A, t, T.K));
        Subspace K2 = generate_submodule(A, t, GK.space.basis).space;
        SubspaceModule GV = transport_image(G, detail::wrap(A, t, T.V));
        Subspace V2 = subspace_sum(generate_submodule(A, t, GV.space.basis).space, K2);
        bool surj = transport_image(G, full).space.rank() == full.space.rank();
        ctx.maps.push_back(MapInstance{T, PairTriple{A, t, std::move(K2), std::move(V2)}, G, surj});
    }
    return ctx;
}

struct PropertyReport {
    std::string property;
    std::string op;
    std::string context;
    int samples = 0;
    bool holds = true;
    std::string witness;
};

inline std::string to_string(const AlgebraPtr& A, const ModVec& v, std::size_t s) {
    std::string out = s > 1 ? "(" : "";
    for (std::size_t c = 0; c < s; ++c) {
        if (c) out += ", ";
        std::string comp;
        for (int i = 0; i < A->dim; ++i) {
            fe coef = v[c * A->dim + i];
            if (!coef) continue;
            if (!comp.empty()) comp += " + ";
            if (coef != 1) comp += std::to_string(coef) + "*";
            comp += A->basis_name(i);
        }
        out += comp.empty() ? "0" : comp;
    }
    return out + (s > 1 ? ")" : "");
}

inline std::string to_string(const AlgebraPtr& A, const Subspace& S, std::size_t s) {
    std::string out = "<";
    for (std::size_t i = 0; i < S.basis.size(); ++i) {
        if (i) out += ", ";
        out += to_string(A, S.basis[i], s);
    }
    return out + ">";
}

namespace detail {

// Evaluate p(L, N) for an intermediate ambient N = U/K by re-presenting N
// over its own free cover and pushing the answer back into A^t.
inline Subspace eval_on_subambient(const PairOpHandle& op, const PairTriple& T,
                                   const Subspace& U) {
    const AlgebraPtr& A = T.A;
    Presentation pres = free_presentation(wrap(A, T.t, U), wrap(A, T.t, T.K));
    std::size_t r = pres.pi.s;
    if (r == 0) return T.K; // N = 0
    Subspace Kq = pres.kernel.space;
    Subspace Vq = transport_preimage(pres.pi, wrap(A, T.t, T.V)).space;
    Subspace W = evaluate(op, PairTriple{A, r, std::move(Kq), std::move(Vq)});
    SubspaceModule img = transport_image(pres.pi, wrap(A, r, std::move(W)));
    return subspace_sum(img.space, T.K);
}

} // namespace detail

inline PropertyReport check_property(const std::string& prop, const PairOpHandle& op,
                                     const PairContext& ctx) {
    PropertyReport rep{prop, op.name, ctx.description, 0, true, ""};
    const AlgebraPtr& A = ctx.A;
    auto fail = [&](const std::string& w) {
        rep.holds = false;
        rep.witness = w;
    };
    auto pr = [&](const Subspace& S) { return to_string(A, S, ctx.t); };

    std::map<std::pair<Mat, Mat>, Subspace> memo;
    auto ev = [&](const Subspace& K, const Subspace& V) -> const Subspace& {
        auto key = std::make_pair(K.basis, V.basis);
        auto it = memo.find(key);
        if (it == memo.end())
            it = memo.emplace(key, evaluate(op, PairTriple{A, ctx.t, K, V})).first;
        return it->second;
    };

    if (prop == "extensive" || prop == "intensive" || prop == "idempotent" ||
        prop == "residual") {
        for (const auto& T : ctx.pairs) {
            ++rep.samples;
            const Subspace& W = ev(T.K, T.V);
            bool ok = true;
            std::string detail;
            if (prop == "extensive") {
                ok = subspace_contains(W, T.V);
            } else if (prop == "intensive") {
                ok = subspace_contains(T.V, W);
            } else if (prop == "idempotent") {
                ok = ev(T.K, W) == W;
                detail = " p(p(L)) = " + pr(ev(T.K, W));
            } else { // residual: p(L, M) = preimage of p(0, M/L)
                ok = W == ev(T.V, T.V);
                detail = " p(0, M/L) pulled back = " + pr(ev(T.V, T.V));
            }
            if (!ok)
                return fail("K = " + pr(T.K) + ", V = " + pr(T.V) + ", p = " + pr(W) + detail),
                       rep;
        }
        return rep;
    }

    if (prop == "order_preserving") {
        for (const auto& C : ctx.chains) {
            ++rep.samples;
            const Subspace& W1 = ev(C[0], C[1]);
            const Subspace& W2 = ev(C[0], C[2]);
            if (!subspace_contains(W2, W1))
                return fail("K = " + pr(C[0]) + ", V1 = " + pr(C[1]) + ", V2 = " + pr(C[2]) +
                            ", p(V1) = " + pr(W1) + " not inside p(V2) = " + pr(W2)),
                       rep;
        }
        return rep;
    }

    if (prop == "restrictable" || prop == "hereditary" || prop == "absolute") {
        for (const auto& C : ctx.chains) {
            ++rep.samples;
            Subspace WN = detail::eval_on_subambient(op, PairTriple{A, ctx.t, C[0], C[1]}, C[2]);
            const Subspace& WM = ev(C[0], C[1]);
            bool ok;
            std::string rel;
            if (prop == "restrictable") {
                ok = subspace_contains(WM, WN);
                rel = "p(L,N) not inside p(L,M)";
            } else if (prop == "hereditary") {
                ok = WN == subspace_intersect(WM, C[2]);
                rel = "p(L,N) != p(L,M) intersect N";
            } else {
                ok = WN == WM;
                rel = "p(L,N) != p(L,M)";
            }
            if (!ok)
                return fail("K = " + pr(C[0]) + ", V = " + pr(C[1]) + ", U = " + pr(C[2]) +
                            ", p(L,N) = " + pr(WN) + ", p(L,M) = " + pr(WM) + ": " + rel),
                       rep;
        }
        return rep;
    }

    if (prop == "cohereditary") {
        for (const auto& inst : ctx.maps) {
            if (!inst.surjective) continue;
            ++rep.samples;
            const Subspace& W = ev(inst.src.K, inst.src.V);
            Subspace pushed = subspace_sum(
                transport_image(inst.G, detail::wrap(A, ctx.t, W)).space, inst.dst.K);
            const Subspace& Wq = ev(inst.dst.K, inst.dst.V);
            if (!(Wq == pushed))
                return fail("pi(p(L,M)) = " + pr(pushed) + " but p(pi(L), M') = " + pr(Wq) +
                            " for K = " + pr(inst.src.K) + ", V = " + pr(inst.src.V) +
                            ", K' = " + pr(inst.dst.K)),
                       rep;
        }
        return rep;
    }

    if (prop == "functorial" || prop == "surjection_functorial") {
        for (const auto& inst : ctx.maps) {
            if (prop == "surjection_functorial" && !inst.surjective) continue;
            ++rep.samples;
            const Subspace& Ws = ev(inst.src.K, inst.src.V);
            const Subspace& Wd = ev(inst.dst.K, inst.dst.V);
            Subspace img = transport_image(inst.G, detail::wrap(A, ctx.t, Ws)).space;
            if (!subspace_contains(subspace_sum(Wd, inst.dst.K), img))
                return fail("g(p(L,M)) = " + pr(img) + " not inside p(L',M') = " + pr(Wd)),
                       rep;
        }
        return rep;
    }

    if (prop == "cofunctorial" || prop == "surjection_cofunctorial") {
        for (const auto& inst : ctx.maps) {
            if (prop == "surjection_cofunctorial" && !inst.surjective) continue;
            ++rep.samples;
            Subspace pre = transport_preimage(inst.G, detail::wrap(A, ctx.t, inst.dst.V)).space;
            Subspace Wp = evaluate(op, PairTriple{A, ctx.t, inst.src.K, pre});
            const Subspace& Wd = ev(inst.dst.K, inst.dst.V);
            Subspace bound = transport_preimage(inst.G, detail::wrap(A, ctx.t, Wd)).space;
            if (!subspace_contains(bound, Wp))
                return fail("p(g^{-1}(L'), M) = " + pr(Wp) +
                            " not inside g^{-1}(p(L',M')) = " + pr(bound)),
                       rep;
        }
        return rep;
    }

    if (prop == "nakayama") {
        SubspaceModule m = maximal_ideal(A);
        for (const auto& C : ctx.chains) {
            ++rep.samples;
            SubspaceModule mU = ideal_multiply(m, detail::wrap(A, ctx.t, C[2]));
            Subspace VmU = subspace_sum(C[1], mU.space);
            Subspace cl = evaluate(op, PairTriple{A, ctx.t, C[0], VmU});
            if (!subspace_contains(cl, C[2])) continue; // hypothesis not met
            const Subspace& W = ev(C[0], C[1]);
            if (!subspace_contains(W, C[2]))
                return fail("N = " + pr(C[2]) + " inside (L + mN)^p = " + pr(cl) +
                            " but not inside L^p = " + pr(W)),
                       rep;
        }
        return rep;
    }

    throw std::invalid_argument("unknown property '" + prop + "'");
}

// ---------------------------------------------------------------------------
// Ideal enumeration, cores, hulls
// ---------------------------------------------------------------------------

// All ideals generated by at most max_gens elements; exhaustive for rings
// where every ideal has that few generators.
inline std::vector<SubspaceModule> enumerate_ideals(const AlgebraPtr& A, int max_gens) {
    double space = 1;
    for (int i = 0; i < A->dim; ++i) {
        space *= A->p;
        if (space > double(1 << 24))
            throw std::invalid_argument("enumerate_ideals: search space exceeds 2^24");
    }
    std::vector<Vec> elems;
    {
        Vec v(A->dim, 0);
        for (;;) {
            elems.push_back(v);
            int i = 0;
            while (i < A->dim && ++v[i] == A->p) v[i++] = 0;
            if (i == A->dim) break;
        }
    }
    std::map<Mat, SubspaceModule> seen;
    SubspaceModule zero = zero_module(A, 1);
    seen.emplace(zero.space.basis, zero);
    std::vector<SubspaceModule> frontier = {zero};
    for (int round = 0; round < max_gens; ++round) {
        std::vector<SubspaceModule> next;
        for (const auto& I : frontier)
            for (const auto& v : elems) {
                if (is_zero_vec(v) || membership_solve(v, I.space)) continue;
                Mat gens = I.space.basis;
                gens.push_back(v);
                SubspaceModule J = generate_submodule(A, 1, gens);
                if (seen.emplace(J.space.basis, J).second) next.push_back(J);
            }
        frontier = std::move(next);
    }
    std::vector<SubspaceModule> out;
    for (auto& [key, I] : seen) out.push_back(I);
    return out;
}

struct CoreResult {
    SubspaceModule result;
    bool exhaustive = false;
    int reductions = 0;
};

// Intersection of all candidate L <= N with N <= p(L, M).
inline CoreResult core_over_candidates(const SubspaceModule& N, const SubspaceModule& M,
                                       const PairOpHandle& op,
                                       const std::vector<SubspaceModule>& candidates,
                                       bool exhaustive) {
    if (candidates.empty())
        throw std::invalid_argument("core_over_candidates: no candidates");
    SubspaceModule core = N;
    int reductions = 0;
    for (const auto& L : candidates) {
        if (!subspace_contains(N.space, L.space)) continue;
        if (!is_cl_reduction(L, N, M, op)) continue;
        ++reductions;
        core = module_intersect(core, L);
    }
    return CoreResult{core, exhaustive, reductions};
}

// Dual notion: sum of all candidates C with A <= C <= B and p_int(C, B) <= A.
inline CoreResult hull_over_candidates(const SubspaceModule& Asub, const SubspaceModule& B,
                                       const PairOpHandle& op_interior,
                                       const std::vector<SubspaceModule>& candidates,
                                       bool exhaustive) {
    SubspaceModule hull = Asub;
    int expansions = 0;
    for (const auto& C : candidates) {
        if (!subspace_contains(C.space, Asub.space) || !subspace_contains(B.space, C.space))
            continue;
        if (!subspace_contains(Asub.space, evaluate_in(op_interior, C, B).space)) continue;
        ++expansions;
        hull = module_sum(hull, C);
    }
    return CoreResult{hull, exhaustive, expansions};
}

} // namespace pairops
