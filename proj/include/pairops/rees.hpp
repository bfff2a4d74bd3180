#pragma once

// Graded integral-closure machinery inside Sym(F) = k[x_1..x_n, t_1..t_s]:
// reduction certification V^{d+1} = U * V^d per bidegree, explicit
// integrality certificates, and the liftable closure of cyclic quotients
// (which reduces to the Newton closure of the pulled-back monomial ideal).

#include "field.hpp"
#include "monomial.hpp"
#include "subspace.hpp"

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace pairops {

// Sparse polynomial in n x-variables and s t-variables over F_p.
// Key = exponent vector of length n + s (x block first).
struct MultiPoly {
    int n = 0, s = 0;
    fe p = 2;
    std::map<std::vector<int>, fe> terms;

    void add_term(std::vector<int> e, fe c) {
        if (c % p == 0) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(std::move(e), c % p);
        } else {
            it->second = fadd(it->second, c, p);
            if (it->second == 0) terms.erase(it);
        }
    }
    bool is_zero() const { return terms.empty(); }
};

inline MultiPoly mp_zero(int n, int s, fe p) { return MultiPoly{n, s, p, {}}; }

inline MultiPoly mp_const(int n, int s, fe p, fe c) {
    MultiPoly q{n, s, p, {}};
    q.add_term(std::vector<int>(n + s, 0), c);
    return q;
}

inline MultiPoly mp_add(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly c = a;
    for (const auto& [e, v] : b.terms) c.add_term(e, v);
    return c;
}

inline MultiPoly mp_scale(const MultiPoly& a, fe c) {
    MultiPoly r{a.n, a.s, a.p, {}};
    for (const auto& [e, v] : a.terms) r.add_term(e, fmul(v, c, a.p));
    return r;
}

inline MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly c{a.n, a.s, a.p, {}};
    for (const auto& [ea, va] : a.terms)
        for (const auto& [eb, vb] : b.terms) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            c.add_term(std::move(e), fmul(va, vb, a.p));
        }
    return c;
}

inline MultiPoly mp_pow(const MultiPoly& a, int k) {
    MultiPoly r = mp_const(a.n, a.s, a.p, 1);
    for (int i = 0; i < k; ++i) r = mp_mul(r, a);
    return r;
}

// ---------------------------------------------------------------------------
// Graded submodules of F = R^s and the reduction criterion
// ---------------------------------------------------------------------------

// A generator is a vector of s homogeneous polynomials of a common degree;
// as an element of Sym(F) it is sum_i gen_i * t_i, bidegree (degree, 1).
struct GradedSubmodule {
    int n = 0, s = 1;
    fe p = 2;
    std::vector<MultiPoly> gens; // elements of Sym(F), t-degree 1
};

inline MultiPoly vector_to_sym(int n, int s, fe p,
                               const std::vector<std::vector<std::pair<Monomial, long long>>>& comps) {
    MultiPoly q{n, s, p, {}};
    for (int i = 0; i < s; ++i)
        for (const auto& [m, c] : comps[i]) {
            std::vector<int> e(n + s, 0);
            for (int v = 0; v < n; ++v) e[v] = m[v];
            e[n + i] = 1;
            q.add_term(std::move(e), fnorm(c, p));
        }
    return q;
}

namespace detail {

// Echelon span of a list of polynomials, with membership testing, over the
// monomial coordinates that actually occur.
struct PolySpan {
    fe p;
    std::map<std::vector<int>, int> index;
    Mat rows; // reduced echelon

    explicit PolySpan(fe p_) : p(p_) {}

    Vec coords(const MultiPoly& q) {
        for (const auto& [e, c] : q.terms)
            if (!index.count(e)) {
                int idx = static_cast<int>(index.size());
                index[e] = idx;
            }
        Vec v(index.size(), 0);
        for (const auto& [e, c] : q.terms) v[index.at(e)] = c;
        return v;
    }

    void insert(const MultiPoly& q) { rows.push_back(coords(q)); }

    void close() {
        for (auto& r : rows) r.resize(index.size(), 0);
        rref(rows, p);
    }

    bool member(const MultiPoly& q) const {
        Vec v(index.size(), 0);
        for (const auto& [e, c] : q.terms) {
            auto it = index.find(e);
            if (it == index.end()) return false;
            v[it->second] = c;
        }
        // reduce against echelon rows
        for (const auto& r : rows) {
            std::size_t lead = 0;
            while (lead < r.size() && r[lead] == 0) ++lead;
            if (lead == r.size() || v[lead] == 0) continue;
            fe f = v[lead];
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = fsub(v[j], fmul(f, r[j], p), p);
        }
        return is_zero_vec(v);
    }
};

inline int x_degree(const MultiPoly& q) {
    int d = -1;
    for (const auto& [e, c] : q.terms) {
        int dx = std::accumulate(e.begin(), e.begin() + q.n, 0);
        if (d == -1) d = dx;
        else if (d != dx) throw std::invalid_argument("generator not x-homogeneous");
    }
    return d;
}

// products of exactly k generators (with repetition)
inline std::vector<MultiPoly> products_of(const std::vector<MultiPoly>& gens, int k) {
    std::vector<MultiPoly> out;
    std::vector<int> pick(k, 0);
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == k) {
            MultiPoly q = mp_const(gens[0].n, gens[0].s, gens[0].p, 1);
            for (int i = 0; i < k; ++i) q = mp_mul(q, gens[pick[i]]);
            out.push_back(std::move(q));
            return;
        }
        for (int i = lo; i < static_cast<int>(gens.size()); ++i) {
            pick[pos] = i;
            self(self, pos + 1, i);
        }
    };
    if (k == 0)
        out.push_back(mp_const(gens[0].n, gens[0].s, gens[0].p, 1));
    else
        rec(rec, 0, 0);
    return out;
}

inline std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
    Monomial m(n, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            m[pos] = left;
            out.push_back(m);
            return;
        }
        for (m[pos] = 0; m[pos] <= left; ++m[pos]) self(self, pos + 1, left - m[pos]);
        m[pos] = 0;
    };
    rec(rec, 0, d);
    return out;
}

// Is q in the R-span of the given Sym elements?  Decided degreewise: the
// coefficients needed have x-degree exactly deg(q) - deg(h).
inline bool in_R_span(const MultiPoly& q, const std::vector<MultiPoly>& span) {
    if (q.is_zero()) return true;
    int dq = x_degree(q);
    PolySpan ps(q.p);
    for (const auto& h : span) {
        if (h.is_zero()) continue;
        int dh = x_degree(h);
        if (dh > dq) continue;
        for (const auto& m : monomials_of_degree(q.n, dq - dh)) {
            std::vector<int> e(q.n + q.s, 0);
            for (int v = 0; v < q.n; ++v) e[v] = m[v];
            MultiPoly xm{q.n, q.s, q.p, {{e, 1}}};
            ps.insert(mp_mul(xm, h));
        }
    }
    ps.coords(q); // make sure q's monomials are indexed
    ps.close();
    return ps.member(q);
}

} // namespace detail

struct ReductionResult {
    bool certified = false;
    int degree = -1;
};

// Certify that U is a reduction of V: V^{d+1} contained in U * V^d inside
// Sym(F), checked on module generators per x-degree by exact linear algebra.
// A negative answer means no certificate up to d_max, not a disproof.
inline ReductionResult is_reduction_graded(const GradedSubmodule& U,
                                           const GradedSubmodule& V, int d_max) {
    if (d_max < 0) throw std::invalid_argument("is_reduction_graded: d_max < 0");
    for (const auto& u : U.gens)
        if (!detail::in_R_span(u, V.gens))
            throw std::invalid_argument("is_reduction_graded: U not contained in V");
    for (int d = 0; d <= d_max; ++d) {
        std::vector<MultiPoly> vd = detail::products_of(V.gens, d);
        std::vector<MultiPoly> uvd;
        for (const auto& u : U.gens)
            for (const auto& w : vd) uvd.push_back(mp_mul(u, w));
        bool ok = true;
        for (const auto& g : detail::products_of(V.gens, d + 1))
            if (!detail::in_R_span(g, uvd)) { ok = false; break; }
        if (ok) return ReductionResult{true, d};
    }
    return ReductionResult{false, -1};
}

// ---------------------------------------------------------------------------
// Certificates: `(y*t1)^2 - (y*t1)*(y*t1 - x*t2) + (x*t1)*(y*t2) = 0`
// ---------------------------------------------------------------------------

namespace detail {

struct CertParser {
    const std::string& text;
    std::size_t i = 0;
    int n, s;
    fe p;

    void skip() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < text.size() && text[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            skip();
            if (eat('+')) acc = mp_add(acc, term());
            else if (eat('-')) acc = mp_add(acc, mp_scale(term(), fnorm(-1, p)));
            else return acc;
        }
    }
    MultiPoly term() {
        MultiPoly acc = factor();
        for (;;) {
            skip();
            if (eat('*')) acc = mp_mul(acc, factor());
            else return acc;
        }
    }
    MultiPoly factor() {
        MultiPoly base = primary();
        skip();
        if (eat('^')) {
            skip();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw std::invalid_argument("certificate: bad exponent");
            return mp_pow(base, std::stoi(text.substr(start, i - start)));
        }
        return base;
    }
    MultiPoly primary() {
        skip();
        if (i >= text.size()) throw std::invalid_argument("certificate: unexpected end");
        if (eat('(')) {
            MultiPoly q = expr();
            if (!eat(')')) throw std::invalid_argument("certificate: missing ')'");
            return q;
        }
        if (eat('-')) return mp_scale(primary(), fnorm(-1, p));
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            return mp_const(n, s, p, fnorm(std::stoll(text.substr(start, i - start)), p));
        }
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw std::invalid_argument(std::string("certificate: unexpected '") + c + "'");
        std::string name(1, c);
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            name += text[i++];
        std::vector<int> e(n + s, 0);
        if (name[0] == 't' && name.size() > 1) {
            int idx = std::stoi(name.substr(1)) - 1;
            if (idx < 0 || idx >= s) throw std::invalid_argument("certificate: bad t-index");
            e[n + idx] = 1;
        } else {
            e[var_index(name)] = 1;
        }
        return MultiPoly{n, s, p, {{std::move(e), 1}}};
    }
};

} // namespace detail

// Parse an expression in x/y/z (or x1..xn) and t1..ts; coefficients live in
// F_p with a large default prime so that integer identities with small
// coefficients are decided faithfully.
inline MultiPoly parse_sym_expr(const std::string& text, int n, int s, fe p = 10007) {
    detail::CertParser parser{text, 0, n, s, p};
    MultiPoly q = parser.expr();
    parser.skip();
    if (parser.i != text.size())
        throw std::invalid_argument("certificate: trailing input in '" + text + "'");
    return q;
}

// One identity per line, each of the form `<expr> = 0` (or `lhs = rhs`).
inline bool verify_certificate(const std::string& line, int n, int s, fe p = 10007) {
    auto eq = line.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("certificate line has no '='");
    MultiPoly lhs = parse_sym_expr(line.substr(0, eq), n, s, p);
    MultiPoly rhs = parse_sym_expr(line.substr(eq + 1), n, s, p);
    return mp_add(lhs, mp_scale(rhs, fnorm(-1, p))).is_zero();
}

// ---------------------------------------------------------------------------
// Liftable closure of a cyclic quotient R/I0, submodule J/I0
// ---------------------------------------------------------------------------

struct LiftableCyclicResult {
    MonomialIdeal closure;        // the closure of the preimage J in R
    std::vector<Monomial> coset_gens; // generators of the image modulo I0
    bool certified = false;
};

inline LiftableCyclicResult liftable_closure_cyclic(const MonomialIdeal& J,
                                                    const MonomialIdeal& I0) {
    if (!ideal_contains(J, I0))
        throw std::invalid_argument("liftable_closure_cyclic: I0 not contained in J");
    ClosureResult c = newton_closure(J);
    MonomialIdeal image = ideal_sum(c.ideal, I0);
    std::vector<Monomial> coset;
    for (const auto& g : image.gens)
        if (!contains(I0, g)) coset.push_back(g);
    return LiftableCyclicResult{c.ideal, std::move(coset), c.certified};
}

} // namespace pairops
