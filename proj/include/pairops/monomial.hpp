#pragma once

// Monomial ideals in k[x_1..x_n]: canonical minimal generators, colon
// arithmetic, the Newton-polyhedron integral closure, and the Ratliff-Rush
// operation.  Everything is exponent-vector combinatorics; the coefficient
// field never enters.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pairops {

using Monomial = std::vector<int>; // exponent vector

inline int total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

inline bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Graded order: total degree first, then exponent vector descending
// lexicographically, so x^2 < x*y < y^2 reads left to right in output.
inline bool graded_less(const Monomial& a, const Monomial& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
}

struct MonomialIdeal {
    int n = 0;
    std::vector<Monomial> gens; // minimal, sorted by graded_less

    bool is_zero() const { return gens.empty(); }
    bool is_unit() const {
        return gens.size() == 1 && total_degree(gens[0]) == 0;
    }
    bool operator==(const MonomialIdeal& o) const {
        return n == o.n && gens == o.gens;
    }
};

inline MonomialIdeal minimalize(std::vector<Monomial> gens, int n) {
    for (const auto& g : gens)
        if (static_cast<int>(g.size()) != n)
            throw std::invalid_argument("minimalize: exponent vector length mismatch");
    std::sort(gens.begin(), gens.end(), graded_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> min;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : min)
            if (divides(h, g)) { redundant = true; break; }
        if (!redundant) min.push_back(g);
    }
    return MonomialIdeal{n, std::move(min)};
}

inline bool contains(const MonomialIdeal& I, const Monomial& m) {
    for (const auto& g : I.gens)
        if (divides(g, m)) return true;
    return false;
}

inline bool ideal_contains(const MonomialIdeal& I, const MonomialIdeal& J) {
    for (const auto& g : J.gens)
        if (!contains(I, g)) return false;
    return true;
}

inline MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    auto gens = I.gens;
    gens.insert(gens.end(), J.gens.begin(), J.gens.end());
    return minimalize(std::move(gens), I.n);
}

inline MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J) {
    std::vector<Monomial> gens;
    for (const auto& a : I.gens)
        for (const auto& b : J.gens) {
            Monomial m(I.n);
            for (int i = 0; i < I.n; ++i) m[i] = a[i] + b[i];
            gens.push_back(std::move(m));
        }
    return minimalize(std::move(gens), I.n);
}

inline MonomialIdeal ideal_intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    std::vector<Monomial> gens;
    for (const auto& a : I.gens)
        for (const auto& b : J.gens) {
            Monomial m(I.n);
            for (int i = 0; i < I.n; ++i) m[i] = std::max(a[i], b[i]);
            gens.push_back(std::move(m));
        }
    return minimalize(std::move(gens), I.n);
}

inline MonomialIdeal ideal_power(const MonomialIdeal& I, int k) {
    if (k < 0) throw std::invalid_argument("ideal_power: negative exponent");
    MonomialIdeal r = minimalize({Monomial(I.n, 0)}, I.n);
    for (int i = 0; i < k; ++i) r = ideal_product(r, I);
    return r;
}

// (I : J) = intersection over generators g of J of (I : g), where
// (I : x^a) is generated by x^{max(b-a,0)} over generators x^b of I.
inline MonomialIdeal ideal_colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (J.is_zero()) throw std::invalid_argument("ideal_colon: colon by zero ideal");
    bool first = true;
    MonomialIdeal result;
    for (const auto& g : J.gens) {
        std::vector<Monomial> gens;
        for (const auto& b : I.gens) {
            Monomial m(I.n);
            for (int i = 0; i < I.n; ++i) m[i] = std::max(b[i] - g[i], 0);
            gens.push_back(std::move(m));
        }
        MonomialIdeal part = minimalize(std::move(gens), I.n);
        result = first ? part : ideal_intersect(result, part);
        first = false;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Newton-polyhedron integral closure
// ---------------------------------------------------------------------------

struct ClosureResult {
    MonomialIdeal ideal;
    bool certified = false;
};

namespace detail {

using I64 = long long;
using NVec = std::vector<I64>;

inline I64 dot(const NVec& w, const Monomial& e) {
    I64 s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * e[i];
    return s;
}

// Keep w (or -w) when all components are nonnegative and w != 0; such
// normals give inequalities compatible with the recession orthant.
inline bool orient_nonneg(NVec& w) {
    bool pos = true, neg = true, nonzero = false;
    for (I64 c : w) {
        if (c != 0) nonzero = true;
        if (c < 0) pos = false;
        if (c > 0) neg = false;
    }
    if (!nonzero) return false;
    if (pos) return true;
    if (neg) {
        for (I64& c : w) c = -c;
        return true;
    }
    return false;
}

// Candidate facet normals of conv(gens) + R_{>=0}^n for n <= 3.  Every facet
// hyperplane is spanned by generator points and coordinate ray directions, so
// enumerating those spans (plus the coordinate normals) covers all facets;
// redundant valid inequalities are harmless.
inline std::vector<NVec> facet_normals(const std::vector<Monomial>& gens, int n) {
    std::vector<NVec> normals;
    for (int i = 0; i < n; ++i) {
        NVec e(n, 0);
        e[i] = 1;
        normals.push_back(std::move(e));
    }
    const std::size_t g = gens.size();
    if (n == 2) {
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = i + 1; j < g; ++j) {
                NVec w = {I64(gens[i][1]) - gens[j][1], I64(gens[j][0]) - gens[i][0]};
                if (orient_nonneg(w)) normals.push_back(std::move(w));
            }
    } else if (n == 3) {
        auto cross = [](const NVec& a, const NVec& b) {
            return NVec{a[1] * b[2] - a[2] * b[1],
                        a[2] * b[0] - a[0] * b[2],
                        a[0] * b[1] - a[1] * b[0]};
        };
        std::vector<NVec> dirs;
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = i + 1; j < g; ++j) {
                NVec d(3);
                for (int c = 0; c < 3; ++c) d[c] = I64(gens[j][c]) - gens[i][c];
                // plane through two generators and one coordinate ray
                for (int k = 0; k < 3; ++k) {
                    NVec e(3, 0);
                    e[k] = 1;
                    NVec w = cross(d, e);
                    if (orient_nonneg(w)) normals.push_back(std::move(w));
                }
                // plane through three generators
                for (std::size_t l = j + 1; l < g; ++l) {
                    NVec d2(3);
                    for (int c = 0; c < 3; ++c) d2[c] = I64(gens[l][c]) - gens[i][c];
                    NVec w = cross(d, d2);
                    if (orient_nonneg(w)) normals.push_back(std::move(w));
                }
            }
    }
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    return normals;
}

} // namespace detail

// Membership of x^v in the closure via the power test: (x^v)^m lies in I^m
// for some m <= power_bound.  Sound whenever it answers true.
inline bool power_test_member(const MonomialIdeal& I, const Monomial& v, int power_bound) {
    MonomialIdeal Im = minimalize({Monomial(I.n, 0)}, I.n);
    Monomial vm(I.n, 0);
    for (int m = 1; m <= power_bound; ++m) {
        Im = ideal_product(Im, I);
        for (int i = 0; i < I.n; ++i) vm[i] += v[i];
        if (contains(Im, vm)) return true;
    }
    return false;
}

inline ClosureResult newton_closure(const MonomialIdeal& I, int power_bound = 64) {
    if (I.is_zero()) throw std::invalid_argument("newton_closure: zero ideal");
    const int n = I.n;
    Monomial box(n, 0);
    for (const auto& g : I.gens)
        for (int i = 0; i < n; ++i) box[i] = std::max(box[i], g[i]);

    std::vector<detail::NVec> normals;
    std::vector<detail::I64> offsets;
    bool certified = n <= 3;
    if (certified) {
        normals = detail::facet_normals(I.gens, n);
        for (const auto& w : normals) {
            detail::I64 c = detail::dot(w, I.gens[0]);
            for (const auto& g : I.gens) c = std::min(c, detail::dot(w, g));
            offsets.push_back(c);
        }
    }

    auto member = [&](const Monomial& v) {
        if (certified) {
            for (std::size_t i = 0; i < normals.size(); ++i)
                if (detail::dot(normals[i], v) < offsets[i]) return false;
            return true;
        }
        return contains(I, v) || power_test_member(I, v, power_bound);
    };

    // Minimal generators of the closure all lie in the box bounded by the
    // componentwise maximum of the input generators.
    std::vector<Monomial> closure_gens;
    Monomial v(n, 0);
    auto scan = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            if (member(v)) closure_gens.push_back(v);
            return;
        }
        for (v[pos] = 0; v[pos] <= box[pos]; ++v[pos]) self(self, pos + 1);
        v[pos] = 0;
    };
    scan(scan, 0);
    return ClosureResult{minimalize(std::move(closure_gens), n), certified};
}

// ---------------------------------------------------------------------------
// Ratliff-Rush
// ---------------------------------------------------------------------------

struct RatliffRushResult {
    MonomialIdeal ideal;
    bool stabilized = false;
};

inline RatliffRushResult ratliff_rush(const MonomialIdeal& I, int n_max) {
    if (I.is_zero() || n_max < 1)
        throw std::invalid_argument("ratliff_rush: need nonzero ideal and n_max >= 1");
    MonomialIdeal pow_n = minimalize({Monomial(I.n, 0)}, I.n); // I^0
    MonomialIdeal acc;
    MonomialIdeal prev;
    bool stabilized = false;
    for (int n = 0; n <= n_max; ++n) {
        MonomialIdeal pow_n1 = ideal_product(pow_n, I);
        MonomialIdeal step = ideal_colon(pow_n1, pow_n);
        acc = (n == 0) ? step : ideal_sum(acc, step);
        if (n >= 1) stabilized = (acc == prev);
        prev = acc;
        pow_n = pow_n1;
    }
    return RatliffRushResult{acc, stabilized};
}

// ---------------------------------------------------------------------------
// Text grammar: comma-separated monomials, `^` powers, optional `*`,
// variables x, y, z or x1..xn.  "1" is the unit monomial, "0" the zero ideal.
// ---------------------------------------------------------------------------

inline int var_index(const std::string& name) {
    if (name == "x") return 0;
    if (name == "y") return 1;
    if (name == "z") return 2;
    if (name.size() >= 2 && name[0] == 'x') {
        int idx = std::stoi(name.substr(1));
        if (idx >= 1) return idx - 1;
    }
    throw std::invalid_argument("unknown variable '" + name + "'");
}

// Parses one monomial into (index, exponent) pairs; n is resolved later.
inline std::map<int, int> parse_monomial_raw(const std::string& text) {
    std::map<int, int> exps;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i < text.size() && text[i] == '1' ) {
        ++i;
        skip_ws();
        if (i == text.size()) return exps;
        throw std::invalid_argument("bad monomial '" + text + "'");
    }
    bool expect_factor = true;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        char c = text[i];
        if (c == '*') {
            if (expect_factor) throw std::invalid_argument("bad monomial '" + text + "'");
            expect_factor = true;
            ++i;
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad monomial '" + text + "'");
        std::string name(1, c);
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            name += text[i++];
        int exp = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip_ws();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw std::invalid_argument("bad exponent in '" + text + "'");
            exp = std::stoi(text.substr(start, i - start));
        }
        exps[var_index(name)] += exp;
        expect_factor = false;
    }
    if (expect_factor) throw std::invalid_argument("bad monomial '" + text + "'");
    return exps;
}

inline std::vector<std::string> split_list(const std::string& text, char sep = ',') {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline MonomialIdeal parse_ideal(const std::string& text, int n = -1) {
    std::string trimmed = text;
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    trimmed.erase(trimmed.begin(), std::find_if(trimmed.begin(), trimmed.end(), not_space));
    trimmed.erase(std::find_if(trimmed.rbegin(), trimmed.rend(), not_space).base(), trimmed.end());
    if (trimmed.empty() || trimmed == "0")
        return MonomialIdeal{std::max(n, 1), {}};
    std::vector<std::map<int, int>> raw;
    int max_idx = -1;
    for (const auto& part : split_list(trimmed)) {
        raw.push_back(parse_monomial_raw(part));
        for (const auto& [idx, exp] : raw.back()) max_idx = std::max(max_idx, idx);
    }
    int nn = std::max(n, max_idx + 1);
    if (nn < 1) nn = 1;
    std::vector<Monomial> gens;
    for (const auto& exps : raw) {
        Monomial m(nn, 0);
        for (const auto& [idx, exp] : exps) {
            if (idx >= nn) throw std::invalid_argument("variable index out of range in '" + text + "'");
            m[idx] = exp;
        }
        gens.push_back(std::move(m));
    }
    return minimalize(std::move(gens), nn);
}

inline std::string var_name(int i, int n) {
    if (n <= 3) {
        static const char* names[] = {"x", "y", "z"};
        return names[i];
    }
    return "x" + std::to_string(i + 1);
}

inline std::string to_string(const Monomial& m) {
    const int n = static_cast<int>(m.size());
    std::string s;
    for (int i = 0; i < n; ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(i, n);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

inline std::string to_string(const MonomialIdeal& I) {
    if (I.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < I.gens.size(); ++i) {
        if (i) s += ", ";
        s += to_string(I.gens[i]);
    }
    return s;
}

} // namespace pairops
