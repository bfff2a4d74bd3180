#pragma once

// Value-set model of numerical semigroup rings k[[t^S]].  A monomial
// (fractional) ideal is the set of t-adic values of its elements: a finite
// sorted set plus a tail threshold tau with every integer >= tau included.
// Colons in R and in the quotient field Q = k((t)) are finite set
// computations.  Only monomial ideals live here; binomial generators are
// handled by the artinian truncation model.

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pairops {

struct NumericalSemigroup {
    std::vector<int> gens;
    int e = 1;          // multiplicity
    int F = -1;         // Frobenius number
    int c = 0;          // conductor, c = F + 1
    std::vector<int> gaps;
    std::vector<int> apery; // Apery set w.r.t. e: minimal element per residue class

    bool member(int v) const {
        if (v < 0) return false;
        if (v >= c) return true;
        return !std::binary_search(gaps.begin(), gaps.end(), v);
    }
};

inline NumericalSemigroup semigroup_invariants(std::vector<int> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.empty() || gens.front() < 1)
        throw std::invalid_argument("semigroup generators must be positive");
    int g = 0;
    for (int x : gens) g = std::gcd(g, x);
    if (g != 1) throw std::invalid_argument("semigroup generators must have gcd 1");

    NumericalSemigroup S;
    S.gens = gens;
    S.e = gens.front();
    const int bound = gens.front() * gens.back() + gens.back() + 1;
    std::vector<bool> in(bound, false);
    in[0] = true;
    for (int v = 1; v < bound; ++v)
        for (int s : gens)
            if (s <= v && in[v - s]) { in[v] = true; break; }
    S.F = -1;
    for (int v = 0; v < bound; ++v)
        if (!in[v]) S.F = v;
    S.c = S.F + 1;
    for (int v = 0; v < S.c; ++v)
        if (!in[v]) S.gaps.push_back(v);
    S.apery.assign(S.e, -1);
    for (int v = 0; v < bound && std::count(S.apery.begin(), S.apery.end(), -1); ++v)
        if (in[v] && S.apery[v % S.e] == -1) S.apery[v % S.e] = v;
    return S;
}

struct ValueIdeal {
    const NumericalSemigroup* S = nullptr;
    bool fractional = false;
    std::vector<int> finite_part; // sorted values below tau
    int tau = 0;                  // every integer >= tau is in the set

    bool member(int v) const {
        if (v >= tau) return true;
        return std::binary_search(finite_part.begin(), finite_part.end(), v);
    }
    int min_value() const { return finite_part.empty() ? tau : finite_part.front(); }
    bool operator==(const ValueIdeal& o) const {
        return fractional == o.fractional && finite_part == o.finite_part && tau == o.tau;
    }
};

// Canonicalize: drop duplicates, fold the finite part into the tail, make
// tau minimal.
inline ValueIdeal normalize_value_ideal(const NumericalSemigroup& S,
                                        std::vector<int> values, int tau,
                                        bool fractional) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    while (!values.empty() && values.back() >= tau) values.pop_back();
    while (!values.empty() && values.back() == tau - 1) {
        values.pop_back();
        --tau;
    }
    if (!fractional) {
        for (int v : values)
            if (!S.member(v))
                throw std::invalid_argument("non-fractional value ideal contains a gap value");
    }
    ValueIdeal out;
    out.S = &S;
    out.fractional = fractional;
    out.finite_part = std::move(values);
    out.tau = tau;
    return out;
}

// The R-module generated by the given values: gens + S.
inline ValueIdeal value_ideal_from_gens(const NumericalSemigroup& S,
                                        const std::vector<int>& gens,
                                        bool fractional = false) {
    if (gens.empty())
        throw std::invalid_argument("value ideal needs at least one generator");
    int mn = *std::min_element(gens.begin(), gens.end());
    int tau = mn + S.c;
    std::vector<int> values;
    for (int g : gens)
        for (int s = 0; g + s < tau; ++s)
            if (S.member(s)) values.push_back(g + s);
    return normalize_value_ideal(S, std::move(values), tau, fractional);
}

inline ValueIdeal value_sum(const ValueIdeal& I, const ValueIdeal& J) {
    std::vector<int> values = I.finite_part;
    values.insert(values.end(), J.finite_part.begin(), J.finite_part.end());
    int tau = std::min(I.tau, J.tau);
    for (int v = tau; v < std::max(I.tau, J.tau); ++v)
        if (I.member(v) || J.member(v)) values.push_back(v);
    return normalize_value_ideal(*I.S, std::move(values), std::max(I.tau, J.tau),
                                 I.fractional || J.fractional);
}

inline ValueIdeal value_product(const ValueIdeal& I, const ValueIdeal& J) {
    int tau = std::min(I.tau + J.min_value(), J.tau + I.min_value());
    std::vector<int> values;
    for (int v = I.min_value(); v < tau; ++v) {
        if (!I.member(v)) continue;
        for (int w = J.min_value(); v + w < tau; ++w)
            if (J.member(w)) values.push_back(v + w);
    }
    bool fractional = I.fractional || J.fractional;
    if (fractional) {
        // the product may land back inside S; detect that
        bool in_S = true;
        for (int v : values) in_S = in_S && I.S->member(v);
        fractional = !in_S;
    }
    return normalize_value_ideal(*I.S, std::move(values), tau, fractional);
}

inline ValueIdeal value_shift(const ValueIdeal& I, int d) {
    std::vector<int> values;
    for (int v : I.finite_part) values.push_back(v + d);
    bool fractional = I.fractional;
    for (int v : values)
        if (!I.S->member(v)) fractional = true;
    return normalize_value_ideal(*I.S, std::move(values), I.tau + d, fractional);
}

enum class ColonMode { in_R, in_Q };

// {v : v + w in I for all w in J}, v ranging over S (in_R) or Z (in_Q).
inline ValueIdeal value_colon(ColonMode mode, const ValueIdeal& I, const ValueIdeal& J) {
    const NumericalSemigroup& S = *I.S;
    int lo = I.min_value() - J.min_value();
    int hi = I.tau - J.min_value(); // all v >= hi qualify
    std::vector<int> values;
    for (int v = lo; v < hi; ++v) {
        if (mode == ColonMode::in_R && !S.member(v)) continue;
        bool ok = true;
        for (int w = J.min_value(); w < I.tau - v && ok; ++w)
            if (J.member(w)) ok = I.member(v + w);
        if (ok) values.push_back(v);
    }
    int tau = hi;
    if (mode == ColonMode::in_R && tau < S.c) {
        for (int v = tau; v < S.c; ++v)
            if (S.member(v)) values.push_back(v);
        tau = S.c;
    }
    bool fractional = mode == ColonMode::in_Q;
    if (fractional) {
        bool in_S = true;
        for (int v : values) in_S = in_S && S.member(v);
        if (in_S && tau >= S.c) fractional = false;
    }
    return normalize_value_ideal(S, std::move(values), tau, fractional);
}

enum class InteriorMode { relative, absolute };

// relative: J (I :_R J); absolute: J (I :_Q J), using Q as the injective
// ambient module.  Both land inside I, hence inside R.
inline ValueIdeal interior_pair(InteriorMode mode, const ValueIdeal& J, const ValueIdeal& I) {
    ColonMode cm = mode == InteriorMode::relative ? ColonMode::in_R : ColonMode::in_Q;
    ValueIdeal q = value_colon(cm, I, J);
    ValueIdeal prod = value_product(J, q);
    // defensive restriction to S-values
    std::vector<int> values;
    for (int v : prod.finite_part)
        if (prod.S->member(v)) values.push_back(v);
    int tau = std::max(prod.tau, prod.S->c);
    for (int v = prod.tau; v < tau; ++v)
        if (prod.member(v) && prod.S->member(v)) values.push_back(v);
    return normalize_value_ideal(*prod.S, std::move(values), tau, false);
}

struct InteriorEqualityResult {
    bool condition_met = false;
    bool equal = false;
};

inline InteriorEqualityResult interior_equality_check(const NumericalSemigroup& S,
                                                      const ValueIdeal& I) {
    ValueIdeal m = value_ideal_from_gens(S, S.gens);
    InteriorEqualityResult r;
    r.condition_met = I.min_value() >= S.e + S.c;
    r.equal = interior_pair(InteriorMode::relative, m, I) ==
              interior_pair(InteriorMode::absolute, m, I);
    if (r.condition_met && !r.equal)
        throw std::logic_error("interior equality violated above the threshold");
    return r;
}

inline bool value_contains(const ValueIdeal& big, const ValueIdeal& small) {
    for (int v : small.finite_part)
        if (!big.member(v)) return false;
    for (int v = small.tau; v < big.tau; ++v)
        if (!big.member(v)) return false;
    return true;
}

// Minimal R-module generators of a value ideal; all lie below tau + e.
inline std::vector<int> value_minimal_gens(const ValueIdeal& I) {
    const NumericalSemigroup& S = *I.S;
    std::vector<int> gens;
    for (int v = I.min_value(); v < I.tau + S.e; ++v) {
        if (!I.member(v)) continue;
        bool minimal = true;
        for (int s : S.gens)
            if (I.member(v - s)) { minimal = false; break; }
        if (minimal) gens.push_back(v);
    }
    return gens;
}

inline std::string to_string(const ValueIdeal& I) {
    std::string s;
    for (int v : value_minimal_gens(I)) {
        if (!s.empty()) s += ", ";
        s += v == 1 ? "t" : "t^" + std::to_string(v);
    }
    return s.empty() ? "0" : s;
}

// `t5,t6` or `t^5,t^6` or `m`
inline ValueIdeal parse_value_ideal(const NumericalSemigroup& S, const std::string& text,
                                    bool fractional = false) {
    if (text == "m") return value_ideal_from_gens(S, S.gens);
    std::vector<int> gens;
    for (const auto& part : split_list(text)) {
        std::string s = part;
        s.erase(std::remove_if(s.begin(), s.end(),
                               [](unsigned char ch) { return std::isspace(ch); }),
                s.end());
        if (s.empty()) continue;
        if (s[0] != 't') throw std::invalid_argument("bad value ideal term '" + part + "'");
        std::string digits = s.substr(1);
        if (!digits.empty() && digits[0] == '^') digits = digits.substr(1);
        gens.push_back(digits.empty() ? 1 : std::stoi(digits));
    }
    return value_ideal_from_gens(S, gens, fractional);
}

} // namespace pairops
