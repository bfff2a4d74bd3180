// Scripted reproductions of the worked examples: each registry entry runs a
// fixed, seeded computation and reports every assertion with its computed and
// expected values.  Tags record whether the expected value is quoted from the
// source example ("paper"), recomputed independently ("derived"), or a
// sanity check ("trivial").
#pragma once

#include "dvr.hpp"
#include "pairops.hpp"
#include "rees.hpp"
#include "semigroup.hpp"

#include <map>
#include <random>
#include <sstream>

namespace pairops {

struct ExampleAssertion {
    std::string label;
    std::string computed;
    std::string expected;
    std::string tag; // paper | derived | trivial
    bool pass = false;
};

struct ExampleReport {
    std::string id;
    unsigned seed = 0;
    std::vector<ExampleAssertion> assertions;

    bool ok() const {
        for (const auto& a : assertions)
            if (!a.pass) return false;
        return true;
    }
};

namespace detail {

inline void expect(ExampleReport& r, const std::string& label, std::string computed,
                   std::string expected, const std::string& tag) {
    bool pass = computed == expected;
    r.assertions.push_back(
        {label, std::move(computed), std::move(expected), tag, pass});
}

inline void expect_true(ExampleReport& r, const std::string& label, bool value,
                        const std::string& tag) {
    expect(r, label, value ? "true" : "false", "true", tag);
}

inline std::string gens_string(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += "t^" + std::to_string(v[i]);
    }
    return out + ")";
}

inline SubspaceModule direct_sum_pair(const SubspaceModule& I, const SubspaceModule& J) {
    const AlgebraPtr& A = I.A;
    std::vector<ModVec> gens;
    for (const auto& b : I.space.basis) {
        ModVec v(2 * A->dim, 0);
        std::copy(b.begin(), b.end(), v.begin());
        gens.push_back(std::move(v));
    }
    for (const auto& b : J.space.basis) {
        ModVec v(2 * A->dim, 0);
        std::copy(b.begin(), b.end(), v.begin() + A->dim);
        gens.push_back(std::move(v));
    }
    return generate_submodule(A, 2, gens);
}

inline ModVec pair_vec(const AlgebraPtr& A, const std::string& a, const std::string& b) {
    Vec va = parse_element(A, a), vb = parse_element(A, b);
    ModVec v(2 * A->dim, 0);
    std::copy(va.begin(), va.end(), v.begin());
    std::copy(vb.begin(), vb.end(), v.begin() + A->dim);
    return v;
}

} // namespace detail

// --------------------------------------------------------------------------
// The individual scripts
// --------------------------------------------------------------------------

// Liftable vs full integral closure on L = (x^2,y^2) inside N = (x^2,xy,y^2).
inline ExampleReport example_lirverstrict() {
    using detail::expect;
    using detail::expect_true;
    ExampleReport r{"ex-lirverstrict", 0, {}};

    MonomialIdeal L = parse_ideal("x^2,y^2", 2);
    MonomialIdeal N = parse_ideal("x^2,x*y,y^2", 2);

    ClosureResult cl = newton_closure(L);
    expect(r, "integral closure of (x^2,y^2)", to_string(cl.ideal), to_string(N), "paper");
    expect_true(r, "closure membership certified by powers", cl.certified, "derived");
    expect(r, "N is integrally closed", to_string(newton_closure(N).ideal), to_string(N),
           "paper");

    // pi: R ->> N/L sends 1 to xy; the kernel is L : (xy) = m
    MonomialIdeal kernel = ideal_colon(L, parse_ideal("x*y", 2));
    expect(r, "kernel of R ->> N/L", to_string(kernel), "x, y", "paper");

    // liftable closure of L in N: close the kernel in R and push forward
    LiftableCyclicResult lic = liftable_closure_cyclic(kernel, kernel);
    expect_true(r, "image of the closed kernel vanishes in N/L", lic.coset_gens.empty(),
                "paper");
    expect_true(r, "liftable closure is L, full closure is N: strict", !(L == N),
                "trivial");
    return r;
}

// jbf(m) of (x^3,y^3) inside (x^3,x^2y^2,y^3) over k[x,y]/m^8, with its
// residual version and a truncation stabilization certificate.
inline ExampleReport example_jbf_strict() {
    using detail::expect;
    using detail::expect_true;
    ExampleReport r{"ex-jbf-strict", 0, {}};

    AlgebraPtr A = build_algebra(2, 2, 8, {});
    SubspaceModule m = maximal_ideal(A);
    SubspaceModule L = parse_ideal_in(A, "x^3, y^3");
    SubspaceModule M = parse_ideal_in(A, "x^3, x^2*y^2, y^3");

    SubspaceModule cl = evaluate_in(op_jbf(m, "m"), L, M);
    expect(r, "jbf(m) of L in M", to_string(A, cl.space, 1), to_string(A, M.space, 1),
           "paper");
    SubspaceModule rv = evaluate_in(residual_version(op_jbf(m, "m")), L, M);
    expect(r, "residual version of jbf(m) of L in M", to_string(A, rv.space, 1),
           to_string(A, L.space, 1), "paper");
    expect_true(r, "the two values differ", !(cl == rv), "trivial");

    auto builder = [](int N) { return build_algebra(2, 2, N, {}); };
    auto make_recipe = [](bool residual) {
        return [residual](const AlgebraPtr& B) {
            SubspaceModule mm = maximal_ideal(B);
            PairOpHandle op = op_jbf(mm, "m");
            if (residual) op = residual_version(op);
            return evaluate_in(op, parse_ideal_in(B, "x^3, y^3"),
                               parse_ideal_in(B, "x^3, x^2*y^2, y^3"));
        };
    };
    expect_true(r, "jbf value stable from truncation 8 to 10",
                compare_truncations(builder, make_recipe(false), 8, 2).stable, "derived");
    expect_true(r, "residual value stable from truncation 8 to 10",
                compare_truncations(builder, make_recipe(true), 8, 2).stable, "derived");
    return r;
}

// K = <(x,0),(y,-x),(0,y)> inside R^2: the artinian side (mK, jbf, the
// pushforward) and the graded side (reduction certificate, integrality
// certificate identities).
inline ExampleReport example_residualversionsdisagree() {
    using detail::expect;
    using detail::expect_true;
    ExampleReport r{"ex-residualversionsdisagree", 0, {}};

    AlgebraPtr A = build_algebra(2, 2, 8, {});
    SubspaceModule m = maximal_ideal(A);
    SubspaceModule m2 = ideal_multiply(m, m);
    SubspaceModule K = generate_submodule(
        A, 2,
        {detail::pair_vec(A, "x", "0"), detail::pair_vec(A, "y", "0-x"),
         detail::pair_vec(A, "0", "y")});

    SubspaceModule mK = ideal_multiply(m, K);
    expect(r, "mK below degree 6", to_string(A, truncate_below(mK, 6), 2),
           to_string(A, truncate_below(detail::direct_sum_pair(m2, m2), 6), 2), "paper");

    PairTriple T = make_triple(A, 2, zero_subspace(2, 2 * A->dim), K.space);
    Subspace W = evaluate(op_jbf(m, "m"), T);
    SubspaceModule mm = detail::direct_sum_pair(m, m);
    expect(r, "jbf(m) of K in R^2 below degree 6",
           to_string(A, truncate_below(SubspaceModule{A, 2, W}, 6), 2),
           to_string(A, truncate_below(mm, 6), 2), "paper");

    // (a,b) -> a x^2 y + b x y^2 carries m + m onto ((x^2y^2) + L) / L
    LinearModuleMap pi = map_from_columns(
        A, 2, 1, {ModVec(parse_element(A, "x^2*y")), ModVec(parse_element(A, "x*y^2"))});
    SubspaceModule L = parse_ideal_in(A, "x^3, y^3");
    Subspace image = subspace_sum(transport_image(pi, mm).space, L.space);
    Subspace expected = subspace_sum(parse_ideal_in(A, "x^2*y^2").space, L.space);
    expect(r, "image of m + m modulo L", to_string(A, image, 1),
           to_string(A, expected, 1), "paper");

    // graded certificate: K is a reduction of m + m
    GradedSubmodule Kg{2, 2, 10007, {}};
    Kg.gens.push_back(vector_to_sym(2, 2, 10007, {{{{1, 0}, 1}}, {}}));
    Kg.gens.push_back(vector_to_sym(2, 2, 10007, {{{{0, 1}, 1}}, {{{1, 0}, -1}}}));
    Kg.gens.push_back(vector_to_sym(2, 2, 10007, {{}, {{{0, 1}, 1}}}));
    GradedSubmodule Vg{2, 2, 10007, {}};
    Vg.gens.push_back(vector_to_sym(2, 2, 10007, {{{{1, 0}, 1}}, {}}));
    Vg.gens.push_back(vector_to_sym(2, 2, 10007, {{{{0, 1}, 1}}, {}}));
    Vg.gens.push_back(vector_to_sym(2, 2, 10007, {{}, {{{1, 0}, 1}}}));
    Vg.gens.push_back(vector_to_sym(2, 2, 10007, {{}, {{{0, 1}, 1}}}));
    ReductionResult red = is_reduction_graded(Kg, Vg, 3);
    expect_true(r, "K is a reduction of m + m", red.certified, "paper");
    expect(r, "reduction degree", std::to_string(red.degree), "1", "paper");

    // integrality certificates for y t1 and x t2 over Sym(R^2)
    expect_true(r, "certificate for y t1",
                verify_certificate(
                    "(y*t1)^2 - (y*t1)*(y*t1 - x*t2) - (x*t1)*(y*t2) = 0", 2, 2),
                "derived");
    expect_true(r, "certificate for x t2",
                verify_certificate(
                    "(x*t2)^2 + (x*t2)*(y*t1 - x*t2) - (x*t1)*(y*t2) = 0", 2, 2),
                "derived");
    return r;
}

// Basically full core versus residual basically full core of m in k[[t^2,t^3]].
inline ExampleReport example_bfcore_t2t3() {
    using detail::expect;
    using detail::expect_true;
    ExampleReport r{"ex-bfcore-t2t3", 0, {}};

    for (fe p : {fe(2), fe(3)}) {
        std::string fp = " over F_" + std::to_string(p);
        AlgebraPtr A = build_semigroup_algebra(p, {2, 3}, 8);
        SubspaceModule m = maximal_ideal(A);
        SubspaceModule m2 = ideal_multiply(m, m);
        auto ideals = enumerate_ideals(A, 2);
        PairOpHandle jbf = op_jbf(m, "m");

        int reductions = 0;
        bool only_expected = true;
        Vec t2 = parse_element(A, "t2"), t3 = parse_element(A, "t3");
        for (const auto& I : ideals) {
            if (!subspace_contains(m.space, I.space)) continue;
            if (!is_cl_reduction(I, m, m, jbf)) continue;
            ++reductions;
            bool known = I == m;
            for (fe a = 0; a < p && !known; ++a) {
                Vec g = t2;
                for (int i = 0; i < A->dim; ++i) g[i] = fadd(g[i], fmul(a, t3[i], p), p);
                known = I == make_ideal(A, {g});
            }
            only_expected = only_expected && known;
        }
        expect(r, "number of bf-reductions of m" + fp, std::to_string(reductions),
               std::to_string(static_cast<int>(p) + 1), "paper");
        expect_true(r, "reductions are exactly the L_a and m" + fp, only_expected,
                    "paper");

        auto core = core_over_candidates(m, m, jbf, ideals, true);
        expect(r, "bf-core of m" + fp, to_string(A, core.result.space, 1),
               to_string(A, m2.space, 1), "paper");
        auto rcore = core_over_candidates(m, m, residual_version(jbf), ideals, true);
        expect(r, "residual bf-core of m" + fp, to_string(A, rcore.result.space, 1),
               to_string(A, m.space, 1), "paper");
    }
    return r;
}

// Colons and m-interiors of J = (t^5,t^6) in the semigroup ring of <2,5>.
inline ExampleReport example_absineqex() {
    using detail::expect;
    using detail::expect_true;
    ExampleReport r{"ex-absineqex", 0, {}};

    auto S = semigroup_invariants({2, 5});
    auto J = parse_value_ideal(S, "t5,t6");
    auto m = value_ideal_from_gens(S, S.gens);

    expect(r, "(J :_Q m)", detail::gens_string(value_minimal_gens(
                               value_colon(ColonMode::in_Q, J, m))),
           "(t^3,t^4)", "paper");
    expect(r, "(J :_R m)", detail::gens_string(value_minimal_gens(
                               value_colon(ColonMode::in_R, J, m))),
           "(t^4,t^5)", "paper");
    auto abs = interior_pair(InteriorMode::absolute, m, J);
    expect(r, "absolute m-interior of J", detail::gens_string(value_minimal_gens(abs)),
           "(t^5,t^6)", "paper");
    auto rel = interior_pair(InteriorMode::relative, m, J);
    expect(r, "relative m-interior of J", detail::gens_string(value_minimal_gens(rel)),
           "(t^6,t^7)", "paper");
    expect_true(r, "absolute interior strictly contains relative",
                value_contains(abs, rel) && !(abs == rel), "trivial");
    return r;
}

// Interior equality above the threshold e + c, across randomized semigroup
// ideals; below the threshold the strict <2,5> case appears.
inline ExampleReport example_prop_abs_rel_nsgr() {
    using detail::expect;
    using detail::expect_true;
    ExampleReport r{"prop-abs-rel-nsgr", 2025, {}};

    std::mt19937 rng(r.seed);
    std::vector<std::vector<int>> sgs = {{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5},
                                         {3, 7}, {4, 5}, {4, 7}, {5, 6}, {3, 4, 5}};
    int checked = 0, equal = 0;
    for (const auto& gens : sgs) {
        auto S = semigroup_invariants(gens);
        for (int t = 0; t < 30 && checked < 200; ++t) {
            int base = S.e + S.c + int(rng() % 8);
            std::vector<int> g = {base};
            int extra = 1 + int(rng() % 3);
            for (int i = 0; i < extra; ++i) g.push_back(base + 1 + int(rng() % 6));
            auto I = value_ideal_from_gens(S, g, true);
            if (I.min_value() < S.e + S.c) continue;
            bool inside = true;
            for (int v : I.finite_part) inside = inside && S.member(v);
            if (!inside) continue;
            I.fractional = false;
            auto res = interior_equality_check(S, I);
            ++checked;
            if (res.condition_met && res.equal) ++equal;
        }
    }
    expect(r, "randomized ideals above the threshold", std::to_string(checked), "200",
           "derived");
    expect(r, "ideals with equal interiors", std::to_string(equal),
           std::to_string(checked), "derived");

    // below the threshold, search low-value ideals of <2,5> for a strict case
    auto S = semigroup_invariants({2, 5});
    std::string found = "none";
    for (int a = 2; a <= S.e + S.c && found == "none"; ++a) {
        if (!S.member(a)) continue;
        for (int b = a + 1; b <= a + 4 && found == "none"; ++b) {
            if (!S.member(b)) continue;
            auto I = value_ideal_from_gens(S, {a, b});
            auto res = interior_equality_check(S, I);
            if (!res.equal) found = detail::gens_string({a, b});
        }
    }
    r.assertions.push_back({"first strict case found below the threshold", found,
                            "logged", "derived", found != "none"});
    auto res = interior_equality_check(S, parse_value_ideal(S, "t5,t6"));
    expect_true(r, "the (t^5,t^6) case is strict", !res.condition_met && !res.equal,
                "paper");
    return r;
}

// Exhaustive annihilator identities over three Gorenstein Artinian algebras.
inline ExampleReport example_gorenstein_identities() {
    using detail::expect;
    ExampleReport r{"gorenstein-identities", 0, {}};

    std::vector<std::pair<std::string, AlgebraPtr>> algebras = {
        {"k[x]/(x^4)", build_algebra(2, 1, 4, {})},
        {"k[x]/(x^5)", build_algebra(2, 1, 5, {})},
        {"k[x,y]/(x^2,y^2)", build_algebra(2, 2, 3, {{{{2, 0}, 1}}, {{{0, 2}, 1}}})},
    };
    for (const auto& [name, A] : algebras) {
        auto ideals = enumerate_ideals(A, 2);
        int pairs = 0, failures = 0;
        for (const auto& J : ideals)
            for (const auto& I : ideals) {
                SubspaceModule aI = annihilator(I);
                SubspaceModule jbe_I = ideal_multiply(J, module_colon(I, J));
                SubspaceModule jbf_aI = module_colon(ideal_multiply(J, aI), J);
                if (!(jbe_I == annihilator(jbf_aI))) ++failures;
                SubspaceModule jbf_I = module_colon(ideal_multiply(J, I), J);
                SubspaceModule jbe_aI = ideal_multiply(J, module_colon(aI, J));
                if (!(jbf_I == annihilator(jbe_aI))) ++failures;
                ++pairs;
            }
        expect(r, "identity failures over " + name + " (" + std::to_string(pairs) +
                   " ideal pairs)",
               std::to_string(failures), "0", "paper");
    }
    return r;
}

// EHU vs liftable closures of module pairs over the DVR k[x]_(x).
inline ExampleReport example_dvr_ehu_li() {
    using detail::expect;
    using detail::expect_true;
    ExampleReport r{"dvr-ehu-li", 77, {}};

    // M = R/(x) = k, L = 0
    DvrPair k_pair{DvrContext{2, 1, 48}, {{UPoly{0, 1}}}, {}};
    auto ehu = dvr_closure(k_pair, DvrClosureKind::ehu);
    auto one = dvr_flatten(k_pair.ctx, {UPoly{1}});
    expect_true(r, "ehu closure of 0 in k is all of k",
                !ehu.equals_L && dvr_member(ehu.preimage, one), "paper");
    auto li = dvr_closure(k_pair, DvrClosureKind::liftable);
    expect_true(r, "liftable closure of 0 in k is 0",
                li.equals_L && !dvr_member(li.preimage, one), "paper");
    auto lih = dvr_closure(k_pair, DvrClosureKind::liftable_hereditary);
    expect_true(r, "hereditary liftable closure of 0 in k is 0", lih.equals_L, "paper");

    // randomized pairs: liftable inside ehu, strict exactly on uncovered torsion
    std::mt19937 rng(r.seed);
    auto rand_poly = [&](int maxdeg) {
        UPoly u(rng() % (maxdeg + 1) + 1, 0);
        for (auto& c : u) c = rng() % 2;
        return up_trim(std::move(u));
    };
    auto xpow = [](int k) {
        UPoly u(k + 1, 0);
        u[k] = 1;
        return u;
    };
    int contained = 0, strict = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int f = 1 + int(rng() % 2);
        DvrContext c{2, f, 48};
        PolyMatrix P(f, std::vector<UPoly>(int(rng() % 2) + 1));
        for (auto& row : P)
            for (auto& e : row) e = up_mul(rand_poly(2), xpow(rng() % 3), c.p);
        std::vector<std::vector<UPoly>> K;
        for (int j = int(rng() % 2); j > 0; --j) {
            std::vector<UPoly> col(f);
            for (auto& e : col) e = rand_poly(4);
            K.push_back(std::move(col));
        }
        DvrPair pair{c, P, K};
        auto li2 = dvr_closure(pair, DvrClosureKind::liftable);
        auto ehu2 = dvr_closure(pair, DvrClosureKind::ehu);
        if (dvr_contains(ehu2.preimage, li2.preimage)) ++contained;
        if (!dvr_equal(li2.preimage, ehu2.preimage)) ++strict;
    }
    expect(r, "random pairs with liftable inside ehu", std::to_string(contained), "100",
           "derived");
    expect_true(r, "strictness occurs on torsion pairs", strict > 5, "derived");

    // torsionless pairs: the closures agree and L is closed
    int agree = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int f = 1 + int(rng() % 3);
        DvrContext c{2, f, 48};
        PolyMatrix P(f, std::vector<UPoly>{});
        std::vector<std::vector<UPoly>> K;
        for (int j = int(rng() % 3); j > 0; --j) {
            std::vector<UPoly> col(f);
            for (auto& e : col) e = rand_poly(4);
            K.push_back(std::move(col));
        }
        DvrPair pair{c, P, K};
        auto ehu2 = dvr_closure(pair, DvrClosureKind::ehu);
        auto lih2 = dvr_closure(pair, DvrClosureKind::liftable_hereditary);
        if (dvr_equal(ehu2.preimage, lih2.preimage) && ehu2.equals_L) ++agree;
    }
    expect(r, "torsionless pairs where ehu = hereditary liftable = L",
           std::to_string(agree), "100", "derived");
    return r;
}

// Ratliff-Rush of (x^4,x^3y,xy^3,y^4) plus a bounded search for a
// restrictability counterexample to the Ratliff-Rush pair operation.
inline ExampleReport example_rr() {
    using detail::expect;
    using detail::expect_true;
    ExampleReport r{"rr-example", 0, {}};

    MonomialIdeal I = parse_ideal("x^4,x^3*y,x*y^3,y^4", 2);
    RatliffRushResult rr = ratliff_rush(I, 8);
    expect_true(r, "x^2y^2 lies in the Ratliff-Rush closure",
                contains(rr.ideal, Monomial{2, 2}), "paper");
    expect_true(r, "Ratliff-Rush chain stabilized", rr.stabilized, "derived");

    // bounded restrictability search for p(I,J) = RR(I) meet J: look for
    // L, N with RR(L meet N) meet N not inside RR(L) meet (L + N)
    std::vector<Monomial> pool = {{3, 0}, {4, 0}, {3, 1}, {2, 2},
                                  {1, 3}, {0, 4}, {0, 5}, {5, 0}};
    std::vector<MonomialIdeal> family;
    for (std::size_t a = 0; a < pool.size(); ++a)
        for (std::size_t b = a; b < pool.size(); ++b)
            for (std::size_t c = b; c < pool.size(); ++c)
                family.push_back(minimalize({pool[a], pool[b], pool[c]}, 2));
    family.push_back(I);
    family.push_back(parse_ideal("x^4,x^3*y,x^2*y^2,x*y^3,y^4", 2));
    std::sort(family.begin(), family.end(),
              [](const MonomialIdeal& a, const MonomialIdeal& b) {
                  return to_string(a) < to_string(b);
              });
    family.erase(std::unique(family.begin(), family.end(),
                             [](const MonomialIdeal& a, const MonomialIdeal& b) {
                                 return a == b;
                             }),
                 family.end());

    std::map<std::string, MonomialIdeal> rr_cache;
    auto rr_of = [&](const MonomialIdeal& J) -> const MonomialIdeal& {
        std::string key = to_string(J);
        auto it = rr_cache.find(key);
        if (it == rr_cache.end())
            it = rr_cache.emplace(key, ratliff_rush(J, 6).ideal).first;
        return it->second;
    };

    std::string witness = "none found";
    for (const auto& L : family) {
        for (const auto& N : family) {
            MonomialIdeal LN = ideal_intersect(L, N);
            MonomialIdeal lhs = ideal_intersect(rr_of(LN), N);
            // membership in RR(L) meet (L+N) reduces to membership in RR(L)
            if (!ideal_contains(rr_of(L), lhs)) {
                witness = "L = " + to_string(L) + ", N = " + to_string(N);
                break;
            }
        }
        if (witness != "none found") break;
    }
    // the search outcome is logged verbatim; either outcome is acceptable
    r.assertions.push_back({"restrictability counterexample over " +
                                std::to_string(family.size()) + " ideals (degree <= 5)",
                            witness, "logged either way", "derived", true});
    return r;
}

// Smile duality over the Gorenstein test algebras: jbf and jbe exchange,
// the residual and hereditary versions exchange, and dualizing twice is the
// identity.
inline ExampleReport example_duality_suite() {
    using detail::expect;
    ExampleReport r{"duality-suite", 0, {}};

    std::vector<std::pair<std::string, AlgebraPtr>> algebras = {
        {"k[x]/(x^4)", build_algebra(2, 1, 4, {})},
        {"k[x]/(x^5)", build_algebra(2, 1, 5, {})},
        {"k[x,y]/(x^2,y^2)", build_algebra(2, 2, 3, {{{{2, 0}, 1}}, {{{0, 2}, 1}}})},
    };
    for (const auto& [name, A] : algebras) {
        auto ideals = enumerate_ideals(A, 2);
        SubspaceModule m = maximal_ideal(A);
        int exchange_fail = 0, version_fail = 0, involution_fail = 0, samples = 0;
        PairOpHandle rv_dual = smile_dual(residual_version(op_jbf(m, "m")));
        PairOpHandle hv_jbe = hereditary_version(op_jbe(m, "m"));
        PairOpHandle smsm = smile_dual(smile_dual(op_jbf(m, "m")));
        PairOpHandle jbf_m = op_jbf(m, "m");
        for (const auto& J : ideals) {
            PairOpHandle sm_jbf = smile_dual(op_jbf(J));
            PairOpHandle jbe = op_jbe(J);
            for (const auto& I : ideals) {
                PairTriple T = make_triple(A, 1, zero_subspace(A->p, A->dim), I.space);
                if (!(evaluate(sm_jbf, T) == evaluate(jbe, T))) ++exchange_fail;
                if (!(evaluate(rv_dual, T) == evaluate(hv_jbe, T))) ++version_fail;
                if (!(evaluate(smsm, T) == evaluate(jbf_m, T))) ++involution_fail;
                ++samples;
            }
        }
        expect(r, "smile(jbf(J)) = jbe(J) failures over " + name + " (" +
                   std::to_string(samples) + " samples)",
               std::to_string(exchange_fail), "0", "paper");
        expect(r, "smile(residual(jbf)) = hereditary(jbe) failures over " + name,
               std::to_string(version_fail), "0", "paper");
        expect(r, "double dual failures over " + name, std::to_string(involution_fail),
               "0", "paper");
    }
    return r;
}

// --------------------------------------------------------------------------
// Registry
// --------------------------------------------------------------------------

inline const std::vector<std::string>& example_registry() {
    static const std::vector<std::string> ids = {
        "ex-lirverstrict",    "ex-jbf-strict",         "ex-residualversionsdisagree",
        "ex-bfcore-t2t3",     "ex-absineqex",          "prop-abs-rel-nsgr",
        "gorenstein-identities", "dvr-ehu-li",         "rr-example",
        "duality-suite"};
    return ids;
}

inline ExampleReport run_example(const std::string& id) {
    if (id == "ex-lirverstrict") return example_lirverstrict();
    if (id == "ex-jbf-strict") return example_jbf_strict();
    if (id == "ex-residualversionsdisagree") return example_residualversionsdisagree();
    if (id == "ex-bfcore-t2t3") return example_bfcore_t2t3();
    if (id == "ex-absineqex") return example_absineqex();
    if (id == "prop-abs-rel-nsgr") return example_prop_abs_rel_nsgr();
    if (id == "gorenstein-identities") return example_gorenstein_identities();
    if (id == "dvr-ehu-li") return example_dvr_ehu_li();
    if (id == "rr-example") return example_rr();
    if (id == "duality-suite") return example_duality_suite();
    std::string msg = "unknown example '" + id + "'; known ids:";
    for (const auto& known : example_registry()) msg += " " + known;
    throw std::invalid_argument(msg);
}

} // namespace pairops
