// Pair operations on module triples: built-in ops, residual / hereditary /
// pre-envelope versions, the property checker, and the sampled property
// ledger over small exhaustive contexts.

#include <catch2/catch_amalgamated.hpp>

#include <pairops/pairops.hpp>

using namespace pairops;

namespace {

// direct sum I + J inside A^2
SubspaceModule pair_sum(const SubspaceModule& I, const SubspaceModule& J) {
    const AlgebraPtr& A = I.A;
    std::vector<ModVec> gens;
    for (const auto& g : I.space.basis) {
        ModVec v(2 * A->dim, 0);
        std::copy(g.begin(), g.end(), v.begin());
        gens.push_back(std::move(v));
    }
    for (const auto& g : J.space.basis) {
        ModVec v(2 * A->dim, 0);
        std::copy(g.begin(), g.end(), v.begin() + A->dim);
        gens.push_back(std::move(v));
    }
    return generate_submodule(A, 2, gens);
}

ModVec vec2(const AlgebraPtr& A, const std::string& a, const std::string& b) {
    Vec va = parse_element(A, a), vb = parse_element(A, b);
    ModVec v(2 * A->dim, 0);
    std::copy(va.begin(), va.end(), v.begin());
    std::copy(vb.begin(), vb.end(), v.begin() + A->dim);
    return v;
}

} // namespace

TEST_CASE("identity and jbf/jbe on simple triples") {
    AlgebraPtr A = build_algebra(2, 1, 4, {}); // k[x]/x^4
    SubspaceModule m = maximal_ideal(A);
    SubspaceModule x2 = parse_ideal_in(A, "x^2");
    PairTriple T = make_triple(A, 1, zero_subspace(2, A->dim), x2.space);

    REQUIRE(evaluate(op_identity(), T) == x2.space);
    // (m x^2 : m) = (x^3 : m) = (x^2)
    REQUIRE(evaluate(op_jbf(m, "m"), T) == x2.space);
    // m (x^2 : m) = m (x) = (x^2)
    REQUIRE(evaluate(op_jbe(m, "m"), T) == x2.space);

    // zero ideal J: jbf becomes everything, jbe becomes K
    SubspaceModule z = zero_module(A, 1);
    REQUIRE(evaluate(op_jbf(z, "0"), T) == full_subspace(2, A->dim));
    REQUIRE(evaluate(op_jbe(z, "0"), T) == T.K);
}

TEST_CASE("jbf of (x^3,y^3) in (x^3,x^2y^2,y^3) fills the ambient module") {
    AlgebraPtr A = build_algebra(2, 2, 8, {});
    SubspaceModule m = maximal_ideal(A);
    SubspaceModule L = parse_ideal_in(A, "x^3, y^3");
    SubspaceModule M = parse_ideal_in(A, "x^3, x^2*y^2, y^3");

    SubspaceModule cl = evaluate_in(op_jbf(m, "m"), L, M);
    REQUIRE(cl == M);

    // the residual version collapses back to L
    SubspaceModule rcl = evaluate_in(residual_version(op_jbf(m, "m")), L, M);
    REQUIRE(rcl == L);

    // truncation stabilization for both computations
    auto builder = [](int N) { return build_algebra(2, 2, N, {}); };
    auto recipe = [](const PairOpHandle& (*)(), bool residual) {
        return [residual](const AlgebraPtr& B) {
            SubspaceModule mm = maximal_ideal(B);
            SubspaceModule LL = parse_ideal_in(B, "x^3, y^3");
            SubspaceModule MM = parse_ideal_in(B, "x^3, x^2*y^2, y^3");
            PairOpHandle op = op_jbf(mm, "m");
            return evaluate_in(residual ? residual_version(op) : op, LL, MM);
        };
    };
    REQUIRE(compare_truncations(builder, recipe(nullptr, false), 8, 2).stable);
    REQUIRE(compare_truncations(builder, recipe(nullptr, true), 8, 2).stable);
}

TEST_CASE("jbe(m) on (t^5,t^6) in the <2,5> truncation") {
    AlgebraPtr A = build_semigroup_algebra(2, {2, 5}, 12);
    SubspaceModule m = maximal_ideal(A);
    SubspaceModule I = parse_ideal_in(A, "t5,t6");
    PairTriple T = make_triple(A, 1, zero_subspace(2, A->dim), I.space);
    REQUIRE(evaluate(op_jbe(m, "m"), T) == parse_ideal_in(A, "t6,t7").space);
}

TEST_CASE("residual version of jbf vanishes on 0 inside m/L_a in <2,3>") {
    AlgebraPtr A = build_semigroup_algebra(2, {2, 3}, 8);
    SubspaceModule m = maximal_ideal(A);
    for (const char* gen : {"t2", "t2+t3"}) {
        SubspaceModule La = parse_ideal_in(A, gen);
        Presentation pres = free_presentation(m, zero_module(A, 1));
        std::size_t r = pres.pi.s;
        Subspace K = transport_preimage(pres.pi, La).space;
        // the pair (0, m/L_a): V = K
        PairTriple T = make_triple(A, r, K, K);
        Subspace W = evaluate(residual_version(op_jbf(m, "m")), T);
        REQUIRE(W == K);
    }
}

TEST_CASE("kernel submodule of A^2: products, colon, pushforward") {
    AlgebraPtr A = build_algebra(2, 2, 8, {});
    SubspaceModule m = maximal_ideal(A);
    SubspaceModule m2 = ideal_multiply(m, m);
    SubspaceModule K = generate_submodule(
        A, 2, {vec2(A, "x", "0"), vec2(A, "y", "0-x"), vec2(A, "0", "y")});

    // mK = m^2 + m^2 in all degrees below the truncation guard
    SubspaceModule mK = ideal_multiply(m, K);
    REQUIRE(truncate_below(mK, 6) == truncate_below(pair_sum(m2, m2), 6));

    // jbf(m) of K in A^2 is m + m
    PairTriple T = make_triple(A, 2, zero_subspace(2, 2 * A->dim), K.space);
    Subspace W = evaluate(op_jbf(m, "m"), T);
    SubspaceModule mm = pair_sum(m, m);
    REQUIRE(truncate_below(SubspaceModule{A, 2, W}, 6) == truncate_below(mm, 6));

    // pushing m + m along (a,b) -> a*x^2*y + b*x*y^2 lands on (x^2y^2) + L
    LinearModuleMap pi = map_from_columns(
        A, 2, 1, {ModVec(parse_element(A, "x^2*y")), ModVec(parse_element(A, "x*y^2"))});
    SubspaceModule L = parse_ideal_in(A, "x^3, y^3");
    Subspace image = subspace_sum(transport_image(pi, mm).space, L.space);
    Subspace expected = subspace_sum(parse_ideal_in(A, "x^2*y^2").space, L.space);
    REQUIRE(image == expected);
}

TEST_CASE("ideal enumeration in small rings") {
    AlgebraPtr chain = build_algebra(2, 1, 4, {});
    auto ideals = enumerate_ideals(chain, 2);
    REQUIRE(ideals.size() == 5); // 0, (x^3), (x^2), (x), (1)
    REQUIRE(enumerate_ideals(chain, 0).size() == 1);

    AlgebraPtr big = build_algebra(2, 3, 10, {});
    REQUIRE_THROWS_AS(enumerate_ideals(big, 1), std::invalid_argument);
}

TEST_CASE("property ledger over the chain ring k[x]/(x^4)") {
    AlgebraPtr A = build_algebra(2, 1, 4, {});
    SubspaceModule m = maximal_ideal(A);
    auto ideals = enumerate_ideals(A, 2);
    PairContext ctx = make_context(A, 1, ideals, "k[x]/(x^4) ideals", 7);
    REQUIRE(ctx.pairs.size() >= 10);
    REQUIRE_FALSE(ctx.maps.empty());

    PairOpHandle jbf = op_jbf(m, "m");
    PairOpHandle jbe = op_jbe(m, "m");

    for (const char* prop : {"extensive", "order_preserving", "idempotent", "hereditary",
                             "restrictable", "functorial", "surjection_functorial", "nakayama"}) {
        auto rep = check_property(prop, jbf, ctx);
        INFO(prop << ": " << rep.witness);
        REQUIRE(rep.holds);
        REQUIRE(rep.samples > 0);
    }
    for (const char* prop : {"intensive", "order_preserving", "idempotent", "cohereditary"}) {
        auto rep = check_property(prop, jbe, ctx);
        INFO(prop << ": " << rep.witness);
        REQUIRE(rep.holds);
    }
    for (const char* prop :
         {"extensive", "intensive", "idempotent", "order_preserving", "hereditary",
          "cohereditary", "residual", "absolute", "functorial", "cofunctorial",
          "surjection_functorial", "surjection_cofunctorial", "restrictable", "nakayama"}) {
        auto rep = check_property(prop, op_identity(), ctx);
        INFO(prop << ": " << rep.witness);
        REQUIRE(rep.holds);
    }
    REQUIRE_THROWS_AS(check_property("bogus", jbf, ctx), std::invalid_argument);
}

TEST_CASE("jbf is not residual: counterexample with witness") {
    // (m(x^2) : m) = (x^2) but the preimage of the socle of A/(x^2) is (x)
    AlgebraPtr A = build_algebra(2, 1, 4, {});
    SubspaceModule m = maximal_ideal(A);
    PairTriple T = make_triple(A, 1, zero_subspace(2, A->dim),
                               parse_ideal_in(A, "x^2").space);
    PairContext ctx{A, 1, "chain ring", {T}, {}, {}};
    auto rep = check_property("residual", op_jbf(m, "m"), ctx);
    REQUIRE_FALSE(rep.holds);
    REQUIRE_FALSE(rep.witness.empty());
}

TEST_CASE("residual and hereditary versions earn their names") {
    AlgebraPtr A = build_algebra(2, 1, 4, {});
    SubspaceModule m = maximal_ideal(A);
    auto ideals = enumerate_ideals(A, 2);
    PairContext ctx = make_context(A, 1, ideals, "chain ring", 3);

    PairOpHandle jbf = op_jbf(m, "m");
    PairOpHandle rv = residual_version(jbf);
    REQUIRE(check_property("residual", rv, ctx).holds);
    REQUIRE(check_property("nakayama", rv, ctx).holds);
    // cl_r <= cl on every pair
    for (const auto& T : ctx.pairs)
        REQUIRE(subspace_contains(evaluate(jbf, T), evaluate(rv, T)));
    // residual_version of an already residual op changes nothing
    for (const auto& T : ctx.pairs)
        REQUIRE(evaluate(residual_version(op_identity()), T) == evaluate(op_identity(), T));

    PairOpHandle jbe = op_jbe(m, "m");
    PairOpHandle hv = hereditary_version(jbe);
    REQUIRE(check_property("hereditary", hv, ctx).holds);
    REQUIRE(check_property("intensive", hv, ctx).holds);
    // p_h >= p on every pair
    for (const auto& T : ctx.pairs)
        REQUIRE(subspace_contains(evaluate(hv, T), evaluate(jbe, T)));
    // hereditary_version of an already hereditary op changes nothing
    for (const auto& T : ctx.pairs) {
        REQUIRE(evaluate(hereditary_version(jbf), T) == evaluate(jbf, T));
        REQUIRE(evaluate(hereditary_version(op_identity()), T) ==
                evaluate(op_identity(), T));
    }

    // hereditary + intensive implies absolute on the samples
    REQUIRE(check_property("absolute", hv, ctx).holds);
    // extensive + cohereditary implies residual on the samples
    REQUIRE(check_property("extensive", rv, ctx).holds);
    REQUIRE(check_property("cohereditary", rv, ctx).holds);
    REQUIRE(check_property("residual", rv, ctx).holds);
}

TEST_CASE("pre-envelope version matches the hereditary version over Gorenstein rings") {
    AlgebraPtr A = build_algebra(2, 2, 3, {{{{2, 0}, 1}}, {{{0, 2}, 1}}}); // k[x,y]/(x^2,y^2)
    SubspaceModule m = maximal_ideal(A);
    auto ideals = enumerate_ideals(A, 2);
    PairContext ctx = make_context(A, 1, ideals, "k[x,y]/(x^2,y^2)", 5);

    PairOpHandle jbe = op_jbe(m, "m");
    PairOpHandle pe = preenvelope_version(jbe, EnvelopeClass::free_modules);
    PairOpHandle pe2 = preenvelope_version(jbe, EnvelopeClass::injectives);
    PairOpHandle hv = hereditary_version(jbe);
    for (const auto& T : ctx.pairs) {
        Subspace expect = evaluate(hv, T);
        REQUIRE(evaluate(pe, T) == expect);
        REQUIRE(evaluate(pe2, T) == expect);
    }
    // pre-envelope version of identity = preimage of image = L + ker = L here
    for (const auto& T : ctx.pairs)
        REQUIRE(evaluate(preenvelope_version(op_identity(), EnvelopeClass::free_modules), T) ==
                T.V);
}

TEST_CASE("surjection-functorial iff surjection-cofunctorial for order-preserving ops") {
    AlgebraPtr A = build_algebra(2, 1, 4, {});
    SubspaceModule m = maximal_ideal(A);
    auto ideals = enumerate_ideals(A, 2);
    PairContext ctx = make_context(A, 1, ideals, "chain ring", 13);

    std::vector<PairOpHandle> ops = {op_identity(), op_jbf(m, "m"), op_jbe(m, "m"),
                                     residual_version(op_jbf(m, "m")),
                                     hereditary_version(op_jbe(m, "m"))};
    for (const auto& op : ops) {
        if (!check_property("order_preserving", op, ctx).holds) continue;
        bool f = check_property("surjection_functorial", op, ctx).holds;
        bool c = check_property("surjection_cofunctorial", op, ctx).holds;
        INFO(op.name);
        REQUIRE(f == c);
    }
}

TEST_CASE("is_cl_reduction basics") {
    AlgebraPtr A = build_algebra(2, 1, 4, {});
    SubspaceModule m = maximal_ideal(A);
    SubspaceModule m2 = ideal_multiply(m, m);
    PairOpHandle jbf = op_jbf(m, "m");
    REQUIRE(is_cl_reduction(m2, m2, m, jbf));   // N = L
    REQUIRE(is_cl_reduction(m2, m2, full_module(A, 1), jbf));
    REQUIRE_THROWS_AS(is_cl_reduction(m, m2, m2, jbf), std::invalid_argument);
}
