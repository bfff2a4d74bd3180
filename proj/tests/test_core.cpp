// Linear algebra over F_p and monomial ideal arithmetic.

#include <catch2/catch_amalgamated.hpp>

#include <pairops/monomial.hpp>
#include <pairops/subspace.hpp>

#include <random>

using namespace pairops;

TEST_CASE("echelonize basic cases") {
    auto V = echelonize({{1, 0}, {0, 1}}, 2, 2);
    REQUIRE(V.rank() == 2);
    REQUIRE(V.basis == Mat{{1, 0}, {0, 1}});

    auto W = echelonize({{1, 1}, {1, 1}}, 2, 2);
    REQUIRE(W.rank() == 1);
    REQUIRE(W.basis == Mat{{1, 1}});

    auto Z = echelonize({{0, 0, 0}}, 2, 3);
    REQUIRE(Z.rank() == 0);

    REQUIRE_THROWS_AS(echelonize({{1, 0}, {1}}, 2, 2), std::invalid_argument);
}

TEST_CASE("echelonize is idempotent") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        fe p = (trial % 2) ? 2 : 5;
        Mat rows(3, Vec(5));
        for (auto& r : rows)
            for (auto& c : r) c = rng() % p;
        auto V = echelonize(rows, p, 5);
        auto W = echelonize(V.basis, p, 5);
        REQUIRE(V == W);
    }
}

TEST_CASE("sum, intersection, membership") {
    auto ex = echelonize({{1, 0}}, 2, 2);
    auto ey = echelonize({{0, 1}}, 2, 2);
    REQUIRE(subspace_sum(ex, ey).rank() == 2);

    auto full = echelonize({{1, 0}, {0, 1}}, 2, 2);
    auto diag = echelonize({{1, 1}}, 2, 2);
    REQUIRE(subspace_intersect(full, diag) == diag);
    REQUIRE(subspace_intersect(diag, diag) == diag);

    REQUIRE(membership_solve({0, 0}, diag));
    REQUIRE_FALSE(membership_solve({1, 1}, ex));
    auto V = echelonize({{1, 0, 1}, {0, 1, 1}}, 2, 3);
    REQUIRE(membership_solve({1, 1, 0}, V));
}

TEST_CASE("modular law for ranks") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        fe p = (trial % 2) ? 2 : 3;
        auto rand_space = [&] {
            Mat rows(rng() % 4, Vec(6));
            for (auto& r : rows)
                for (auto& c : r) c = rng() % p;
            return echelonize(rows, p, 6);
        };
        auto V = rand_space(), W = rand_space();
        REQUIRE(subspace_sum(V, W).rank() + subspace_intersect(V, W).rank() ==
                V.rank() + W.rank());
    }
}

TEST_CASE("membership agrees with span enumeration over F_2") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Mat rows(3, Vec(5));
        for (auto& r : rows)
            for (auto& c : r) c = rng() % 2;
        auto V = echelonize(rows, 2, 5);
        std::set<Vec> span;
        for (unsigned mask = 0; mask < (1u << V.rank()); ++mask) {
            Vec v(5, 0);
            for (std::size_t i = 0; i < V.rank(); ++i)
                if (mask & (1u << i))
                    for (int j = 0; j < 5; ++j) v[j] ^= V.basis[i][j];
            span.insert(v);
        }
        Vec probe(5);
        for (int t = 0; t < 32; ++t) {
            for (auto& c : probe) c = rng() % 2;
            REQUIRE(membership_solve(probe, V) == (span.count(probe) > 0));
        }
    }
}

TEST_CASE("kernel and solve") {
    // map F_2^3 -> F_2^2 with columns (1,0),(0,1),(1,1)
    Mat cols = {{1, 0}, {0, 1}, {1, 1}};
    auto K = kernel_of_map(cols, 2, 2);
    REQUIRE(K.rank() == 1);
    REQUIRE(membership_solve({1, 1, 1}, K));

    auto [ok, x] = solve_in_span(cols, {1, 1}, 2);
    REQUIRE(ok);
    Vec img(2, 0);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 2; ++i) img[i] ^= fmul(x[j], cols[j][i], 2);
    REQUIRE(img == Vec{1, 1});
}

// ---------------------------------------------------------------------------

TEST_CASE("minimalize") {
    REQUIRE(minimalize({{2}, {3}}, 1).gens == std::vector<Monomial>{{2}});
    REQUIRE(minimalize({{2, 1}, {2, 0}, {0, 1}}, 2).gens ==
            std::vector<Monomial>{{0, 1}, {2, 0}});
    REQUIRE(minimalize({}, 2).is_zero());
}

TEST_CASE("combine: sum, product, intersect, power") {
    auto m = parse_ideal("x,y");
    REQUIRE(to_string(ideal_product(m, m)) == "x^2, x*y, y^2");
    REQUIRE(to_string(ideal_intersect(parse_ideal("x", 2), parse_ideal("y", 2))) == "x*y");
    REQUIRE(to_string(ideal_product(m, parse_ideal("x^3,y^3"))) ==
            "x^4, x^3*y, x*y^3, y^4");
    REQUIRE(ideal_power(m, 2) == ideal_product(m, m));
    REQUIRE_THROWS_AS(ideal_power(m, -1), std::invalid_argument);
}

TEST_CASE("colon identities") {
    REQUIRE(to_string(ideal_colon(parse_ideal("x^2,y^2"), parse_ideal("x*y"))) == "x, y");
    REQUIRE(to_string(ideal_colon(parse_ideal("x^3,y^3"), parse_ideal("x^2*y^2"))) == "x, y");
    auto I = parse_ideal("x^2,x*y^3");
    REQUIRE(ideal_colon(I, parse_ideal("1", 2)) == I);
    REQUIRE_THROWS_AS(ideal_colon(I, MonomialIdeal{2, {}}), std::invalid_argument);
}

TEST_CASE("colon is the exact adjoint, brute force to degree 8") {
    auto I = parse_ideal("x^3,x*y^2");
    auto J = parse_ideal("x*y,y^3");
    auto Q = ideal_colon(I, J);
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; a + b <= 8; ++b) {
            Monomial m = {a, b};
            bool all_in = true;
            for (const auto& g : J.gens) {
                Monomial prod = {a + g[0], b + g[1]};
                if (!contains(I, prod)) { all_in = false; break; }
            }
            REQUIRE(contains(Q, m) == all_in);
        }
}

TEST_CASE("membership in ideal") {
    auto I = parse_ideal("x^2,y^2");
    REQUIRE(contains(I, {2, 2}));
    REQUIRE_FALSE(contains(I, {1, 1}));
    REQUIRE(contains(parse_ideal("x^3,y^3"), {3, 1}));
}

TEST_CASE("newton closure examples") {
    auto c = newton_closure(parse_ideal("x^2,y^2"));
    REQUIRE(c.certified);
    REQUIRE(to_string(c.ideal) == "x^2, x*y, y^2");

    auto principal = newton_closure(parse_ideal("x^5", 1));
    REQUIRE(principal.ideal == parse_ideal("x^5", 1));

    auto q = newton_closure(parse_ideal("x^4,y^4"));
    REQUIRE(to_string(q.ideal) == "x^4, x^3*y, x^2*y^2, x*y^3, y^4");

    REQUIRE_THROWS_AS(newton_closure(MonomialIdeal{2, {}}), std::invalid_argument);
}

TEST_CASE("newton closure in three variables") {
    // (x^2, y^2, z^2): midpoints of generator pairs enter the closure.
    auto c = newton_closure(parse_ideal("x^2,y^2,z^2"));
    REQUIRE(c.certified);
    REQUIRE(contains(c.ideal, {1, 1, 0}));
    REQUIRE(contains(c.ideal, {0, 1, 1}));
    REQUIRE_FALSE(contains(c.ideal, {1, 0, 0}));
    // cross-check every box point against the power test
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int d = 0; d <= 2; ++d) {
                Monomial v = {a, b, d};
                bool facet = contains(c.ideal, v);
                bool power = power_test_member(parse_ideal("x^2,y^2,z^2"), v, 8);
                REQUIRE(facet == power);
            }
}

// All monomial ideals of k[x,y] with generators of degree <= d, as antichains.
static std::vector<MonomialIdeal> all_ideals_2vars(int d) {
    std::vector<Monomial> monos;
    for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b) monos.push_back({a, b});
    std::vector<MonomialIdeal> out;
    std::set<std::vector<Monomial>> seen;
    const std::size_t m = monos.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
        std::vector<Monomial> gens;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t(1) << i)) gens.push_back(monos[i]);
        auto I = minimalize(gens, 2);
        if (seen.insert(I.gens).second) out.push_back(I);
    }
    return out;
}

TEST_CASE("newton closure is a closure operation, exhaustive in degree <= 4") {
    auto ideals = all_ideals_2vars(4);
    std::vector<MonomialIdeal> closures;
    for (const auto& I : ideals) {
        auto c = newton_closure(I);
        REQUIRE(c.certified);
        REQUIRE(ideal_contains(c.ideal, I));                  // extensive
        REQUIRE(newton_closure(c.ideal).ideal == c.ideal);    // idempotent
        closures.push_back(c.ideal);
    }
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (std::size_t j = 0; j < ideals.size(); ++j) {
            if (!ideal_contains(ideals[j], ideals[i])) continue;
            REQUIRE(ideal_contains(closures[j], closures[i])); // order-preserving
        }
}

TEST_CASE("closure of powers contains power of closure") {
    for (const char* text : {"x^2,y^3", "x^3,x*y,y^4", "x^4,y^4"}) {
        auto I = parse_ideal(text);
        auto cI = newton_closure(I).ideal;
        for (int k = 1; k <= 3; ++k)
            REQUIRE(ideal_contains(newton_closure(ideal_power(I, k)).ideal,
                                   ideal_power(cI, k)));
    }
}

TEST_CASE("facet route agrees with power fallback when the fallback certifies") {
    for (const char* text : {"x^2,y^2", "x^3,y^3", "x^2,x*y^3", "x^4,x^3*y,x*y^3,y^4"}) {
        auto I = parse_ideal(text);
        auto facet = newton_closure(I).ideal;
        Monomial box(2, 0);
        for (const auto& g : I.gens)
            for (int i = 0; i < 2; ++i) box[i] = std::max(box[i], g[i]);
        for (int a = 0; a <= box[0]; ++a)
            for (int b = 0; b <= box[1]; ++b) {
                Monomial v = {a, b};
                if (power_test_member(I, v, 16)) REQUIRE(contains(facet, v));
            }
    }
}

TEST_CASE("ratliff rush") {
    auto m = parse_ideal("x,y");
    auto r = ratliff_rush(m, 3);
    REQUIRE(r.ideal == m);
    REQUIRE(r.stabilized);

    auto I = parse_ideal("x^4,x^3*y,x*y^3,y^4");
    auto rr = ratliff_rush(I, 5);
    REQUIRE(contains(rr.ideal, {2, 2}));
    REQUIRE(rr.stabilized);
    // oracle: (I^2 : I) already contains x^2y^2
    REQUIRE(contains(ideal_colon(ideal_power(I, 2), I), {2, 2}));

    auto pr = ratliff_rush(parse_ideal("x^2", 1), 3);
    REQUIRE(pr.ideal == parse_ideal("x^2", 1));
    REQUIRE(pr.stabilized);
}

TEST_CASE("ideal text grammar round trips") {
    REQUIRE(to_string(parse_ideal("x^2*y, y^3")) == "x^2*y, y^3");
    REQUIRE(to_string(parse_ideal(" x1^2 * x2 , x2^3 ", 4)) == "x1^2*x2, x2^3");
    REQUIRE(parse_ideal("1", 2).is_unit());
    REQUIRE(parse_ideal("0", 2).is_zero());
    REQUIRE_THROWS_AS(parse_ideal("x^", 2), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_ideal("q", 2), std::invalid_argument);
}
