#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

#include <earspan/earspan.hpp>

using namespace earspan;
using testsupport::make_dec;

TEST_CASE("minimum even-ear counts of known graphs", "[evenmin]") {
    REQUIRE(phi_bruteforce(gen_named("k4")) == 1);
    REQUIRE(phi_bruteforce(gen_named("k5")) == 0);
    REQUIRE(phi_bruteforce(gen_named("k33")) == 1);
    REQUIRE(phi_bruteforce(gen_named("prism")) == 1);
    REQUIRE(phi_bruteforce(gen_named("petersen")) == 1);
    REQUIRE(phi_bruteforce(gen_named("cube")) == 1);
    REQUIRE(phi_bruteforce(gen_wheel(4)) == 0);
    REQUIRE(phi_bruteforce(gen_wheel(5)) == 1);
    REQUIRE(phi_bruteforce(gen_wheel(6)) == 0);
    REQUIRE(phi_bruteforce(gen_wheel(7)) == 1);
    // A cycle has exactly one ear decomposition: the cycle itself.
    REQUIRE(phi_bruteforce(gen_cycle(4)) == 1);
    REQUIRE(phi_bruteforce(gen_cycle(5)) == 0);
    REQUIRE(phi_bruteforce(gen_cycle(6)) == 1);
}

TEST_CASE("open and general minima agree on 2-connected graphs", "[evenmin][property]") {
    auto corpus = testsupport::named_corpus();
    auto cubic = testsupport::random_cubic_corpus({6, 8, 10}, 1, 10);
    corpus.insert(corpus.end(), cubic.begin(), cubic.end());
    for (const auto& [name, g] : corpus) {
        if (g.m() > 16) continue;
        INFO(name);
        REQUIRE(phi_bruteforce_open(g) == phi_bruteforce(g));
    }
}

TEST_CASE("even vertex count forces at least one even ear", "[evenmin][property]") {
    auto corpus = testsupport::named_corpus();
    auto cubic = testsupport::random_cubic_corpus({4, 6, 8, 10}, 1, 10);
    corpus.insert(corpus.end(), cubic.begin(), cubic.end());
    for (const auto& [name, g] : corpus) {
        if (g.m() > 16) continue;
        INFO(name);
        if (g.n() % 2 == 0) REQUIRE(phi_bruteforce(g) >= 1);
    }
}

TEST_CASE("the edge guard trips on large instances", "[evenmin]") {
    graph big = gen_wheel(9);  // 18 edges
    REQUIRE(big.m() == 18);
    REQUIRE_THROWS_AS(phi_bruteforce(big), instance_too_large);
    REQUIRE_THROWS_AS(phi_bruteforce_open(big), instance_too_large);
    REQUIRE(phi_bruteforce(big, 20) >= 0);  // raising the guard admits it
}

TEST_CASE("an already-minimal decomposition passes through unchanged", "[evenmin]") {
    graph k4 = gen_named("k4");
    auto d = build_open_decomposition(k4);
    auto r = minimize_even_ears(k4, d);
    REQUIRE(r.certified);
    REQUIRE(r.d.ears == d.ears);
    REQUIRE(r.d.count_even() == 1);
}

TEST_CASE("a wasteful decomposition is rebuilt to the certified minimum", "[evenmin]") {
    // Wheel on 4 rim vertices: an even first cycle plus an even 2-ear gives
    // two even ears, but the true minimum is zero.
    graph w4 = gen_wheel(4);
    auto bad = make_dec({{0, 1, 2, 3, 0}, {0, 4, 2}, {1, 4}, {3, 4}});
    REQUIRE(validate(w4, bad).empty());
    REQUIRE(bad.count_even() == 2);
    auto r = minimize_even_ears(w4, bad);
    REQUIRE(r.certified);
    REQUIRE(r.d.count_even() == 0);
    REQUIRE(validate(w4, r.d).empty());
    REQUIRE(is_open_decomposition(r.d));
    REQUIRE_FALSE(r.d.ears == bad.ears);
    // Reconstruction is deterministic.
    auto r2 = minimize_even_ears(w4, bad);
    REQUIRE(r2.d.ears == r.d.ears);
}

TEST_CASE("oversized inputs pass through uncertified", "[evenmin]") {
    graph big = gen_wheel(9);
    auto d = build_open_decomposition(big);
    auto r = minimize_even_ears(big, d);
    REQUIRE_FALSE(r.certified);
    REQUIRE(r.d.ears == d.ears);
}

TEST_CASE("builder output already attains the minimum across the corpus",
          "[evenmin][property]") {
    auto corpus = testsupport::named_corpus();
    auto cubic = testsupport::random_cubic_corpus({4, 6, 8, 10}, 1, 15);
    corpus.insert(corpus.end(), cubic.begin(), cubic.end());
    for (const auto& [name, g] : corpus) {
        if (g.m() > 16) continue;
        INFO(name);
        auto d = build_open_decomposition(g);
        auto r = minimize_even_ears(g, d);
        REQUIRE(r.certified);
        REQUIRE(r.d.count_even() == phi_bruteforce(g));
        REQUIRE(validate(g, r.d).empty());
        REQUIRE(is_open_decomposition(r.d));
    }
}

TEST_CASE("invalid or non-open input is rejected", "[evenmin]") {
    graph k4 = gen_named("k4");
    auto bad = make_dec({{0, 1, 2, 0}, {1, 3, 1}, {0, 3}, {2, 3}});
    REQUIRE_THROWS_AS(minimize_even_ears(k4, bad), precondition_violated);
}
