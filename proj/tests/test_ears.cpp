#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

#include <earspan/earspan.hpp>

using namespace earspan;
using testsupport::make_dec;

TEST_CASE("ear classification and accessors", "[ears]") {
    ear closed({0, 1, 2, 0});
    REQUIRE(closed.length() == 3);
    REQUIRE(closed.is_closed());
    REQUIRE_FALSE(closed.is_open());
    REQUIRE(closed.is_short());
    REQUIRE_FALSE(closed.is_even());
    REQUIRE(closed.even_contribution() == 0);
    REQUIRE(closed.internals() == std::vector<vertex>{1, 2});

    ear two({3, 7, 5});
    REQUIRE(two.length() == 2);
    REQUIRE(two.is_open());
    REQUIRE(two.is_short());
    REQUIRE(two.is_even());
    REQUIRE(two.even_contribution() == 1);
    REQUIRE(two.internal_count() == 1);
    REQUIRE(two.has_internal(7));
    REQUIRE_FALSE(two.has_internal(3));
    REQUIRE(two.has_endpoint(3));
    REQUIRE(two.has_endpoint(5));
    REQUIRE_FALSE(two.has_endpoint(7));

    ear lng({0, 4, 5, 6, 2});
    REQUIRE(lng.is_long());
    REQUIRE_FALSE(lng.is_short());
    REQUIRE(lng.edges() ==
            std::vector<edge>{{0, 4}, {4, 5}, {5, 6}, {2, 6}});
    REQUIRE(lng.contains_edge(5, 4));
    REQUIRE_FALSE(lng.contains_edge(0, 2));
    REQUIRE(lng.reversed().v == std::vector<vertex>{2, 6, 5, 4, 0});
    REQUIRE(lng.oriented_from(2).v == std::vector<vertex>{2, 6, 5, 4, 0});
    REQUIRE(lng.oriented_from(0).v == lng.v);
    REQUIRE_THROWS_AS(lng.oriented_from(5), precondition_violated);

    REQUIRE_THROWS_AS(ear({3}), precondition_violated);
}

TEST_CASE("trivial_ear canonicalizes and rejects loops", "[ears]") {
    REQUIRE(trivial_ear(5, 2).v == std::vector<vertex>{2, 5});
    REQUIRE(trivial_ear(2, 5).v == std::vector<vertex>{2, 5});
    REQUIRE(trivial_ear(2, 5).is_trivial());
    REQUIRE_THROWS_AS(trivial_ear(4, 4), precondition_violated);
}

TEST_CASE("validate accepts a correct decomposition", "[ears]") {
    graph k4 = gen_named("k4");
    auto d = make_dec({{0, 1, 2, 0}, {0, 3, 1}, {2, 3}});
    REQUIRE(validate(k4, d).empty());
    REQUIRE(is_valid(k4, d));
    REQUIRE(is_open_decomposition(d));
    REQUIRE(d.count_even() == 1);
    REQUIRE(d.count_nontrivial() == 2);
    REQUIRE(d.count_trivial() == 1);
}

TEST_CASE("validate reports each violation class", "[ears]") {
    graph k4 = gen_named("k4");

    // First ear must be closed at the root.
    auto open_first = make_dec({{0, 1, 2, 3}, {0, 3}, {1, 3}, {0, 2}});
    auto v1 = validate(k4, open_first);
    REQUIRE_FALSE(v1.empty());

    // Ear uses an edge absent from the graph.
    graph c4 = gen_cycle(4);
    auto ghost = make_dec({{0, 1, 2, 3, 0}, {0, 2}});
    REQUIRE_FALSE(validate(c4, ghost).empty());

    // Edge used twice.
    auto dup = make_dec({{0, 1, 2, 0}, {0, 3, 1}, {2, 3}, {0, 1}});
    REQUIRE_FALSE(validate(k4, dup).empty());

    // Endpoint not covered by the prefix: a trivial ear covers nothing, so 3
    // is still fresh when [0,3] appears.
    auto dangling = make_dec({{0, 1, 2, 0}, {0, 3}, {1, 3}, {2, 3}});
    REQUIRE_FALSE(validate(k4, dangling).empty());

    // Vertex never covered.
    graph k4_plus(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto uncovered = make_dec({{0, 1, 2, 0}, {0, 3, 1}, {2, 3}});
    REQUIRE_FALSE(validate(k4_plus, uncovered).empty());

    // Leftover edge not carried by any ear.
    auto missing = make_dec({{0, 1, 2, 0}, {0, 3, 1}});
    REQUIRE_FALSE(validate(k4, missing).empty());

    // Internal vertex already covered earlier.
    graph w4 = gen_wheel(4);
    auto reuse = make_dec({{0, 1, 2, 3, 0}, {0, 4, 1}, {2, 4, 3}});
    REQUIRE_FALSE(validate(w4, reuse).empty());
}

TEST_CASE("violation messages use 1-based ear numbering", "[ears]") {
    graph c4 = gen_cycle(4);
    auto ghost = make_dec({{0, 1, 2, 3, 0}, {0, 2}});
    auto viol = validate(c4, ghost);
    REQUIRE_FALSE(viol.empty());
    bool mentions_ear2 = false;
    for (const auto& s : viol)
        if (s.find("ear 2") != std::string::npos) mentions_ear2 = true;
    REQUIRE(mentions_ear2);
}

TEST_CASE("openness of a decomposition", "[ears]") {
    auto open_dec = make_dec({{0, 1, 2, 0}, {0, 3, 1}, {2, 3}});
    REQUIRE(is_open_decomposition(open_dec));
    auto closed_later = make_dec({{0, 1, 2, 0}, {1, 3, 1}});
    REQUIRE_FALSE(is_open_decomposition(closed_later));
    auto open_first = make_dec({{0, 1, 2, 3}});
    REQUIRE_FALSE(is_open_decomposition(open_first));
}

TEST_CASE("pendant classification and counters", "[ears]") {
    // First decomposition of K4: closed first ear is never pendant,
    // the open 2-ear is pendant and feeds the eardrum counter.
    auto d = make_dec({{0, 1, 2, 0}, {0, 3, 1}, {2, 3}});
    REQUIRE_FALSE(counts_as_pendant_open(d, 0));
    REQUIRE(classify_pendant(d, 1));
    REQUIRE(counts_as_pendant_open(d, 1));
    REQUIRE(count_pendant(d) == 1);
    REQUIRE(count_pendant_3ears(d) == 0);
    REQUIRE(pendant_short_open_ears(d) == std::vector<std::size_t>{1});
    REQUIRE_THROWS_AS(classify_pendant(d, 2), precondition_violated);   // trivial
    REQUIRE_THROWS_AS(classify_pendant(d, 17), precondition_violated);  // out of range

    // A short ear whose internal vertex is an endpoint of another
    // nontrivial ear is not pendant.
    auto e = make_dec({{0, 1, 2, 3, 0}, {1, 4, 5, 2}, {5, 6, 1}, {4, 6}, {0, 6}});
    REQUIRE_FALSE(classify_pendant(e, 1));  // internal 5 is an endpoint of ear 3
    REQUIRE(classify_pendant(e, 2));        // internal 6 touches only trivial ears
    REQUIRE(count_pendant(e) == 1);
    REQUIRE(count_pendant_3ears(e) == 0);

    // Long pendant ears count toward pi but not toward the eardrum.
    auto f = make_dec({{0, 1, 2, 3, 0}, {1, 4, 5, 2}, {2, 9, 8, 7, 6, 3},
                       {4, 6}, {5, 9}, {0, 8}, {2, 7}});
    REQUIRE(count_pendant(f) == 2);
    REQUIRE(count_pendant_3ears(f) == 1);
    REQUIRE(pendant_short_open_ears(f) == std::vector<std::size_t>{1});
}

TEST_CASE("nontrivial_edges collects exactly the nontrivial ears' edges", "[ears]") {
    auto d = make_dec({{0, 1, 2, 0}, {0, 3, 1}, {2, 3}});
    REQUIRE(nontrivial_edges(d) ==
            std::vector<edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

TEST_CASE("JSON round trip preserves a decomposition", "[ears]") {
    auto d = make_dec({{0, 1, 2, 3, 0}, {1, 4, 5, 2}, {5, 6, 1}, {4, 6}, {0, 6}});
    auto j = to_json(d);
    auto back = decomposition_from_json(j);
    REQUIRE(back.root == d.root);
    REQUIRE(back.ears.size() == d.ears.size());
    for (std::size_t i = 0; i < d.ears.size(); ++i) REQUIRE(back.ears[i] == d.ears[i]);
    REQUIRE(ears_to_json(d.ears).dump() ==
            "[[0,1,2,3,0],[1,4,5,2],[5,6,1],[4,6],[0,6]]");
}

TEST_CASE("covered_before walks the prefix", "[ears]") {
    auto d = make_dec({{0, 1, 2, 0}, {0, 3, 1}, {2, 3}});
    // The root counts as covered even before the first ear.
    auto c0 = covered_before(d, 0, 4);
    REQUIRE(c0[0] == 1);
    REQUIRE(std::count(c0.begin(), c0.end(), 1) == 1);
    auto c1 = covered_before(d, 1, 4);
    REQUIRE(c1[0] == 1);
    REQUIRE(c1[1] == 1);
    REQUIRE(c1[2] == 1);
    REQUIRE(c1[3] == 0);
    auto c2 = covered_before(d, 2, 4);
    REQUIRE(std::count(c2.begin(), c2.end(), 1) == 4);
}
