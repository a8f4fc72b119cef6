#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

#include <earspan/earspan.hpp>

#include <string>
#include <vector>

using namespace earspan;
using testsupport::graph_from_dec;
using testsupport::make_dec;

namespace {

struct rewrite_fixture {
    std::string name;
    int n;
    std::vector<std::vector<vertex>> input;
    std::string labels;
    std::string final_ears;
    int evens_before;
    int evens_after;
};

// One fixture per rewrite branch; expected outputs hand-derived from the
// rewrite rules and frozen.
const std::vector<rewrite_fixture> kFixtures = {
    {"mixed pair: 2-ear folded into a 3-ear", 7,
     {{0, 1, 2, 3, 0}, {2, 5, 6, 3}, {1, 4, 2}, {4, 5}, {0, 6}},
     "N1",
     "[[0,1,2,3,0],[1,4,5,6,3],[0,6],[2,4],[2,5]]", 2, 2},
    {"3-ear pair, shared endpoint, chord to the inner vertex", 8,
     {{0, 1, 2, 3, 0}, {1, 4, 5, 2}, {2, 7, 6, 3}, {4, 6}, {4, 7}, {0, 5}},
     "N2bI",
     "[[0,1,2,3,0],[2,5,4,7,6,3],[4,6],[0,5],[1,4],[2,7]]", 1, 1},
    {"3-ear pair with distinct outer endpoints", 8,
     {{0, 1, 2, 3, 0}, {1, 4, 5, 2}, {3, 6, 7, 0}, {4, 7}, {0, 5}, {1, 6}},
     "N2a",
     "[[0,1,2,3,0],[2,5,4,7,6,3],[0,5],[1,6],[1,4],[0,7]]", 1, 1},
    {"adjacent 2-ear interiors spliced", 6,
     {{0, 1, 2, 3, 0}, {1, 4, 2}, {0, 5, 3}, {4, 5}},
     "N0-improve",
     "[[0,1,2,3,0],[1,4,5,0],[2,4],[3,5]]", 3, 1},
    {"3-ear pair, shared endpoint, chord to the middle vertex", 8,
     {{0, 1, 2, 3, 0}, {1, 4, 5, 2}, {2, 7, 6, 3}, {4, 6}, {5, 7}, {0, 4}},
     "N2bI",
     "[[0,1,2,3,0],[1,4,6,7,5,2],[0,4],[4,5],[2,7],[3,6]]", 1, 1},
    {"shared endpoint, third neighbor at the root", 8,
     {{0, 1, 2, 3, 0}, {1, 4, 5, 2}, {2, 7, 6, 3}, {4, 6}, {0, 7}, {0, 5}},
     "N2bII-long",
     "[[0,1,2,3,0],[2,5,4,6,7,0],[0,5],[1,4],[2,7],[3,6]]", 1, 1},
    {"shared endpoint, third neighbor inside a long ear", 9,
     {{0, 1, 2, 3, 8, 0}, {1, 4, 5, 2}, {2, 7, 6, 3}, {4, 6}, {7, 8}, {0, 5}},
     "N2bII-long",
     "[[0,1,2,3,8,0],[2,5,4,6,7,8],[0,5],[1,4],[2,7],[3,6]]", 0, 0},
    {"shared endpoint, third neighbor inside a pendant 2-ear", 9,
     {{0, 1, 2, 3, 0}, {1, 4, 5, 2}, {2, 7, 6, 3}, {1, 8, 3}, {4, 6}, {7, 8}, {0, 5}},
     "N2bII-2",
     "[[0,1,2,3,0],[1,8,7,6,4,5,2],[0,5],[3,8],[1,4],[2,7],[3,6]]", 2, 2},
    {"shared endpoint, third neighbor inside a pendant 3-ear", 10,
     {{0, 1, 2, 3, 0}, {1, 4, 5, 2}, {2, 7, 6, 3}, {3, 9, 8, 0}, {4, 6}, {7, 8}, {0, 5},
      {0, 9}},
     "N2bII-3-distinct",
     "[[0,1,2,3,0],[2,5,4,6,7,8,9,3],[0,5],[0,9],[1,4],[2,7],[3,6],[0,8]]", 1, 1},
    {"shared endpoint, 3-ear home closing the hexagon", 10,
     {{0, 1, 2, 3, 0}, {1, 4, 5, 2}, {2, 7, 6, 3}, {2, 9, 8, 0}, {4, 6}, {7, 8}, {5, 9}},
     "N2bII-3-coincide",
     "[[0,1,2,3,0],[1,4,5,2],[2,9,8,7,6,3],[4,6],[5,9],[0,8],[2,7]]", 1, 1},
};

std::string run_and_collect(const graph& g, const ear_decomposition& d,
                            ear_decomposition& out) {
    trace_log tl = trace_log::on();
    nicify_options opt;
    opt.certified = false;
    opt.trace = &tl;
    out = nicify(g, d, opt);
    std::string labels;
    for (const auto& line : tl.lines()) {
        if (!line.contains("case")) continue;
        if (!labels.empty()) labels += ",";
        labels += std::string(line["case"]);
    }
    return labels;
}

}  // namespace

TEST_CASE("each rewrite branch produces its frozen decomposition", "[nicify]") {
    for (const auto& fx : kFixtures) {
        DYNAMIC_SECTION(fx.name) {
            auto d = make_dec(fx.input);
            graph g = graph_from_dec(fx.n, d);
            REQUIRE(g.min_degree() >= 3);
            REQUIRE(validate(g, d).empty());
            REQUIRE(d.count_even() == fx.evens_before);

            ear_decomposition out;
            std::string labels = run_and_collect(g, d, out);
            REQUIRE(labels == fx.labels);
            REQUIRE(ears_to_json(out.ears).dump() == fx.final_ears);
            REQUIRE(out.count_even() == fx.evens_after);

            REQUIRE(validate(g, out).empty());
            REQUIRE(is_open_decomposition(out));
            REQUIRE(is_nice(g, out));
        }
    }
}

TEST_CASE("certified input refuses the 2-ear splice", "[nicify]") {
    // Splicing adjacent 2-ear interiors removes two even ears, which would
    // contradict a certified minimum; the step is only legal uncertified.
    auto d = make_dec({{0, 1, 2, 3, 0}, {1, 4, 2}, {0, 5, 3}, {4, 5}});
    graph g = graph_from_dec(6, d);
    nicify_options opt;
    opt.certified = true;
    REQUIRE_THROWS_AS(nicify(g, d, opt), internal_error);
}

TEST_CASE("niceness predicate distinguishes the three requirements", "[nicify]") {
    // Nice: short ears pendant and no short-short chord.
    auto good = make_dec({{0, 1, 2, 3, 0}, {1, 4, 5, 6, 3}, {0, 6}, {2, 4}, {2, 5}});
    graph g1 = graph_from_dec(7, good);
    REQUIRE(is_nice(g1, good));

    // Short-short chord (the N2bI input): not nice.
    auto chord = make_dec({{0, 1, 2, 3, 0}, {1, 4, 5, 2}, {2, 7, 6, 3}, {4, 6}, {4, 7},
                           {0, 5}});
    graph g2 = graph_from_dec(8, chord);
    REQUIRE_FALSE(is_nice(g2, chord));

    // Non-pendant short ear: not nice.
    auto nonpend = make_dec({{0, 1, 2, 3, 0}, {1, 4, 5, 2}, {5, 6, 1}, {3, 4}, {0, 6}});
    graph g3 = graph_from_dec(7, nonpend);
    REQUIRE_FALSE(is_nice(g3, nonpend));
}

TEST_CASE("non-pendant short input is rejected", "[nicify]") {
    auto d = make_dec({{0, 1, 2, 3, 0}, {1, 4, 5, 2}, {5, 6, 1}, {3, 4}, {0, 6}});
    graph g = graph_from_dec(7, d);
    REQUIRE_THROWS_AS(nicify(g, d, {}), precondition_violated);
}

TEST_CASE("nicify establishes niceness across the corpus", "[nicify][property]") {
    auto corpus = testsupport::named_corpus();
    auto cubic = testsupport::random_cubic_corpus({6, 8, 10, 12}, 1, 15);
    corpus.insert(corpus.end(), cubic.begin(), cubic.end());
    for (int t : {3, 4, 5})
        corpus.push_back({"liftC" + std::to_string(t), gen_gadget_lift(gen_cycle(t))});
    for (const auto& [name, g] : corpus) {
        INFO(name);
        auto em = minimize_even_ears(g, build_open_decomposition(g));
        pendantize_options popt;
        popt.certified = em.certified;
        auto mid = pendantize(g, em.d, popt);
        nicify_options nopt;
        nopt.certified = em.certified;
        auto out = nicify(g, mid, nopt);
        REQUIRE(validate(g, out).empty());
        REQUIRE(is_open_decomposition(out));
        REQUIRE(is_nice(g, out));
        if (em.certified) REQUIRE(out.count_even() == phi_bruteforce(g));
    }
}
