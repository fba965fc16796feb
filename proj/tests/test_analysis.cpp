#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "regraph/analysis.hpp"
#include "regraph/errors.hpp"
#include "regraph/matching.hpp"
#include "regraph/transform.hpp"

using namespace regraph;

TEST_CASE("vulnerability of the star is 2") {
    const VulnerabilityReport r = vulnerability(fixtures::und_not_regularizable());
    CHECK(r.value == 2);
    CHECK(r.witness == std::vector<int>{1, 2, 3});  // the three leaves
}

TEST_CASE("vulnerability of the two-hub family at n = 6") {
    const VulnerabilityReport r = vulnerability(fixtures::two_hub(6));
    CHECK(r.value == 2);
    CHECK(r.witness == std::vector<int>{1, 2, 3, 4});  // inner nodes
}

TEST_CASE("vulnerability of the complete graph is 1 - (n-1)") {
    const VulnerabilityReport r = vulnerability(fixtures::complete(4));
    CHECK(r.value == -2);
    CHECK(r.witness == std::vector<int>{0});  // lexicographically smallest singleton
}

TEST_CASE("vulnerability respects the size cap") {
    CHECK_THROWS_AS(vulnerability(fixtures::complete(5), 4), TooLargeError);
    CHECK_THROWS_AS(vulnerability(fixtures::cycle(3, true)), std::invalid_argument);
}

TEST_CASE("all-loops graphs have no independent set") {
    const Graph g = Graph::from_one_based(false, 2, {{1, 1}, {2, 2}, {1, 2}});
    CHECK_THROWS_AS(vulnerability(g), std::domain_error);
}

TEST_CASE("witness sets are independent and attain the value") {
    std::mt19937 rng(121);
    int done = 0;
    while (done < 100) {
        const Graph g = fixtures::random_graph(
            rng, 1 + static_cast<int>(rng() % 7), false, 20 + rng() % 60, true);
        VulnerabilityReport r;
        try {
            r = vulnerability(g);
        } catch (const std::domain_error&) {
            continue;
        }
        ++done;
        REQUIRE_FALSE(r.witness.empty());
        const auto a = fixtures::to_matrix(g);
        std::vector<char> in_s(g.node_count(), 0);
        for (int v : r.witness) in_s[v] = 1;
        std::vector<char> nbr(g.node_count(), 0);
        for (int u : r.witness)
            for (int v = 0; v < g.node_count(); ++v) {
                CHECK_FALSE((a[u][v] && in_s[v]));  // independence, loops included
                if (a[u][v]) nbr[v] = 1;
            }
        int nbr_count = 0;
        for (int v = 0; v < g.node_count(); ++v) nbr_count += nbr[v];
        CHECK(r.value == static_cast<int>(r.witness.size()) - nbr_count);
    }
}

TEST_CASE("vulnerability sign characterizes support (loops included)") {
    std::mt19937 rng(122);
    for (int iter = 0; iter < 400; ++iter) {
        const Graph g = fixtures::random_graph(
            rng, 1 + static_cast<int>(rng() % 6), false, 15 + rng() % 70, true);
        bool nonpositive;
        try {
            nonpositive = vulnerability(g).value <= 0;
        } catch (const std::domain_error&) {
            nonpositive = true;  // no independent set at all
        }
        CHECK(nonpositive == has_support(g));
    }
}

TEST_CASE("oracle verdicts for the eight hierarchy fixtures") {
    const Category expected[8] = {
        Category::NotRegularizable,          Category::ArbitrarilyRegularizable,
        Category::NonnegativelyRegularizable, Category::PositivelyRegularizable,
        Category::NotRegularizable,          Category::ArbitrarilyRegularizable,
        Category::NonnegativelyRegularizable, Category::PositivelyRegularizable,
    };
    const auto graphs = fixtures::hierarchy_fixtures();
    for (int i = 0; i < 8; ++i) CHECK(oracle_classify(graphs[i]) == expected[i]);
}

TEST_CASE("oracle on trivial and too-large graphs") {
    CHECK(oracle_classify(Graph(false, 4, {})) == Category::NotRegularizable);
    CHECK_THROWS_AS(oracle_classify(Graph(true, 9, {})), TooLargeError);
    CHECK_THROWS_AS(oracle_classify(Graph(false, 11, {})), TooLargeError);
}

TEST_CASE("exhaustive sweep: all loopless undirected graphs on 4 nodes") {
    // 64 labeled graphs; oracle and structural classifier must agree
    const std::pair<int, int> pairs[6] = {{1, 2}, {1, 3}, {1, 4},
                                          {2, 3}, {2, 4}, {3, 4}};
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int k = 0; k < 6; ++k)
            if (mask >> k & 1) edges.push_back(pairs[k]);
        const Graph g = Graph::from_one_based(false, 4, edges);
        CHECK(oracle_classify(g) == classify_graph(g).category);
    }
}

TEST_CASE("two-hub family is chainable with vulnerability n - 4") {
    for (int n = 5; n <= 9; ++n) {
        const Graph g = fixtures::two_hub(n);
        CHECK(vulnerability(g).value == n - 4);
        CHECK(is_chainable(g));
    }
}
