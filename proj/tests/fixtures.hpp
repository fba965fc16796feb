#ifndef REGRAPH_TESTS_FIXTURES_HPP
#define REGRAPH_TESTS_FIXTURES_HPP

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "regraph/graph.hpp"

namespace fixtures {

using regraph::Edge;
using regraph::Graph;

// The eight hierarchy-strictness fixtures, one per class and directedness.

/// K_{1,3}: bipartite, unbalanced (center vs three leaves).
inline Graph und_not_regularizable() {
    return Graph::from_one_based(false, 4, {{1, 2}, {1, 3}, {1, 4}});
}

/// Balanced double star: two degree-3 hubs joined by a bridge. Arbitrarily
/// but not nonnegatively regularizable (a tree has no spanning cycle forest).
inline Graph und_arbitrary_only() {
    return Graph::from_one_based(false, 6, {{1, 2}, {1, 3}, {1, 4}, {4, 5}, {4, 6}});
}

/// Two independent edges make the spanning forest; edges (1,3),(1,4) lie in
/// no spanning cycle forest.
inline Graph und_nonnegative_only() {
    return Graph::from_one_based(false, 4, {{1, 2}, {3, 4}, {1, 3}, {1, 4}});
}

/// Wheel: 4-cycle of outer edges plus a hub on four spokes. Every edge sits
/// in a triangle-plus-opposite-edge forest; degrees 3,3,3,3,4 are unequal.
inline Graph und_positive_only() {
    return Graph::from_one_based(
        false, 5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
}

/// Two unbalanced edge classes (whites {1,2,4} vs blacks {2,3}; white {3} vs
/// blacks {1,4}).
inline Graph dir_not_regularizable() {
    return Graph::from_one_based(true, 4,
                                 {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 2}, {4, 3}});
}

/// Chainable, single balanced edge class; the only cycles are the two loops,
/// which miss node 2, so no spanning cycle forest exists.
inline Graph dir_arbitrary_only() {
    return Graph::from_one_based(true, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}});
}

/// Loop + 3-cycle form the unique spanning cycle forest; the 2-cycle edges
/// (1,2),(2,1) belong to none.
inline Graph dir_nonnegative_only() {
    return Graph::from_one_based(true, 4,
                                 {{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 4}, {4, 2}});
}

/// Loop + 3-cycle and the two 2-cycles are two spanning cycle forests that
/// cover all edges; out-degrees 2,2,1,2 are unequal.
inline Graph dir_positive_only() {
    return Graph::from_one_based(
        true, 4, {{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 4}, {4, 3}, {4, 2}});
}

inline std::vector<Graph> hierarchy_fixtures() {
    return {und_not_regularizable(), und_arbitrary_only(), und_nonnegative_only(),
            und_positive_only(),     dir_not_regularizable(), dir_arbitrary_only(),
            dir_nonnegative_only(),  dir_positive_only()};
}

// Recurring small graphs.

inline Graph triangle() {
    return Graph::from_one_based(false, 3, {{1, 2}, {2, 3}, {3, 1}});
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_one_based(false, n, e);
}

inline Graph cycle(int n, bool directed) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i) e.emplace_back(i, i % n + 1);
    return Graph::from_one_based(directed, n, e);
}

/// 4-cycle with a pendant edge hanging off node 1; cyclic, bipartite,
/// unbalanced (3 vs 2): the classic null-strength example.
inline Graph chair() {
    return Graph::from_one_based(false, 5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 1}});
}

/// Two hub nodes (1 and n) adjacent to everything, inner nodes adjacent only
/// to the hubs. Chainable, with vulnerability n-4.
inline Graph two_hub(int n) {
    std::vector<std::pair<int, int>> e;
    for (int j = 2; j <= n; ++j) e.emplace_back(1, j);
    for (int i = 2; i < n; ++i) e.emplace_back(i, n);
    return Graph::from_one_based(false, n, e);
}

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
    return Graph::from_one_based(false, n, e);
}

/// Graph of a 0/1 matrix; entry (i,j) != 0 becomes edge i -> j.
inline Graph from_matrix(const std::vector<std::vector<int>>& a) {
    std::vector<Edge> e;
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
        for (int j = 0; j < static_cast<int>(a[i].size()); ++j)
            if (a[i][j]) e.push_back(Edge{i, j});
    return Graph(true, static_cast<int>(a.size()), std::move(e));
}

inline std::vector<std::vector<int>> to_matrix(const Graph& g) {
    std::vector<std::vector<int>> a(g.node_count(),
                                    std::vector<int>(g.node_count(), 0));
    for (const Edge& e : g.edges()) {
        a[e.tail][e.head] = 1;
        if (!g.directed()) a[e.head][e.tail] = 1;
    }
    return a;
}

// Seeded generators for property sweeps.

inline Graph random_graph(std::mt19937& rng, int n, bool directed, int percent,
                          bool allow_loops) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = directed ? 0 : i; j < n; ++j) {
            if (i == j && !allow_loops) continue;
            if (static_cast<int>(rng() % 100) < percent) e.push_back(Edge{i, j});
        }
    return Graph(directed, n, std::move(e));
}

/// Random directed graph guaranteed to have no zero rows or columns: a
/// random permutation plus extra random edges.
inline Graph random_no_zero_lines(std::mt19937& rng, int n, int extra_percent) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> e;
    std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
        e.push_back(Edge{i, perm[i]});
        used[i][perm[i]] = 1;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!used[i][j] && static_cast<int>(rng() % 100) < extra_percent)
                e.push_back(Edge{i, j});
    return Graph(true, n, std::move(e));
}

/// Random directed graph with zero rows/columns repaired by extra edges, so
/// unbalanced star components stay likely (unlike the permutation-based
/// generator, which always has support).
inline Graph random_repaired(std::mt19937& rng, int n, int percent) {
    std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (static_cast<int>(rng() % 100) < percent) a[i][j] = 1;
    for (int i = 0; i < n; ++i) {
        bool row = false;
        for (int j = 0; j < n; ++j) row = row || a[i][j];
        if (!row) a[i][rng() % n] = 1;
    }
    for (int j = 0; j < n; ++j) {
        bool col = false;
        for (int i = 0; i < n; ++i) col = col || a[i][j];
        if (!col) a[rng() % n][j] = 1;
    }
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i][j]) e.push_back(Edge{i, j});
    return Graph(true, n, std::move(e));
}

}  // namespace fixtures

#endif
