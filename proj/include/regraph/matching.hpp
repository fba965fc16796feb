#ifndef REGRAPH_MATCHING_HPP
#define REGRAPH_MATCHING_HPP

#include <optional>
#include <vector>

#include "regraph/graph.hpp"
#include "regraph/transform.hpp"

namespace regraph {

/// A matching in a star graph, held as star-edge indices (ascending). No two
/// member edges share an endpoint; perfect means all 2n star nodes covered.
struct Matching {
    std::vector<int> star_edges;

    int size() const { return static_cast<int>(star_edges.size()); }
};

/// Maximum-cardinality matching via Hopcroft-Karp. Deterministic under the
/// fixed adjacency order: neighbor lists sorted, BFS/DFS smallest index
/// first.
Matching max_matching(const StarGraph& sg);

bool is_perfect(const StarGraph& sg, const Matching& m);

/// True iff the star counterpart has a perfect matching (the adjacency
/// pattern has support; the graph contains a spanning cycle forest).
bool has_support(const Graph& g);

/// True iff the graph has at least one edge and every star edge lies in some
/// perfect matching (total support). Per-edge checks reuse the global
/// matching as a warm start: force the pair, then repair with one augmenting
/// search.
bool has_total_support(const Graph& g);

/// Edge set of a spanning cycle forest on the base graph. Directed: every
/// covered node has in- and out-degree exactly 1 (components are cycles of
/// length >= 1). Undirected: components are single edges or cycles.
struct CycleForest {
    std::vector<int> edges;  // canonical edge indices, ascending
};

/// Folds a perfect matching back to base edges; twin star edges of one
/// undirected edge collapse to a single index (the doubled-edge case).
/// Throws NotPerfectError when the matching is not perfect.
CycleForest matching_to_cycle_forest(const StarGraph& sg, const Matching& m);

namespace detail {

/// White-indexed bipartite matching state shared by the per-edge machinery.
struct BipartiteMatching {
    std::vector<int> match_white;  // white -> black or -1
    std::vector<int> match_black;  // black -> white or -1
    int size = 0;
};

BipartiteMatching hopcroft_karp(const StarGraph& sg);

/// Perfect matching containing the given star edge, repaired from a perfect
/// baseline matching with one augmenting search; nullopt if none exists.
std::optional<BipartiteMatching> perfect_matching_through(
    const StarGraph& sg, int star_edge, const BipartiteMatching& baseline);

/// Decides whether star edge e belongs to some perfect matching, given a
/// perfect baseline matching.
bool edge_in_some_perfect_matching(const StarGraph& sg, int star_edge,
                                   const BipartiteMatching& baseline);

}  // namespace detail

}  // namespace regraph

#endif
