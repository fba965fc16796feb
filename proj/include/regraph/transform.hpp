#ifndef REGRAPH_TRANSFORM_HPP
#define REGRAPH_TRANSFORM_HPP

#include <utility>
#include <vector>

#include "regraph/graph.hpp"

namespace regraph {

/// Bipartite undirected counterpart of a graph: every base node x splits into
/// a white copy x1 (out side) and a black copy x2 (in side); the directed edge
/// (x,y) becomes the star edge {x1, y2}.
///
/// An undirected base graph is routed through its symmetric bidirected
/// version: edge {i,j} yields the twin star edges {i1,j2} and {j1,i2}, except
/// a loop {i,i} which yields only {i1,i2}. Twins are recorded so that
/// matchings can be folded back onto the source edges.
///
/// Star node ids: white i is node i, black j is node n + j. This matches the
/// row indexing of the directed incidence system.
struct StarGraph {
    struct StarEdge {
        int white;        // 0..n-1
        int black;        // 0..n-1
        int source_edge;  // canonical index into the base graph
    };

    int base_nodes = 0;
    bool base_directed = true;
    std::vector<StarEdge> edges;
    std::vector<int> twin;  // twin star-edge index, or -1

    int node_count() const { return 2 * base_nodes; }
    int white_id(int i) const { return i; }
    int black_id(int j) const { return base_nodes + j; }

    /// Sorted adjacency per star node (neighbor star-node id, star edge).
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;
};

StarGraph star_transform(const Graph& g);

/// Component id per star node (ids assigned in order of smallest member) and
/// the number of components. Isolated star nodes count as components.
struct StarComponents {
    std::vector<int> id;
    int count = 0;
};
StarComponents star_components(const StarGraph& sg);

/// Maximal connected node sets of an undirected graph, each sorted,
/// ordered by smallest member. Isolated nodes are singletons.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Two-coloring (or odd-cycle witness) per connected component.
struct ComponentBipartition {
    std::vector<int> nodes;  // ascending
    bool bipartite = false;
    std::vector<int> u_side;     // color of the smallest node in the component
    std::vector<int> w_side;
    bool balanced = false;       // |U| == |W|
    std::vector<int> odd_cycle;  // closed walk, first == last, odd length
};
struct BipartitePartition {
    std::vector<ComponentBipartition> components;
};

/// Deterministic: BFS from the smallest node index, smallest neighbor first.
BipartitePartition bipartite_partition(const Graph& g);

/// Equivalence classes of the alternating-path relation on edges, computed as
/// the edge sets of the connected components of the star counterpart.
struct EdgeClass {
    std::vector<int> edges;   // canonical edge indices, ascending
    std::vector<int> whites;  // nodes with positive outdegree within the class
    std::vector<int> blacks;  // nodes with positive indegree within the class
};
struct EdgeClassPartition {
    std::vector<EdgeClass> classes;  // ordered by smallest member edge
};
EdgeClassPartition edge_classes(const Graph& g);  // directed input only

/// True iff the adjacency pattern has no zero rows or columns and all its
/// nonzero entries are connected by rook moves; equivalently, the star
/// counterpart is a single connected component.
bool is_chainable(const Graph& g);

/// Row and column permutations putting the adjacency matrix into block
/// diagonal form with chainable blocks. row_perm[a] is the original (0-based)
/// row placed at position a; likewise col_perm. blocks lists (rows, cols) per
/// diagonal block in order. The graph is arbitrarily regularizable iff every
/// block is square.
struct CanonicalForm {
    std::vector<int> row_perm;
    std::vector<int> col_perm;
    std::vector<std::pair<int, int>> blocks;
};

/// Throws ZeroRowOrColumnError (naming the node) if some node has no
/// outgoing or no incoming edges.
CanonicalForm canonical_form(const Graph& g);

}  // namespace regraph

#endif
