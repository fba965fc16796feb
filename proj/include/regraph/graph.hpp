#ifndef REGRAPH_GRAPH_HPP
#define REGRAPH_GRAPH_HPP

#include <utility>
#include <vector>

namespace regraph {

/// One edge of the canonical enumeration; node indices are 0-based in memory.
struct Edge {
    int tail;
    int head;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable graph: adjacency-matrix semantics (self-loops allowed,
/// multi-edges rejected). The edge order given at construction is the
/// canonical enumeration 1..m used by incidence columns, weight vectors and
/// every report.
///
/// Convention for undirected self-loops: a loop contributes once to the node
/// strength (row sum of the adjacency matrix), not twice.
class Graph {
public:
    /// `edges` carries 0-based endpoints. Throws std::invalid_argument on an
    /// out-of-range endpoint or a duplicate (directed: ordered pair;
    /// undirected: unordered pair).
    Graph(bool directed, int node_count, std::vector<Edge> edges);

    /// Builder matching external 1-based notation, e.g. {{1,2},{2,3},{3,1}}.
    static Graph from_one_based(bool directed, int node_count,
                                const std::vector<std::pair<int, int>>& edges);

    bool directed() const { return directed_; }
    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int l) const { return edges_[l]; }

    /// Loops count once in both vectors.
    std::vector<int> out_degrees() const;
    std::vector<int> in_degrees() const;

    /// Sorted 0-based neighbor lists ignoring direction (loops included once).
    std::vector<std::vector<int>> undirected_adjacency() const;

private:
    bool directed_;
    int n_;
    std::vector<Edge> edges_;
};

/// Same nodes, every edge (i,j) replaced by (j,i). Identity on undirected
/// graphs.
Graph reversed(const Graph& g);

/// Disjoint union; the nodes of `b` are shifted past those of `a`. Both
/// graphs must share directedness.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace regraph

#endif
