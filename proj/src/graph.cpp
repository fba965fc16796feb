#include "regraph/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace regraph {

namespace {

std::uint64_t pair_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

}  // namespace

Graph::Graph(bool directed, int node_count, std::vector<Edge> edges)
    : directed_(directed), n_(node_count), edges_(std::move(edges)) {
    if (n_ <= 0) throw std::invalid_argument("node count must be positive");
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges_.size() * 2);
    for (std::size_t l = 0; l < edges_.size(); ++l) {
        const Edge& e = edges_[l];
        if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_)
            throw std::invalid_argument("edge " + std::to_string(l + 1) +
                                        " endpoint out of range");
        int a = e.tail, b = e.head;
        if (!directed_ && a > b) std::swap(a, b);
        if (!seen.insert(pair_key(a, b)).second)
            throw std::invalid_argument("duplicate edge at position " +
                                        std::to_string(l + 1));
    }
}

Graph Graph::from_one_based(bool directed, int node_count,
                            const std::vector<std::pair<int, int>>& edges) {
    std::vector<Edge> zero;
    zero.reserve(edges.size());
    for (const auto& [u, v] : edges) zero.push_back(Edge{u - 1, v - 1});
    return Graph(directed, node_count, std::move(zero));
}

std::vector<int> Graph::out_degrees() const {
    std::vector<int> d(n_, 0);
    for (const Edge& e : edges_) ++d[e.tail];
    if (!directed_)
        for (const Edge& e : edges_)
            if (e.head != e.tail) ++d[e.head];
    return d;
}

std::vector<int> Graph::in_degrees() const {
    if (!directed_) return out_degrees();
    std::vector<int> d(n_, 0);
    for (const Edge& e : edges_) ++d[e.head];
    return d;
}

std::vector<std::vector<int>> Graph::undirected_adjacency() const {
    std::vector<std::vector<int>> adj(n_);
    for (const Edge& e : edges_) {
        adj[e.tail].push_back(e.head);
        if (e.head != e.tail) adj[e.head].push_back(e.tail);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

Graph reversed(const Graph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.push_back(Edge{e.head, e.tail});
    return Graph(g.directed(), g.node_count(), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.directed() != b.directed())
        throw std::invalid_argument("disjoint_union: mixed directedness");
    std::vector<Edge> edges = a.edges();
    const int shift = a.node_count();
    for (const Edge& e : b.edges())
        edges.push_back(Edge{e.tail + shift, e.head + shift});
    return Graph(a.directed(), a.node_count() + b.node_count(), std::move(edges));
}

}  // namespace regraph
