#include "regraph/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "regraph/errors.hpp"

namespace regraph {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

/// adj[white] = sorted (black, star edge) pairs.
std::vector<std::vector<std::pair<int, int>>> white_adjacency(const StarGraph& sg) {
    std::vector<std::vector<std::pair<int, int>>> adj(sg.base_nodes);
    for (int e = 0; e < static_cast<int>(sg.edges.size()); ++e)
        adj[sg.edges[e].white].emplace_back(sg.edges[e].black, e);
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

struct HopcroftKarp {
    const std::vector<std::vector<std::pair<int, int>>>& adj;
    int n;
    std::vector<int> match_white, match_black, dist;
    int cutoff = kInf;  // length of the shortest augmenting path this phase

    explicit HopcroftKarp(const std::vector<std::vector<std::pair<int, int>>>& a)
        : adj(a), n(static_cast<int>(a.size())),
          match_white(n, -1), match_black(n, -1), dist(n, kInf) {}

    bool bfs() {
        std::queue<int> q;
        cutoff = kInf;
        for (int w = 0; w < n; ++w) {
            if (match_white[w] < 0) {
                dist[w] = 0;
                q.push(w);
            } else {
                dist[w] = kInf;
            }
        }
        while (!q.empty()) {
            int w = q.front();
            q.pop();
            if (dist[w] >= cutoff) continue;
            for (auto [b, e] : adj[w]) {
                int w2 = match_black[b];
                if (w2 < 0) {
                    cutoff = std::min(cutoff, dist[w] + 1);
                } else if (dist[w2] == kInf) {
                    dist[w2] = dist[w] + 1;
                    q.push(w2);
                }
            }
        }
        return cutoff != kInf;
    }

    // Iterative layered DFS; augmenting paths can be Theta(n) long, which
    // would be too deep for recursion on 1e5-node graphs.
    bool dfs(int start) {
        struct Frame {
            int w;
            std::size_t next;
        };
        std::vector<Frame> stack{{start, 0}};
        std::vector<int> path_blacks;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next == adj[f.w].size()) {
                dist[f.w] = kInf;  // dead end: never revisit this phase
                stack.pop_back();
                if (!path_blacks.empty()) path_blacks.pop_back();
                continue;
            }
            auto [b, e] = adj[f.w][f.next++];
            int w2 = match_black[b];
            if (w2 < 0) {
                if (dist[f.w] + 1 != cutoff) continue;  // only shortest paths
                path_blacks.push_back(b);
                for (std::size_t i = 0; i < stack.size(); ++i) {
                    match_white[stack[i].w] = path_blacks[i];
                    match_black[path_blacks[i]] = stack[i].w;
                }
                return true;
            }
            if (dist[w2] == dist[f.w] + 1) {
                path_blacks.push_back(b);
                stack.push_back({w2, 0});
            }
        }
        return false;
    }

    detail::BipartiteMatching run() {
        detail::BipartiteMatching m;
        int size = 0;
        while (bfs())
            for (int w = 0; w < n; ++w)
                if (match_white[w] < 0 && dfs(w)) ++size;
        m.match_white = match_white;
        m.match_black = match_black;
        m.size = size;
        return m;
    }
};

/// One augmenting search from `start`. Skipping `banned_b` keeps the forced
/// pair intact: its white endpoint is only reachable through that black.
bool kuhn_augment(const std::vector<std::vector<std::pair<int, int>>>& adj,
                  std::vector<int>& match_white, std::vector<int>& match_black,
                  int start, int banned_b, std::vector<char>& visited) {
    for (auto [b, e] : adj[start]) {
        if (b == banned_b || visited[b]) continue;
        visited[b] = 1;
        if (match_black[b] < 0 ||
            kuhn_augment(adj, match_white, match_black, match_black[b], banned_b,
                         visited)) {
            match_black[b] = start;
            match_white[start] = b;
            return true;
        }
    }
    return false;
}

int star_edge_between(const StarGraph& sg,
                      const std::vector<std::vector<std::pair<int, int>>>& adj,
                      int w, int b) {
    for (auto [bb, e] : adj[w])
        if (bb == b) return e;
    return -1;
}

std::optional<detail::BipartiteMatching> repair_through(
    const StarGraph& sg, const std::vector<std::vector<std::pair<int, int>>>& adj,
    int star_edge, const detail::BipartiteMatching& baseline) {
    const int w = sg.edges[star_edge].white;
    const int b = sg.edges[star_edge].black;
    if (baseline.match_white[w] == b) return baseline;

    detail::BipartiteMatching m = baseline;
    const int w_exposed = m.match_black[b];  // loses its black to the forced pair
    const int b_exposed = m.match_white[w];
    m.match_white[w] = b;
    m.match_black[b] = w;
    m.match_white[w_exposed] = -1;
    m.match_black[b_exposed] = -1;
    std::vector<char> visited(sg.base_nodes, 0);
    if (!kuhn_augment(adj, m.match_white, m.match_black, w_exposed, b, visited))
        return std::nullopt;
    return m;
}

}  // namespace

namespace detail {

BipartiteMatching hopcroft_karp(const StarGraph& sg) {
    auto adj = white_adjacency(sg);
    return HopcroftKarp(adj).run();
}

std::optional<BipartiteMatching> perfect_matching_through(
    const StarGraph& sg, int star_edge, const BipartiteMatching& baseline) {
    return repair_through(sg, white_adjacency(sg), star_edge, baseline);
}

bool edge_in_some_perfect_matching(const StarGraph& sg, int star_edge,
                                   const BipartiteMatching& baseline) {
    return perfect_matching_through(sg, star_edge, baseline).has_value();
}

}  // namespace detail

Matching max_matching(const StarGraph& sg) {
    auto adj = white_adjacency(sg);
    auto m = HopcroftKarp(adj).run();
    Matching out;
    for (int w = 0; w < sg.base_nodes; ++w)
        if (m.match_white[w] >= 0) {
            int e = star_edge_between(sg, adj, w, m.match_white[w]);
            out.star_edges.push_back(e);
        }
    std::sort(out.star_edges.begin(), out.star_edges.end());
    return out;
}

bool is_perfect(const StarGraph& sg, const Matching& m) {
    return m.size() == sg.base_nodes;
}

bool has_support(const Graph& g) {
    const StarGraph sg = star_transform(g);
    return detail::hopcroft_karp(sg).size == sg.base_nodes;
}

bool has_total_support(const Graph& g) {
    if (g.edge_count() == 0) return false;
    const StarGraph sg = star_transform(g);
    const auto adj = white_adjacency(sg);
    const auto baseline = HopcroftKarp(adj).run();
    if (baseline.size != sg.base_nodes) return false;
    for (int e = 0; e < static_cast<int>(sg.edges.size()); ++e)
        if (!repair_through(sg, adj, e, baseline)) return false;
    return true;
}

CycleForest matching_to_cycle_forest(const StarGraph& sg, const Matching& m) {
    if (!is_perfect(sg, m)) throw NotPerfectError();
    CycleForest forest;
    for (int e : m.star_edges) forest.edges.push_back(sg.edges[e].source_edge);
    std::sort(forest.edges.begin(), forest.edges.end());
    forest.edges.erase(std::unique(forest.edges.begin(), forest.edges.end()),
                       forest.edges.end());
    return forest;
}

}  // namespace regraph
