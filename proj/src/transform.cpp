#include "regraph/transform.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "regraph/errors.hpp"

namespace regraph {

std::vector<std::vector<std::pair<int, int>>> StarGraph::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(node_count());
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        int w = white_id(edges[e].white);
        int b = black_id(edges[e].black);
        adj[w].emplace_back(b, e);
        adj[b].emplace_back(w, e);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

StarGraph star_transform(const Graph& g) {
    StarGraph sg;
    sg.base_nodes = g.node_count();
    sg.base_directed = g.directed();
    for (int l = 0; l < g.edge_count(); ++l) {
        const Edge& e = g.edge(l);
        sg.edges.push_back({e.tail, e.head, l});
        sg.twin.push_back(-1);
        if (!g.directed() && e.tail != e.head) {
            int primary = static_cast<int>(sg.edges.size()) - 1;
            sg.edges.push_back({e.head, e.tail, l});
            sg.twin.push_back(primary);
            sg.twin[primary] = static_cast<int>(sg.edges.size()) - 1;
        }
    }
    return sg;
}

StarComponents star_components(const StarGraph& sg) {
    const auto adj = sg.adjacency();
    StarComponents c;
    c.id.assign(sg.node_count(), -1);
    for (int s = 0; s < sg.node_count(); ++s) {
        if (c.id[s] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        c.id[s] = c.count;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [v, e] : adj[u])
                if (c.id[v] < 0) {
                    c.id[v] = c.count;
                    q.push(v);
                }
        }
        ++c.count;
    }
    return c;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    if (g.directed())
        throw std::invalid_argument("connected_components expects an undirected graph");
    const auto adj = g.undirected_adjacency();
    std::vector<int> comp(g.node_count(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.node_count(); ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        out[id].push_back(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (comp[v] < 0) {
                    comp[v] = id;
                    q.push(v);
                    out[id].push_back(v);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

BipartitePartition bipartite_partition(const Graph& g) {
    if (g.directed())
        throw std::invalid_argument("bipartite_partition expects an undirected graph");
    const int n = g.node_count();
    const auto adj = g.undirected_adjacency();
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    BipartitePartition part;

    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        ComponentBipartition comp;
        std::queue<int> q;
        q.push(s);
        color[s] = 0;
        std::vector<int> order{s};
        std::pair<int, int> conflict{-1, -1};
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    order.push_back(v);
                    q.push(v);
                } else if (color[v] == color[u] && conflict.first < 0) {
                    conflict = {u, v};
                }
            }
        }
        comp.bipartite = conflict.first < 0;
        comp.nodes = order;
        std::sort(comp.nodes.begin(), comp.nodes.end());
        if (comp.bipartite) {
            for (int v : comp.nodes)
                (color[v] == color[s] ? comp.u_side : comp.w_side).push_back(v);
            comp.balanced = comp.u_side.size() == comp.w_side.size();
        } else {
            // odd closed walk through the conflicting edge: climb both
            // endpoints to their lowest common ancestor in the BFS tree
            auto [u, v] = conflict;
            std::vector<int> up_u{u}, up_v{v};
            int a = u, b = v;
            while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
            while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
            while (a != b) {
                up_u.push_back(a = parent[a]);
                up_v.push_back(b = parent[b]);
            }
            comp.odd_cycle.assign(up_u.begin(), up_u.end());
            for (auto it = up_v.rbegin(); it != up_v.rend(); ++it)
                if (*it != a || comp.odd_cycle.back() != a) comp.odd_cycle.push_back(*it);
            comp.odd_cycle.push_back(u);
            if (u == v) comp.odd_cycle = {u, u};  // self-loop
        }
        part.components.push_back(std::move(comp));
    }
    return part;
}

EdgeClassPartition edge_classes(const Graph& g) {
    if (!g.directed())
        throw std::invalid_argument("edge_classes expects a directed graph");
    const StarGraph sg = star_transform(g);
    const StarComponents sc = star_components(sg);

    std::map<int, std::vector<int>> by_component;  // keyed by component id
    for (int e = 0; e < static_cast<int>(sg.edges.size()); ++e)
        by_component[sc.id[sg.white_id(sg.edges[e].white)]].push_back(
            sg.edges[e].source_edge);

    EdgeClassPartition part;
    for (auto& [comp, edges] : by_component) {
        EdgeClass cls;
        cls.edges = std::move(edges);
        std::sort(cls.edges.begin(), cls.edges.end());
        std::vector<bool> white(g.node_count(), false), black(g.node_count(), false);
        for (int l : cls.edges) {
            white[g.edge(l).tail] = true;
            black[g.edge(l).head] = true;
        }
        for (int v = 0; v < g.node_count(); ++v) {
            if (white[v]) cls.whites.push_back(v);
            if (black[v]) cls.blacks.push_back(v);
        }
        part.classes.push_back(std::move(cls));
    }
    std::sort(part.classes.begin(), part.classes.end(),
              [](const EdgeClass& a, const EdgeClass& b) {
                  return a.edges.front() < b.edges.front();
              });
    return part;
}

bool is_chainable(const Graph& g) {
    return star_components(star_transform(g)).count == 1;
}

CanonicalForm canonical_form(const Graph& g) {
    const auto out_deg = g.out_degrees();
    const auto in_deg = g.in_degrees();
    for (int v = 0; v < g.node_count(); ++v) {
        if (out_deg[v] == 0) throw ZeroRowOrColumnError(v + 1, /*row=*/true);
        if (in_deg[v] == 0) throw ZeroRowOrColumnError(v + 1, /*row=*/false);
    }

    const StarGraph sg = star_transform(g);
    const StarComponents sc = star_components(sg);
    const int n = g.node_count();

    std::vector<std::vector<int>> rows_of(sc.count), cols_of(sc.count);
    for (int i = 0; i < n; ++i) rows_of[sc.id[sg.white_id(i)]].push_back(i);
    for (int j = 0; j < n; ++j) cols_of[sc.id[sg.black_id(j)]].push_back(j);

    std::vector<int> order;
    for (int c = 0; c < sc.count; ++c) order.push_back(c);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return rows_of[a].front() < rows_of[b].front();
    });

    CanonicalForm form;
    for (int c : order) {
        form.blocks.emplace_back(static_cast<int>(rows_of[c].size()),
                                 static_cast<int>(cols_of[c].size()));
        form.row_perm.insert(form.row_perm.end(), rows_of[c].begin(), rows_of[c].end());
        form.col_perm.insert(form.col_perm.end(), cols_of[c].begin(), cols_of[c].end());
    }
    return form;
}

}  // namespace regraph
