#include "regraph/classify.hpp"

#include <sstream>

#include "regraph/matching.hpp"
#include "regraph/synth.hpp"
#include "regraph/transform.hpp"

namespace regraph {

namespace {

std::string node_list(const std::vector<int>& nodes) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < nodes.size(); ++i)
        os << (i ? "," : "") << nodes[i] + 1;
    os << "}";
    return os.str();
}

}  // namespace

const char* category_name(Category c) {
    switch (c) {
        case Category::NotRegularizable: return "not_regularizable";
        case Category::ArbitrarilyRegularizable: return "arbitrarily_regularizable";
        case Category::NonnegativelyRegularizable: return "nonnegatively_regularizable";
        case Category::PositivelyRegularizable: return "positively_regularizable";
        case Category::Regular: return "regular";
    }
    return "?";
}

std::string Certificate::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::IsolatedNode:
            os << "isolated node " << node + 1;
            break;
        case Kind::SourceNode:
            os << "source node " << node + 1 << " (no incoming edges)";
            break;
        case Kind::SinkNode:
            os << "sink node " << node + 1 << " (no outgoing edges)";
            break;
        case Kind::UnbalancedComponent:
            os << "unbalanced bipartite component: |U|=" << u_side.size() << " "
               << node_list(u_side) << ", |W|=" << w_side.size() << " "
               << node_list(w_side);
            break;
        case Kind::UnbalancedEdgeClass:
            os << "unbalanced edge class of " << class_edges.size() << " edges: "
               << whites.size() << " white nodes " << node_list(whites) << ", "
               << blacks.size() << " black nodes " << node_list(blacks);
            break;
    }
    return os.str();
}

bool is_regular(const Graph& g) {
    if (g.edge_count() == 0) return false;
    WeightAssignment ones{std::vector<Rational>(g.edge_count(), Rational(1)),
                          Rational(1)};
    const auto s = strengths(g, ones);
    for (const Rational& v : s)
        if (v != s[0]) return false;
    return s[0] > 0;
}

ArbitraryCheck is_arbitrarily_regularizable(const Graph& g) {
    ArbitraryCheck out;
    if (g.directed()) {
        const auto out_deg = g.out_degrees();
        const auto in_deg = g.in_degrees();
        for (int v = 0; v < g.node_count(); ++v) {
            if (out_deg[v] == 0 && in_deg[v] == 0) {
                out.certificate = Certificate{Certificate::Kind::IsolatedNode, v};
                return out;
            }
            if (in_deg[v] == 0) {
                out.certificate = Certificate{Certificate::Kind::SourceNode, v};
                return out;
            }
            if (out_deg[v] == 0) {
                out.certificate = Certificate{Certificate::Kind::SinkNode, v};
                return out;
            }
        }
        for (const EdgeClass& cls : edge_classes(g).classes) {
            if (cls.whites.size() != cls.blacks.size()) {
                Certificate cert{Certificate::Kind::UnbalancedEdgeClass};
                cert.whites = cls.whites;
                cert.blacks = cls.blacks;
                cert.class_edges = cls.edges;
                out.certificate = std::move(cert);
                return out;
            }
        }
    } else {
        const auto deg = g.out_degrees();
        for (const ComponentBipartition& comp : bipartite_partition(g).components) {
            if (comp.nodes.size() == 1 && deg[comp.nodes[0]] == 0) {
                out.certificate =
                    Certificate{Certificate::Kind::IsolatedNode, comp.nodes[0]};
                return out;
            }
            if (comp.bipartite && !comp.balanced) {
                Certificate cert{Certificate::Kind::UnbalancedComponent};
                cert.u_side = comp.u_side;
                cert.w_side = comp.w_side;
                out.certificate = std::move(cert);
                return out;
            }
        }
    }
    out.ok = true;
    return out;
}

HierarchyVerdict classify_graph(const Graph& g) {
    HierarchyVerdict v;
    if (is_regular(g)) {
        v.category = Category::Regular;
        WeightAssignment ones{std::vector<Rational>(g.edge_count(), Rational(1)),
                              Rational(1)};
        ones.degree = strengths(g, ones)[0];
        v.witness = std::move(ones);
        return v;
    }
    if (has_total_support(g)) {
        v.category = Category::PositivelyRegularizable;
        v.witness = synth_positive(g);
        return v;
    }
    if (has_support(g)) {
        v.category = Category::NonnegativelyRegularizable;
        v.witness = synth_nonnegative(g);
        return v;
    }
    auto arb = is_arbitrarily_regularizable(g);
    if (arb.ok) {
        v.category = Category::ArbitrarilyRegularizable;
        v.witness = synth_arbitrary(g).first;
        return v;
    }
    v.category = Category::NotRegularizable;
    v.certificate = std::move(arb.certificate);
    return v;
}

}  // namespace regraph
