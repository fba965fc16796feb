#ifndef REGRAPH_CLASSIFY_HPP
#define REGRAPH_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "regraph/graph.hpp"
#include "regraph/incidence.hpp"

namespace regraph {

/// The regularization hierarchy, ordered so that `a >= b` means "a is at
/// least as specific as b". Each class is strictly contained in the next
/// weaker one.
enum class Category {
    NotRegularizable = 0,
    ArbitrarilyRegularizable = 1,
    NonnegativelyRegularizable = 2,
    PositivelyRegularizable = 3,
    Regular = 4,
};

const char* category_name(Category c);

/// Machine-checkable impossibility evidence for graphs that are not
/// arbitrarily regularizable.
struct Certificate {
    enum class Kind {
        IsolatedNode,       // zero row and column
        SourceNode,         // directed, no incoming edges (zero column)
        SinkNode,           // directed, no outgoing edges (zero row)
        UnbalancedComponent,  // undirected bipartite component, |U| != |W|
        UnbalancedEdgeClass,  // directed edge class, #whites != #blacks
    };

    Kind kind;
    int node = -1;                // 0-based, for the node kinds
    std::vector<int> u_side, w_side;     // UnbalancedComponent
    std::vector<int> whites, blacks;     // UnbalancedEdgeClass (node indices)
    std::vector<int> class_edges;        // UnbalancedEdgeClass (edge indices)

    std::string describe() const;  // 1-based, deterministic rendering
};

struct HierarchyVerdict {
    Category category = Category::NotRegularizable;
    std::optional<WeightAssignment> witness;
    std::optional<Certificate> certificate;
};

/// True iff w = e already solves the system with r > 0: all strengths equal
/// and positive (directed: out- and in-strengths all equal the same value).
bool is_regular(const Graph& g);

struct ArbitraryCheck {
    bool ok = false;
    std::optional<Certificate> certificate;  // set when ok is false
};

/// Structural O(n+m) test. Undirected: every component non-bipartite or
/// balanced bipartite, no isolated nodes. Directed: no source or sink nodes
/// and every edge class balanced.
ArbitraryCheck is_arbitrarily_regularizable(const Graph& g);

/// Most specific category, with a synthesized witness for regularizable
/// graphs or a certificate otherwise. Tests Regular, then Positively, then
/// Nonnegatively, then Arbitrarily.
HierarchyVerdict classify_graph(const Graph& g);

}  // namespace regraph

#endif
