#include "regraph/analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "regraph/errors.hpp"
#include "regraph/incidence.hpp"
#include "regraph/linalg.hpp"

namespace regraph {

namespace {

struct IndependentSetScan {
    int n;
    const std::vector<std::uint32_t>& adj;  // closed under loops
    int best_value;
    std::uint32_t best_set;
    bool found;

    // include-first recursion visits candidate sets in lexicographic order of
    // their sorted member lists, so the first strict maximum is the
    // lexicographically smallest witness
    void scan(int next, std::uint32_t set, std::uint32_t neighborhood) {
        if (set != 0) {
            int value = __builtin_popcount(set) - __builtin_popcount(neighborhood);
            if (!found || value > best_value) {
                found = true;
                best_value = value;
                best_set = set;
            }
        }
        for (int v = next; v < n; ++v) {
            if (adj[v] & (set | (1u << v))) continue;  // edge into the set, or a loop
            scan(v + 1, set | (1u << v), neighborhood | adj[v]);
        }
    }
};

}  // namespace

VulnerabilityReport vulnerability(const Graph& g, int max_n) {
    if (g.directed())
        throw std::invalid_argument("vulnerability is defined for undirected graphs");
    const int n = g.node_count();
    constexpr int kBitmaskCap = 31;
    if (n > max_n || n > kBitmaskCap)
        throw TooLargeError(n, std::min(max_n, kBitmaskCap));

    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.tail] |= 1u << e.head;
        adj[e.head] |= 1u << e.tail;
    }

    IndependentSetScan scan{n, adj, 0, 0, false};
    scan.scan(0, 0, 0);
    if (!scan.found)
        throw std::domain_error("graph has no nonempty independent set");

    VulnerabilityReport report;
    report.value = scan.best_value;
    for (int v = 0; v < n; ++v)
        if (scan.best_set >> v & 1) report.witness.push_back(v);
    return report;
}

namespace {

struct PermutationScan {
    bool any = false;                 // some permutation fits the pattern
    std::vector<std::uint16_t> covered;  // covered[i] bit j: entry (i,j) on one

    static PermutationScan run(const std::vector<std::uint16_t>& rows) {
        const int n = static_cast<int>(rows.size());
        PermutationScan out;
        out.covered.assign(n, 0);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool fits = true;
            for (int i = 0; i < n && fits; ++i)
                fits = (rows[i] >> perm[i]) & 1;
            if (fits) {
                out.any = true;
                for (int i = 0; i < n; ++i) out.covered[i] |= 1u << perm[i];
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }
};

bool rank_route_arbitrary(const Graph& g) {
    if (g.edge_count() == 0) return false;
    const auto dense = build_incidence(g).dense();
    const int rows = static_cast<int>(dense.size());
    const int cols = g.edge_count();
    RationalMatrix b(rows, cols), be(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            b.at(i, j) = dense[i][j];
            be.at(i, j) = dense[i][j];
        }
        be.at(i, cols) = 1;
    }
    return matrix_rank(std::move(b)) == matrix_rank(std::move(be));
}

bool degrees_regular(const Graph& g) {
    if (g.edge_count() == 0) return false;
    auto same_positive = [](const std::vector<int>& d, int value) {
        for (int x : d)
            if (x != value) return false;
        return value > 0;
    };
    // loops count once on each side, matching the incidence row sums
    const auto out = g.out_degrees();
    return same_positive(out, out[0]) && same_positive(g.in_degrees(), out[0]);
}

}  // namespace

Category oracle_classify(const Graph& g) {
    const int cap = g.directed() ? 8 : 10;
    if (g.node_count() > cap) throw TooLargeError(g.node_count(), cap);
    const int n = g.node_count();

    std::vector<std::uint16_t> rows(n, 0);
    for (const Edge& e : g.edges()) {
        rows[e.tail] |= 1u << e.head;
        if (!g.directed()) rows[e.head] |= 1u << e.tail;
    }
    const auto perms = PermutationScan::run(rows);

    bool total = g.edge_count() > 0 && perms.any;
    for (int i = 0; i < n && total; ++i) {
        std::uint16_t uncovered = rows[i] & ~perms.covered[i];
        if (!g.directed()) {
            // an undirected edge counts as covered from either orientation
            for (int j = 0; j < n; ++j)
                if ((uncovered >> j & 1) && (perms.covered[j] >> i & 1))
                    uncovered &= ~(1u << j);
        }
        total = uncovered == 0;
    }

    if (degrees_regular(g)) return Category::Regular;
    if (total) return Category::PositivelyRegularizable;
    if (perms.any) return Category::NonnegativelyRegularizable;
    if (rank_route_arbitrary(g)) return Category::ArbitrarilyRegularizable;
    return Category::NotRegularizable;
}

}  // namespace regraph
