#ifndef REGRAPH_ANALYSIS_HPP
#define REGRAPH_ANALYSIS_HPP

#include <vector>

#include "regraph/classify.hpp"
#include "regraph/graph.hpp"

namespace regraph {

/// max over nonempty independent sets S of |S| - |N(S)|, with the witness
/// attaining it. A node carrying a self-loop is never independent.
struct VulnerabilityReport {
    int value = 0;
    std::vector<int> witness;  // 0-based, ascending; the lexicographically
                               // smallest maximizer
};

/// Exhaustive enumeration with dependence pruning; undirected graphs only.
/// Throws TooLargeError past the cap and std::domain_error when no nonempty
/// independent set exists (every node looped).
VulnerabilityReport vulnerability(const Graph& g, int max_n = 20);

/// Desk-scale brute force: support and total support by enumerating all n!
/// permutation matrices against the adjacency pattern, arbitrary
/// regularizability by the exact rank comparison of [B | e] against B,
/// regular by degree inspection. Caps: n <= 8 directed, n <= 10 undirected
/// (TooLargeError beyond).
Category oracle_classify(const Graph& g);

}  // namespace regraph

#endif
