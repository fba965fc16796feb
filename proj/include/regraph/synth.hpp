#ifndef REGRAPH_SYNTH_HPP
#define REGRAPH_SYNTH_HPP

#include <utility>
#include <vector>

#include "regraph/graph.hpp"
#include "regraph/incidence.hpp"
#include "regraph/rational.hpp"

namespace regraph {

/// How the exact solve behind synth_arbitrary picked its basis.
struct LinearSolveReport {
    std::vector<int> pivot_columns;  // canonical edge indices, ascending
    Integer det_magnitude;           // |det(M)|, product over components; >= 1
    Rational scaling;                // factor applied for integer normalization
};

/// Positive integer witness built by summing one spanning cycle forest per
/// edge (undirected: the symmetric two-sided form of each forest). Output is
/// gcd-normalized. Throws NoTotalSupportError.
WeightAssignment synth_positive(const Graph& g);

/// Spanning-cycle-forest witness: directed graphs get weights in {0,1} with
/// r = 1, undirected ones weights in {0,1,2} with r = 2 (a doubled edge
/// carries 2). Throws NoSupportError.
WeightAssignment synth_nonnegative(const Graph& g);

/// Exact rational solve of B w = r e per component: non-bipartite components
/// use a full-rank basis of incidence columns, balanced bipartite ones drop
/// their highest row and rely on the separating-vector identity for it.
/// The result is scaled to the smallest positive integer solution
/// (gcd(weights, r) = 1). Throws NotArbitrarilyRegularizableError.
std::pair<WeightAssignment, LinearSolveReport> synth_arbitrary(const Graph& g);

/// Nonzero integer solution of B w = 0 (degree r = 0) for a connected cyclic
/// graph that is not arbitrarily regularizable; normalized to gcd 1 with the
/// first nonzero weight positive. Throws AcyclicOnlyTrivialError when only
/// w = 0 solves the system (trees), std::invalid_argument when disconnected.
WeightAssignment kernel_witness(const Graph& g);

}  // namespace regraph

#endif
