#ifndef REGRAPH_INCIDENCE_HPP
#define REGRAPH_INCIDENCE_HPP

#include <vector>

#include "regraph/graph.hpp"
#include "regraph/rational.hpp"

namespace regraph {

/// The 0/1 matrix B of the system B w = r e, stored sparsely per column.
///
/// Directed graph on n nodes: 2n rows; the column of edge (i,j) has its 1s at
/// row i (out block) and row n+j (in block) — for a loop (i,i) that is rows i
/// and n+i. Undirected graph: n rows; the column of {i,j} has 1s at rows i
/// and j, and a loop column has a single 1 at row i (the diagonal entry
/// contributes once to the row sum).
class IncidenceSystem {
public:
    struct Column {
        int first;
        int second;  // -1 for the single-entry undirected loop column
    };

    IncidenceSystem(int rows, std::vector<Column> columns)
        : rows_(rows), columns_(std::move(columns)) {}

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(columns_.size()); }
    const Column& column(int l) const { return columns_[l]; }

    /// B * w; throws std::invalid_argument on a length mismatch.
    std::vector<Rational> apply(const std::vector<Rational>& w) const;

    /// Dense 0/1 copy, row-major.
    std::vector<std::vector<int>> dense() const;

private:
    int rows_;
    std::vector<Column> columns_;
};

IncidenceSystem build_incidence(const Graph& g);

/// Exact rational weight per edge (aligned with the canonical enumeration)
/// plus the regularization degree r.
struct WeightAssignment {
    std::vector<Rational> weights;
    Rational degree;  // r
};

/// B * w.weights: length n for undirected graphs, 2n (out-strengths then
/// in-strengths) for directed ones.
std::vector<Rational> strengths(const Graph& g, const WeightAssignment& w);

/// True iff B w = r e exactly, r > 0 and w != 0.
bool verify_assignment(const Graph& g, const WeightAssignment& w);

/// Scales (w, r) by the positive rational that makes every entry an integer
/// with gcd(weights, r) = 1. Zero assignments are returned unchanged.
WeightAssignment normalized(const WeightAssignment& w);

}  // namespace regraph

#endif
