#ifndef REGRAPH_LINALG_HPP
#define REGRAPH_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "regraph/rational.hpp"

namespace regraph {

/// Dense rational matrix for the exact elimination paths. Sizes here are
/// incidence-system scale (components of small systems), so dense storage
/// is fine.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

/// Exact rank via Gaussian elimination with lowest-index pivoting.
int matrix_rank(RationalMatrix m);

/// Reduces in place to reduced row echelon form; returns the pivot column of
/// each pivot row, in row order.
std::vector<int> rref(RationalMatrix& m);

struct SquareSolve {
    std::vector<Rational> x;
    Integer det_magnitude;  // |det(M)|, exact
};

/// Solves M x = b for square nonsingular M; nullopt when singular.
std::optional<SquareSolve> solve_square(RationalMatrix m, std::vector<Rational> b);

/// Greedy rank-increasing column selection: feed candidate columns in order,
/// keep the ones that enlarge the span.
class IndependentColumns {
public:
    /// Returns true (and keeps the column) iff it is independent of the
    /// columns accepted so far.
    bool try_add(std::vector<Rational> column);
    int rank() const { return static_cast<int>(reduced_.size()); }

private:
    std::vector<std::pair<int, std::vector<Rational>>> reduced_;  // (lead row, column)
};

}  // namespace regraph

#endif
