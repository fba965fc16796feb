#include "regraph/linalg.hpp"

#include <stdexcept>

namespace regraph {

int matrix_rank(RationalMatrix m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, c) == 0) continue;
            Rational f = m.at(i, c) / m.at(r, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

std::vector<int> rref(RationalMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::optional<SquareSolve> solve_square(RationalMatrix m, std::vector<Rational> b) {
    const int n = m.rows();
    if (m.cols() != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("solve_square expects a square system");
    Rational det(1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != c) {
            for (int j = c; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            std::swap(b[piv], b[c]);
            det = -det;
        }
        det *= m.at(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (m.at(i, c) == 0) continue;
            Rational f = m.at(i, c) / m.at(c, c);
            for (int j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
            b[i] -= f * b[c];
        }
    }
    std::vector<Rational> x(n, Rational(0));
    for (int i = n - 1; i >= 0; --i) {
        Rational s = b[i];
        for (int j = i + 1; j < n; ++j) s -= m.at(i, j) * x[j];
        x[i] = s / m.at(i, i);
    }
    SquareSolve out;
    out.x = std::move(x);
    Rational mag = det >= 0 ? det : Rational(-det);
    if (!is_integral(mag))
        throw std::logic_error("determinant of an integer matrix must be integral");
    out.det_magnitude = mag.get_num();
    return out;
}

bool IndependentColumns::try_add(std::vector<Rational> column) {
    for (const auto& [lead, vec] : reduced_) {
        if (column[lead] == 0) continue;
        Rational f = column[lead] / vec[lead];
        for (std::size_t i = 0; i < column.size(); ++i) column[i] -= f * vec[i];
    }
    int lead = -1;
    for (std::size_t i = 0; i < column.size(); ++i)
        if (column[i] != 0) {
            lead = static_cast<int>(i);
            break;
        }
    if (lead < 0) return false;
    reduced_.emplace_back(lead, std::move(column));
    return true;
}

}  // namespace regraph
