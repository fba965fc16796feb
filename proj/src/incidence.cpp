#include "regraph/incidence.hpp"

#include <stdexcept>

namespace regraph {

std::vector<Rational> IncidenceSystem::apply(const std::vector<Rational>& w) const {
    if (static_cast<int>(w.size()) != cols())
        throw std::invalid_argument("weight vector length does not match edge count");
    std::vector<Rational> out(rows_, Rational(0));
    for (int l = 0; l < cols(); ++l) {
        const Column& c = columns_[l];
        out[c.first] += w[l];
        if (c.second >= 0) out[c.second] += w[l];
    }
    return out;
}

std::vector<std::vector<int>> IncidenceSystem::dense() const {
    std::vector<std::vector<int>> b(rows_, std::vector<int>(cols(), 0));
    for (int l = 0; l < cols(); ++l) {
        b[columns_[l].first][l] = 1;
        if (columns_[l].second >= 0) b[columns_[l].second][l] = 1;
    }
    return b;
}

IncidenceSystem build_incidence(const Graph& g) {
    const int n = g.node_count();
    std::vector<IncidenceSystem::Column> cols;
    cols.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        if (g.directed()) {
            cols.push_back({e.tail, n + e.head});
        } else if (e.tail == e.head) {
            cols.push_back({e.tail, -1});
        } else {
            cols.push_back({e.tail, e.head});
        }
    }
    return IncidenceSystem(g.directed() ? 2 * n : n, std::move(cols));
}

std::vector<Rational> strengths(const Graph& g, const WeightAssignment& w) {
    return build_incidence(g).apply(w.weights);
}

bool verify_assignment(const Graph& g, const WeightAssignment& w) {
    if (w.degree <= 0) return false;
    bool nonzero = false;
    for (const Rational& x : w.weights)
        if (x != 0) {
            nonzero = true;
            break;
        }
    if (!nonzero) return false;
    for (const Rational& s : strengths(g, w))
        if (s != w.degree) return false;
    return true;
}

WeightAssignment normalized(const WeightAssignment& w) {
    std::vector<Rational> all = w.weights;
    all.push_back(w.degree);
    Integer denom = common_denominator(all);
    for (Rational& x : all) x *= denom;
    Integer g = integer_gcd(all);
    if (g == 0) return w;
    Rational scale = Rational(denom) / Rational(g);
    WeightAssignment out;
    out.weights.reserve(w.weights.size());
    for (const Rational& x : w.weights) out.weights.push_back(x * scale);
    out.degree = w.degree * scale;
    return out;
}

}  // namespace regraph
