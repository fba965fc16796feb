#include "regraph/synth.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "regraph/classify.hpp"
#include "regraph/errors.hpp"
#include "regraph/linalg.hpp"
#include "regraph/matching.hpp"
#include "regraph/transform.hpp"

namespace regraph {

namespace {

std::map<std::pair<int, int>, int> star_edge_lookup(const StarGraph& sg) {
    std::map<std::pair<int, int>, int> out;
    for (int e = 0; e < static_cast<int>(sg.edges.size()); ++e)
        out[{sg.edges[e].white, sg.edges[e].black}] = e;
    return out;
}

/// Adds the cycle forest encoded by a perfect matching to the accumulator.
/// Directed: +1 per covered edge. Undirected: a matched star edge adds 1 to
/// its source edge (its twin may add the second 1), a matched loop adds 2 —
/// the two-sided q-value of the symmetric form.
void accumulate_forest(const Graph& g, const StarGraph& sg,
                       const std::map<std::pair<int, int>, int>& star_edge_of,
                       const detail::BipartiteMatching& m,
                       std::vector<Rational>& weights) {
    for (int w = 0; w < sg.base_nodes; ++w) {
        const int b = m.match_white[w];
        const int se = star_edge_of.at({w, b});
        const int l = sg.edges[se].source_edge;
        if (!g.directed() && g.edge(l).tail == g.edge(l).head)
            weights[l] += 2;
        else
            weights[l] += 1;
    }
}

bool connected_ignoring_direction(const Graph& g) {
    const auto adj = g.undirected_adjacency();
    std::vector<char> seen(g.node_count(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push(v);
            }
    }
    return count == g.node_count();
}

/// Solves the component-restricted system M x = e on the given incidence
/// rows/columns and writes the solution into the global weight vector.
/// `keep_rows` lists the rows forming the square system after column
/// selection; `columns` are candidate edges in canonical order.
void solve_component(const IncidenceSystem& B, const std::vector<int>& keep_rows,
                     const std::vector<int>& columns, std::vector<Rational>& w,
                     std::vector<int>& pivot_columns, Integer& det_product) {
    const int target = static_cast<int>(keep_rows.size());
    std::vector<int> row_pos(B.rows(), -1);
    for (int i = 0; i < target; ++i) row_pos[keep_rows[i]] = i;

    auto local_column = [&](int l) {
        std::vector<Rational> col(target, Rational(0));
        const auto& c = B.column(l);
        if (row_pos[c.first] >= 0) col[row_pos[c.first]] += 1;
        if (c.second >= 0 && row_pos[c.second] >= 0) col[row_pos[c.second]] += 1;
        return col;
    };

    IndependentColumns basis;
    std::vector<int> selected;
    for (int l : columns) {
        if (static_cast<int>(selected.size()) == target) break;
        if (basis.try_add(local_column(l))) selected.push_back(l);
    }
    if (static_cast<int>(selected.size()) != target)
        throw std::logic_error("component system has deficient rank");

    RationalMatrix M(target, target);
    for (int k = 0; k < target; ++k) {
        auto col = local_column(selected[k]);
        for (int i = 0; i < target; ++i) M.at(i, k) = col[i];
    }
    auto solve = solve_square(std::move(M), std::vector<Rational>(target, Rational(1)));
    if (!solve) throw std::logic_error("selected basis is singular");

    for (int k = 0; k < target; ++k) w[selected[k]] = solve->x[k];
    pivot_columns.insert(pivot_columns.end(), selected.begin(), selected.end());
    det_product *= solve->det_magnitude;
}

/// The +/-1 vector over a bipartition annihilates every incidence column: it
/// guarantees the dropped row of a balanced component. Violations mean a
/// broken bipartition, so they are hard errors.
void assert_separating_vector(const IncidenceSystem& B,
                              const std::vector<int>& columns,
                              const std::vector<int>& plus_rows,
                              const std::vector<int>& minus_rows) {
    std::vector<int> sign(B.rows(), 0);
    for (int r : plus_rows) sign[r] = 1;
    for (int r : minus_rows) sign[r] = -1;
    for (int l : columns) {
        const auto& c = B.column(l);
        int s = sign[c.first] + (c.second >= 0 ? sign[c.second] : 0);
        if (s != 0) throw std::logic_error("separating vector does not annihilate B");
    }
}

}  // namespace

WeightAssignment synth_positive(const Graph& g) {
    if (g.edge_count() == 0) throw NoTotalSupportError();
    const StarGraph sg = star_transform(g);
    const auto baseline = detail::hopcroft_karp(sg);
    if (baseline.size != sg.base_nodes) throw NoTotalSupportError();

    const auto lookup = star_edge_lookup(sg);
    std::vector<Rational> weights(g.edge_count(), Rational(0));
    Rational degree(0);
    const Rational per_forest = g.directed() ? 1 : 2;
    // one forced forest per source edge; its primary star edge pins the pair
    int star_edge = 0;
    for (int l = 0; l < g.edge_count(); ++l) {
        auto forest = detail::perfect_matching_through(sg, star_edge, baseline);
        if (!forest) throw NoTotalSupportError();
        accumulate_forest(g, sg, lookup, *forest, weights);
        degree += per_forest;
        star_edge += (!g.directed() && g.edge(l).tail != g.edge(l).head) ? 2 : 1;
    }
    WeightAssignment out = normalized({std::move(weights), degree});
    if (!verify_assignment(g, out))
        throw std::logic_error("positive witness failed verification");
    return out;
}

WeightAssignment synth_nonnegative(const Graph& g) {
    const StarGraph sg = star_transform(g);
    const auto m = detail::hopcroft_karp(sg);
    if (m.size != sg.base_nodes) throw NoSupportError();

    WeightAssignment out{std::vector<Rational>(g.edge_count(), Rational(0)),
                         g.directed() ? Rational(1) : Rational(2)};
    accumulate_forest(g, sg, star_edge_lookup(sg), m, out.weights);
    if (!verify_assignment(g, out))
        throw std::logic_error("nonnegative witness failed verification");
    return out;
}

std::pair<WeightAssignment, LinearSolveReport> synth_arbitrary(const Graph& g) {
    const auto check = is_arbitrarily_regularizable(g);
    if (!check.ok)
        throw NotArbitrarilyRegularizableError(check.certificate->describe());

    const IncidenceSystem B = build_incidence(g);
    std::vector<Rational> w(g.edge_count(), Rational(0));
    LinearSolveReport report;
    report.det_magnitude = 1;

    if (g.directed()) {
        const StarGraph sg = star_transform(g);
        const StarComponents sc = star_components(sg);
        // star node ids coincide with incidence row ids
        std::vector<std::vector<int>> rows(sc.count), cols(sc.count);
        for (int r = 0; r < B.rows(); ++r) rows[sc.id[r]].push_back(r);
        for (int l = 0; l < g.edge_count(); ++l)
            cols[sc.id[g.edge(l).tail]].push_back(l);
        for (int c = 0; c < sc.count; ++c) {
            std::vector<int> plus, minus;  // whites, blacks
            for (int r : rows[c])
                (r < g.node_count() ? plus : minus).push_back(r);
            assert_separating_vector(B, cols[c], plus, minus);
            std::vector<int> keep = rows[c];
            keep.pop_back();  // drop the highest row; balance restores it
            solve_component(B, keep, cols[c], w, report.pivot_columns,
                            report.det_magnitude);
        }
    } else {
        const BipartitePartition part = bipartite_partition(g);
        std::vector<int> comp_of(g.node_count(), -1);
        for (std::size_t c = 0; c < part.components.size(); ++c)
            for (int v : part.components[c].nodes) comp_of[v] = static_cast<int>(c);
        std::vector<std::vector<int>> cols(part.components.size());
        for (int l = 0; l < g.edge_count(); ++l)
            cols[comp_of[g.edge(l).tail]].push_back(l);
        for (std::size_t c = 0; c < part.components.size(); ++c) {
            const ComponentBipartition& comp = part.components[c];
            std::vector<int> keep = comp.nodes;
            if (comp.bipartite) {
                assert_separating_vector(B, cols[c], comp.u_side, comp.w_side);
                keep.pop_back();  // rank n-1: the dropped row follows from balance
            }
            solve_component(B, keep, cols[c], w, report.pivot_columns,
                            report.det_magnitude);
        }
    }

    // full-system check, including every dropped row
    for (const Rational& s : B.apply(w))
        if (s != 1) throw std::logic_error("component solve missed a row");

    WeightAssignment out = normalized({std::move(w), Rational(1)});
    report.scaling = out.degree;  // r was exactly 1 before scaling
    std::sort(report.pivot_columns.begin(), report.pivot_columns.end());
    if (!verify_assignment(g, out))
        throw std::logic_error("arbitrary witness failed verification");
    return {std::move(out), std::move(report)};
}

WeightAssignment kernel_witness(const Graph& g) {
    if (!connected_ignoring_direction(g))
        throw std::invalid_argument("kernel_witness expects a connected graph");

    const IncidenceSystem B = build_incidence(g);
    RationalMatrix m(B.rows(), B.cols());
    for (int l = 0; l < B.cols(); ++l) {
        m.at(B.column(l).first, l) = 1;
        if (B.column(l).second >= 0) m.at(B.column(l).second, l) = 1;
    }
    const std::vector<int> pivots = rref(m);

    int free_col = -1;
    {
        std::vector<char> is_pivot(B.cols(), 0);
        for (int c : pivots) is_pivot[c] = 1;
        for (int c = 0; c < B.cols(); ++c)
            if (!is_pivot[c]) {
                free_col = c;
                break;
            }
    }
    if (free_col < 0) throw AcyclicOnlyTrivialError();

    std::vector<Rational> w(B.cols(), Rational(0));
    w[free_col] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
        w[pivots[k]] = -m.at(static_cast<int>(k), free_col);

    // integer form, gcd 1, first nonzero positive
    Integer denom = common_denominator(w);
    for (Rational& x : w) x *= denom;
    Integer gcd = integer_gcd(w);
    for (Rational& x : w) x /= Rational(gcd);
    for (const Rational& x : w) {
        if (x == 0) continue;
        if (x < 0)
            for (Rational& y : w) y = -y;
        break;
    }

    WeightAssignment out{std::move(w), Rational(0)};
    for (const Rational& s : B.apply(out.weights))
        if (s != 0) throw std::logic_error("kernel vector fails B w = 0");
    return out;
}

}  // namespace regraph
