#include "regraph/io.hpp"

#include <cstdint>
#include <sstream>
#include <unordered_set>

#include "regraph/errors.hpp"

#include <json.hpp>

namespace regraph {

namespace {

struct Line {
    int number;  // 1-based physical line
    std::string text;
};

/// Non-comment, non-blank lines with their physical numbers.
std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::size_t last = line.find_last_not_of(" \t\r");
        out.push_back({number, line.substr(first, last - first + 1)});
    }
    return out;
}

std::vector<std::string> split_fields(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string field;
    while (in >> field) out.push_back(field);
    return out;
}

int parse_int(const std::string& s, int line, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected " + what + ", got '" + s + "'");
    }
}

}  // namespace

Graph parse_graph(const std::string& text) {
    const auto lines = significant_lines(text);
    std::size_t at = 0;
    auto next = [&](const std::string& what) -> const Line& {
        if (at >= lines.size())
            throw ParseError(lines.empty() ? 1 : lines.back().number + 1,
                             "unexpected end of file, expected " + what);
        return lines[at++];
    };

    const Line& header = next("header 'directed' or 'undirected'");
    bool directed;
    if (header.text == "directed")
        directed = true;
    else if (header.text == "undirected")
        directed = false;
    else
        throw ParseError(header.number,
                         "header must be 'directed' or 'undirected', got '" +
                             header.text + "'");

    const Line& counts = next("'n m'");
    const auto fields = split_fields(counts.text);
    if (fields.size() != 2)
        throw ParseError(counts.number, "expected 'n m', got '" + counts.text + "'");
    const int n = parse_int(fields[0], counts.number, "node count");
    const int m = parse_int(fields[1], counts.number, "edge count");
    if (n <= 0) throw ParseError(counts.number, "node count must be positive");
    if (m < 0) throw ParseError(counts.number, "edge count must be nonnegative");

    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    for (int l = 0; l < m; ++l) {
        const Line& line = next("edge line " + std::to_string(l + 1));
        const auto ends = split_fields(line.text);
        if (ends.size() != 2)
            throw ParseError(line.number, "expected 'u v', got '" + line.text + "'");
        const int u = parse_int(ends[0], line.number, "node index");
        const int v = parse_int(ends[1], line.number, "node index");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(line.number, "node index out of range 1.." +
                                              std::to_string(n));
        int a = u, b = v;
        if (!directed && a > b) std::swap(a, b);
        if (!seen.insert((static_cast<std::uint64_t>(a) << 32) | b).second)
            throw ParseError(line.number,
                             std::string("duplicate ") +
                                 (directed ? "directed" : "unordered") + " edge " +
                                 std::to_string(u) + " " + std::to_string(v));
        edges.push_back(Edge{u - 1, v - 1});
    }
    if (at != lines.size())
        throw ParseError(lines[at].number, "trailing content after " +
                                               std::to_string(m) + " edges");
    return Graph(directed, n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream os;
    os << (g.directed() ? "directed" : "undirected") << "\n";
    os << g.node_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) os << e.tail + 1 << " " << e.head + 1 << "\n";
    return os.str();
}

const char* witness_class_name(WitnessClass c) {
    switch (c) {
        case WitnessClass::Regular: return "regular";
        case WitnessClass::Positive: return "positive";
        case WitnessClass::Nonnegative: return "nonnegative";
        case WitnessClass::Arbitrary: return "arbitrary";
        case WitnessClass::Kernel: return "kernel";
    }
    return "?";
}

std::optional<WitnessClass> witness_class_from_name(const std::string& name) {
    for (WitnessClass c : {WitnessClass::Regular, WitnessClass::Positive,
                           WitnessClass::Nonnegative, WitnessClass::Arbitrary,
                           WitnessClass::Kernel})
        if (name == witness_class_name(c)) return c;
    return std::nullopt;
}

std::string serialize_witness(const Graph& g, WitnessClass cls,
                              const WeightAssignment& w) {
    if (static_cast<int>(w.weights.size()) != g.edge_count())
        throw std::invalid_argument("witness length does not match edge count");
    std::ostringstream os;
    os << "class " << witness_class_name(cls) << "\n";
    os << "r " << to_string(w.degree) << "\n";
    for (int l = 0; l < g.edge_count(); ++l)
        os << l + 1 << " " << g.edge(l).tail + 1 << " " << g.edge(l).head + 1 << " "
           << to_string(w.weights[l]) << "\n";
    return os.str();
}

WitnessDocument parse_witness(const std::string& text) {
    const auto lines = significant_lines(text);
    std::size_t at = 0;
    auto next = [&](const std::string& what) -> const Line& {
        if (at >= lines.size())
            throw ParseError(lines.empty() ? 1 : lines.back().number + 1,
                             "unexpected end of file, expected " + what);
        return lines[at++];
    };

    WitnessDocument doc;
    {
        const Line& line = next("'class <name>'");
        const auto fields = split_fields(line.text);
        if (fields.size() != 2 || fields[0] != "class")
            throw ParseError(line.number, "expected 'class <name>'");
        auto cls = witness_class_from_name(fields[1]);
        if (!cls)
            throw ParseError(line.number, "unknown witness class '" + fields[1] + "'");
        doc.cls = *cls;
    }
    {
        const Line& line = next("'r <value>'");
        const auto fields = split_fields(line.text);
        if (fields.size() != 2 || fields[0] != "r")
            throw ParseError(line.number, "expected 'r <value>'");
        try {
            doc.assignment.degree = parse_rational(fields[1]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line.number, e.what());
        }
    }
    int expected_index = 1;
    while (at < lines.size()) {
        const Line& line = next("weight line");
        const auto fields = split_fields(line.text);
        if (fields.size() != 4)
            throw ParseError(line.number,
                             "expected 'edge_index tail head weight', got '" +
                                 line.text + "'");
        const int index = parse_int(fields[0], line.number, "edge index");
        if (index != expected_index)
            throw ParseError(line.number, "edge index " + std::to_string(index) +
                                              " out of order, expected " +
                                              std::to_string(expected_index));
        const int tail = parse_int(fields[1], line.number, "tail");
        const int head = parse_int(fields[2], line.number, "head");
        try {
            doc.assignment.weights.push_back(parse_rational(fields[3]));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line.number, e.what());
        }
        doc.endpoints.emplace_back(tail, head);
        ++expected_index;
    }
    return doc;
}

std::string export_lp(const Graph& g, Category cls) {
    if (cls != Category::ArbitrarilyRegularizable &&
        cls != Category::NonnegativelyRegularizable &&
        cls != Category::PositivelyRegularizable)
        throw std::invalid_argument("LP export supports the arbitrary, nonnegative "
                                    "and positive classes");
    const IncidenceSystem B = build_incidence(g);
    std::ostringstream os;
    os << "\\ regularization feasibility, class: " << category_name(cls) << "\n";
    os << "Minimize\n obj:\nSubject To\n";
    // row i: sum of incident edge weights minus r, written in edge order
    std::vector<std::vector<int>> row_terms(B.rows());
    for (int l = 0; l < B.cols(); ++l) {
        row_terms[B.column(l).first].push_back(l);
        if (B.column(l).second >= 0) row_terms[B.column(l).second].push_back(l);
    }
    for (int i = 0; i < B.rows(); ++i) {
        os << " c" << i + 1 << ":";
        for (std::size_t k = 0; k < row_terms[i].size(); ++k)
            os << (k ? " + " : " ") << "w" << row_terms[i][k] + 1;
        os << " - r = 0\n";
    }
    os << "Bounds\n";
    for (int l = 1; l <= B.cols(); ++l) {
        if (cls == Category::ArbitrarilyRegularizable)
            os << " w" << l << " free\n";
        else if (cls == Category::NonnegativelyRegularizable)
            os << " w" << l << " >= 0\n";
        else
            os << " w" << l << " >= 1\n";
    }
    if (cls == Category::PositivelyRegularizable)
        os << " r free\n";
    else
        os << " r >= 1\n";
    os << "End\n";
    return os.str();
}

std::string export_dot(const Graph& g, const WeightAssignment* w) {
    if (w) {
        if (static_cast<int>(w->weights.size()) != g.edge_count())
            throw Error("invalid witness: length does not match edge count");
        for (const Rational& s : strengths(g, *w))
            if (s != w->degree)
                throw Error("invalid witness: B w = r e does not hold");
    }
    std::ostringstream os;
    os << (g.directed() ? "digraph" : "graph") << " G {\n";
    for (int v = 1; v <= g.node_count(); ++v) os << "  " << v << ";\n";
    const char* arrow = g.directed() ? " -> " : " -- ";
    for (int l = 0; l < g.edge_count(); ++l) {
        os << "  " << g.edge(l).tail + 1 << arrow << g.edge(l).head + 1;
        if (w) os << " [label=\"" << to_string(w->weights[l]) << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string classify_report_json(const HierarchyVerdict& v, long long elapsed_us) {
    nlohmann::json j;
    j["category"] = category_name(v.category);
    if (v.witness) {
        nlohmann::json wit;
        wit["r"] = to_string(v.witness->degree);
        auto& arr = wit["weights"] = nlohmann::json::array();
        for (const Rational& x : v.witness->weights) arr.push_back(to_string(x));
        j["witness"] = std::move(wit);
    } else {
        j["witness"] = nullptr;
    }
    if (v.certificate) {
        const Certificate& c = *v.certificate;
        nlohmann::json cert;
        cert["description"] = c.describe();
        switch (c.kind) {
            case Certificate::Kind::IsolatedNode:
                cert["kind"] = "isolated_node";
                cert["node"] = c.node + 1;
                break;
            case Certificate::Kind::SourceNode:
                cert["kind"] = "source_node";
                cert["node"] = c.node + 1;
                break;
            case Certificate::Kind::SinkNode:
                cert["kind"] = "sink_node";
                cert["node"] = c.node + 1;
                break;
            case Certificate::Kind::UnbalancedComponent: {
                cert["kind"] = "unbalanced_component";
                auto& u = cert["u_side"] = nlohmann::json::array();
                for (int x : c.u_side) u.push_back(x + 1);
                auto& w2 = cert["w_side"] = nlohmann::json::array();
                for (int x : c.w_side) w2.push_back(x + 1);
                break;
            }
            case Certificate::Kind::UnbalancedEdgeClass: {
                cert["kind"] = "unbalanced_edge_class";
                auto& wh = cert["whites"] = nlohmann::json::array();
                for (int x : c.whites) wh.push_back(x + 1);
                auto& bl = cert["blacks"] = nlohmann::json::array();
                for (int x : c.blacks) bl.push_back(x + 1);
                auto& ed = cert["edges"] = nlohmann::json::array();
                for (int x : c.class_edges) ed.push_back(x + 1);
                break;
            }
        }
        j["certificate"] = std::move(cert);
    } else {
        j["certificate"] = nullptr;
    }
    j["timings"] = {{"classify_us", elapsed_us}};
    return j.dump(2) + "\n";
}

}  // namespace regraph
