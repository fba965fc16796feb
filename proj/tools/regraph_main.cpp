#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "regraph/analysis.hpp"
#include "regraph/classify.hpp"
#include "regraph/errors.hpp"
#include "regraph/io.hpp"
#include "regraph/synth.hpp"
#include "regraph/transform.hpp"

namespace {

using namespace regraph;

constexpr int kExitOk = 0;         // success / predicate true
constexpr int kExitPredicate = 1;  // classification says "not in this class"
constexpr int kExitInput = 2;      // unreadable or malformed input

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << text;
}

std::string weights_line(const WeightAssignment& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.weights.size(); ++i)
        os << (i ? " " : "") << to_string(w.weights[i]);
    return os.str();
}

int run_classify(const std::string& file, bool json) {
    const Graph g = load_graph(file);
    const auto start = std::chrono::steady_clock::now();
    const HierarchyVerdict v = classify_graph(g);
    const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (json) {
        std::cout << classify_report_json(v, elapsed);
        return kExitOk;
    }
    std::cout << category_name(v.category) << "\n";
    if (v.witness) {
        std::cout << "witness r = " << to_string(v.witness->degree) << "\n";
        std::cout << "witness w = " << weights_line(*v.witness) << "\n";
    }
    if (v.certificate)
        std::cout << "certificate: " << v.certificate->describe() << "\n";
    return kExitOk;
}

int run_weights(const std::string& file, const std::string& cls) {
    const Graph g = load_graph(file);
    if (cls == "regular") {
        if (!is_regular(g)) {
            std::cerr << "graph is not regular\n";
            return kExitPredicate;
        }
        WeightAssignment ones{std::vector<Rational>(g.edge_count(), Rational(1)),
                              Rational(1)};
        ones.degree = strengths(g, ones)[0];
        std::cout << serialize_witness(g, WitnessClass::Regular, ones);
        return kExitOk;
    }
    if (cls == "positive" || cls == "nonnegative") {
        try {
            const WeightAssignment w =
                cls == "positive" ? synth_positive(g) : synth_nonnegative(g);
            std::cout << serialize_witness(g,
                                           cls == "positive" ? WitnessClass::Positive
                                                             : WitnessClass::Nonnegative,
                                           w);
            return kExitOk;
        } catch (const NoSupportError& e) {
            std::cerr << e.what() << "\n";
            return kExitPredicate;
        } catch (const NoTotalSupportError& e) {
            std::cerr << e.what() << "\n";
            return kExitPredicate;
        }
    }
    if (cls == "arbitrary") {
        try {
            const auto [w, report] = synth_arbitrary(g);
            std::ostringstream os;
            os << "# pivot columns:";
            for (int c : report.pivot_columns) os << " " << c + 1;
            os << "\n# |det(M)| = " << report.det_magnitude.get_str()
               << "\n# scaling = " << to_string(report.scaling) << "\n";
            std::cout << os.str() << serialize_witness(g, WitnessClass::Arbitrary, w);
            return kExitOk;
        } catch (const NotArbitrarilyRegularizableError& e) {
            std::cerr << e.what() << "\n";
            return kExitPredicate;
        }
    }
    // best: most specific synthesizable class
    const HierarchyVerdict v = classify_graph(g);
    if (!v.witness) {
        std::cerr << "graph is not regularizable";
        if (v.certificate) std::cerr << ": " << v.certificate->describe();
        std::cerr << "\n";
        return kExitPredicate;
    }
    WitnessClass wc = WitnessClass::Arbitrary;
    switch (v.category) {
        case Category::Regular: wc = WitnessClass::Regular; break;
        case Category::PositivelyRegularizable: wc = WitnessClass::Positive; break;
        case Category::NonnegativelyRegularizable: wc = WitnessClass::Nonnegative; break;
        default: break;
    }
    std::cout << serialize_witness(g, wc, *v.witness);
    return kExitOk;
}

int run_verify(const std::string& file, const std::string& witness_file) {
    const Graph g = load_graph(file);
    const WitnessDocument doc = parse_witness(read_file(witness_file));
    if (static_cast<int>(doc.assignment.weights.size()) != g.edge_count())
        throw Error("witness has " + std::to_string(doc.assignment.weights.size()) +
                    " weights but the graph has " + std::to_string(g.edge_count()) +
                    " edges");
    for (int l = 0; l < g.edge_count(); ++l) {
        if (doc.endpoints[l].first != g.edge(l).tail + 1 ||
            doc.endpoints[l].second != g.edge(l).head + 1)
            throw Error("witness edge " + std::to_string(l + 1) +
                        " does not match the graph's edge enumeration");
    }

    bool system_ok = true;
    for (const Rational& s : strengths(g, doc.assignment))
        if (s != doc.assignment.degree) system_ok = false;
    bool nonzero = false;
    for (const Rational& x : doc.assignment.weights)
        if (x != 0) nonzero = true;

    bool class_ok = true;
    switch (doc.cls) {
        case WitnessClass::Regular:
            for (const Rational& x : doc.assignment.weights)
                if (x != 1) class_ok = false;
            class_ok = class_ok && doc.assignment.degree > 0;
            break;
        case WitnessClass::Positive:
            for (const Rational& x : doc.assignment.weights)
                if (x <= 0) class_ok = false;
            class_ok = class_ok && doc.assignment.degree > 0;
            break;
        case WitnessClass::Nonnegative:
            for (const Rational& x : doc.assignment.weights)
                if (x < 0) class_ok = false;
            class_ok = class_ok && doc.assignment.degree > 0 && nonzero;
            break;
        case WitnessClass::Arbitrary:
            class_ok = doc.assignment.degree > 0 && nonzero;
            break;
        case WitnessClass::Kernel:
            class_ok = doc.assignment.degree == 0 && nonzero;
            break;
    }

    std::cout << "system B w = r e: " << (system_ok ? "ok" : "FAIL") << "\n";
    std::cout << "class " << witness_class_name(doc.cls)
              << " pattern: " << (class_ok ? "ok" : "FAIL") << "\n";
    const bool ok = system_ok && class_ok;
    std::cout << (ok ? "witness accepted" : "witness rejected") << "\n";
    return ok ? kExitOk : kExitPredicate;
}

int run_canonical(const std::string& file) {
    const Graph g = load_graph(file);
    try {
        const CanonicalForm form = canonical_form(g);
        std::cout << "blocks:";
        bool all_square = true;
        for (auto [r, c] : form.blocks) {
            std::cout << " " << r << "x" << c;
            all_square = all_square && r == c;
        }
        std::cout << "\nrow order:";
        for (int r : form.row_perm) std::cout << " " << r + 1;
        std::cout << "\ncolumn order:";
        for (int c : form.col_perm) std::cout << " " << c + 1;
        std::cout << "\nall blocks square: " << (all_square ? "yes" : "no") << "\n";
        return kExitOk;
    } catch (const ZeroRowOrColumnError& e) {
        std::cerr << e.what() << " -- the graph is not regularizable\n";
        return kExitPredicate;
    }
}

int run_kernel(const std::string& file) {
    const Graph g = load_graph(file);
    try {
        const WeightAssignment w = kernel_witness(g);
        std::cout << serialize_witness(g, WitnessClass::Kernel, w);
        return kExitOk;
    } catch (const AcyclicOnlyTrivialError& e) {
        std::cerr << e.what() << "\n";
        return kExitPredicate;
    }
}

int run_lp(const std::string& file, const std::string& cls, const std::string& out) {
    const Graph g = load_graph(file);
    Category c;
    if (cls == "arbitrary")
        c = Category::ArbitrarilyRegularizable;
    else if (cls == "nonnegative")
        c = Category::NonnegativelyRegularizable;
    else if (cls == "positive")
        c = Category::PositivelyRegularizable;
    else
        throw Error("unknown LP class '" + cls + "'");
    write_output(out, export_lp(g, c));
    return kExitOk;
}

int run_vuln(const std::string& file, int max_n) {
    const Graph g = load_graph(file);
    try {
        const VulnerabilityReport report = vulnerability(g, max_n);
        std::cout << "vulnerability = " << report.value << "\n";
        std::cout << "witness S =";
        for (int v : report.witness) std::cout << " " << v + 1;
        std::cout << "\n";
        return kExitOk;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitPredicate;
    }
}

int run_dot(const std::string& file, const std::string& witness_file) {
    const Graph g = load_graph(file);
    if (witness_file.empty()) {
        std::cout << export_dot(g);
        return kExitOk;
    }
    const WitnessDocument doc = parse_witness(read_file(witness_file));
    std::cout << export_dot(g, &doc.assignment);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regularizability toolkit: classify graphs in the four-level "
                 "hierarchy, synthesize exact weight witnesses, export models"};
    app.require_subcommand(1);

    std::string file, witness_file, cls, out;
    bool json = false;
    int max_n = 20;

    auto* classify_cmd =
        app.add_subcommand("classify", "most specific hierarchy class + witness");
    classify_cmd->add_option("FILE", file)->required();
    classify_cmd->add_flag("--json", json, "machine-readable report");

    auto* weights_cmd = app.add_subcommand("weights", "synthesize a weight witness");
    weights_cmd->add_option("FILE", file)->required();
    weights_cmd->add_option("--class", cls, "regular|positive|nonnegative|arbitrary|best")
        ->required()
        ->check(CLI::IsMember({"regular", "positive", "nonnegative", "arbitrary", "best"}));

    auto* verify_cmd = app.add_subcommand("verify", "check a witness file exactly");
    verify_cmd->add_option("FILE", file)->required();
    verify_cmd->add_option("--witness", witness_file)->required();

    auto* canonical_cmd =
        app.add_subcommand("canonical", "block-diagonal form under row/column permutations");
    canonical_cmd->add_option("FILE", file)->required();

    auto* kernel_cmd = app.add_subcommand("kernel", "nonzero solution of B w = 0");
    kernel_cmd->add_option("FILE", file)->required();

    auto* lp_cmd = app.add_subcommand("lp", "LP-format feasibility model");
    lp_cmd->add_option("FILE", file)->required();
    lp_cmd->add_option("--class", cls, "arbitrary|nonnegative|positive")
        ->required()
        ->check(CLI::IsMember({"arbitrary", "nonnegative", "positive"}));
    lp_cmd->add_option("-o,--output", out, "output path (default stdout)");

    auto* vuln_cmd = app.add_subcommand("vuln", "graph vulnerability by enumeration");
    vuln_cmd->add_option("FILE", file)->required();
    vuln_cmd->add_option("--max-n", max_n, "enumeration cap (default 20)");

    auto* dot_cmd = app.add_subcommand("dot", "DOT rendering, optionally weighted");
    dot_cmd->add_option("FILE", file)->required();
    dot_cmd->add_option("--witness", witness_file);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(file, json);
        if (weights_cmd->parsed()) return run_weights(file, cls);
        if (verify_cmd->parsed()) return run_verify(file, witness_file);
        if (canonical_cmd->parsed()) return run_canonical(file);
        if (kernel_cmd->parsed()) return run_kernel(file);
        if (lp_cmd->parsed()) return run_lp(file, cls, out);
        if (vuln_cmd->parsed()) return run_vuln(file, max_n);
        if (dot_cmd->parsed()) return run_dot(file, witness_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
