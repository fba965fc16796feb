#ifndef REGRAPH_IO_HPP
#define REGRAPH_IO_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regraph/classify.hpp"
#include "regraph/graph.hpp"
#include "regraph/incidence.hpp"

namespace regraph {

/// Graph file grammar:
///   header line "directed" | "undirected"
///   "n m"
///   m lines "u v" (1-based)
/// Lines starting with '#' are comments and are ignored anywhere; blank
/// lines are skipped. Diagnostics carry the 1-based physical line number.
Graph parse_graph(const std::string& text);

/// Canonical text form; parse(serialize(g)) == g.
std::string serialize_graph(const Graph& g);

/// Tag written into a witness file; Kernel marks r = 0 null-strength vectors.
enum class WitnessClass { Regular, Positive, Nonnegative, Arbitrary, Kernel };

const char* witness_class_name(WitnessClass c);
std::optional<WitnessClass> witness_class_from_name(const std::string& name);

/// Witness file grammar ('#' comments and blank lines allowed):
///   class <regular|positive|nonnegative|arbitrary|kernel>
///   r <integer or p/q>
///   m lines "edge_index tail head weight", edge_index ascending from 1
std::string serialize_witness(const Graph& g, WitnessClass cls,
                              const WeightAssignment& w);

struct WitnessDocument {
    WitnessClass cls;
    WeightAssignment assignment;
    std::vector<std::pair<int, int>> endpoints;  // 1-based, as written
};

WitnessDocument parse_witness(const std::string& text);

/// LP-format feasibility model for one hierarchy class. Zero objective, one
/// equality row per incidence row (B w - r e = 0), bounds per class:
/// arbitrary: w free, r >= 1; nonnegative: w >= 0, r >= 1; positive: w >= 1,
/// r free. Variables are named w1..wm and r.
std::string export_lp(const Graph& g, Category cls);

/// DOT rendering; edge labels carry the exact rational weights when a
/// witness is given. The witness must satisfy B w = r e exactly (r = 0
/// kernel vectors are allowed).
std::string export_dot(const Graph& g, const WeightAssignment* w = nullptr);

/// JSON mirror of a verdict: category, witness (weights as "p/q" strings),
/// certificate, timings (integer microseconds; no floating point anywhere).
std::string classify_report_json(const HierarchyVerdict& v, long long elapsed_us);

}  // namespace regraph

#endif
