#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "itc/graph.hpp"

namespace itc {

// Colors are positive integers 1..t. Edge colors are indexed by the owning
// graph's edge order.
struct TotalColoring {
    int t = 0;
    std::vector<int> vertex_colors;
    std::vector<int> edge_colors;

    friend bool operator==(const TotalColoring&, const TotalColoring&) = default;
};

struct EdgeColoring {
    int t = 0;
    std::vector<int> edge_colors;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

enum class ViolationKind {
    adjacent_vertices,
    adjacent_edges,
    incident_vertex_edge,
    missing_color,
    not_interval,
    out_of_range,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind{};
    std::vector<int> vertices;  // involved vertex indices (0-based)
    std::vector<int> edges;     // involved edge indices into Graph::edges()
    std::vector<int> colors;    // involved colors
};

// The first violated constraint in a fixed scan order (vertices by index,
// then edges lexicographically; properness, then the interval condition,
// then color coverage), so a failing input always yields the same report.
struct VerificationReport {
    std::optional<Violation> violation;

    bool ok() const { return !violation.has_value(); }
};

// Properness only: adjacent vertices differ, edges sharing an endpoint
// differ, every edge differs from both endpoints, all colors in [1,t].
VerificationReport verify_total_proper(const Graph& g, const TotalColoring& c);

// Properness + every color 1..t used somewhere + S[v] is an interval for
// every vertex. After properness holds, |S[v]| = d(v)+1 with all members
// distinct, so the interval condition is exactly max(S[v]) - min(S[v]) = d(v).
VerificationReport verify_interval_total(const Graph& g, const TotalColoring& c);

// Edge version: proper edge coloring, all colors 1..t used, S(v) an interval
// (max - min = d(v)-1) at every vertex of positive degree.
VerificationReport verify_interval_edge(const Graph& g, const EdgeColoring& c);

// S[v,c]: the colors on the edges at v together with v's own color, sorted.
std::vector<int> palette_of(const Graph& g, const TotalColoring& c, int v);

// S(v,c): the colors on the edges at v, sorted.
std::vector<int> edge_palette_of(const Graph& g, const EdgeColoring& c, int v);

// Coloring JSON: {"t":int, "vertex_colors":[int,...],
//                 "edge_colors":[{"u":int,"v":int,"c":int},...]}
// with 1-based vertex ids; edge coloring JSON omits "vertex_colors".
nlohmann::json to_json(const Graph& g, const TotalColoring& c);
nlohmann::json to_json(const Graph& g, const EdgeColoring& c);
TotalColoring total_coloring_from_json(const Graph& g, const nlohmann::json& j);
EdgeColoring edge_coloring_from_json(const Graph& g, const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& report);

}  // namespace itc
