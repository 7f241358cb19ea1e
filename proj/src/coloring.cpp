#include "itc/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace itc {

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::adjacent_vertices: return "adjacent-vertices";
        case ViolationKind::adjacent_edges: return "adjacent-edges";
        case ViolationKind::incident_vertex_edge: return "incident-vertex-edge";
        case ViolationKind::missing_color: return "missing-color";
        case ViolationKind::not_interval: return "not-interval";
        case ViolationKind::out_of_range: return "out-of-range";
    }
    return "unknown";
}

namespace {

VerificationReport fail(Violation v) { return VerificationReport{std::move(v)}; }

void check_total_shape(const Graph& g, const TotalColoring& c) {
    if (c.t < 1) throw std::invalid_argument("coloring: t must be >= 1");
    if (static_cast<int>(c.vertex_colors.size()) != g.vertex_count())
        throw std::invalid_argument("coloring/graph mismatch: vertex color count");
    if (static_cast<int>(c.edge_colors.size()) != g.edge_count())
        throw std::invalid_argument("coloring/graph mismatch: edge color count");
}

void check_edge_shape(const Graph& g, const EdgeColoring& c) {
    if (c.t < 1) throw std::invalid_argument("coloring: t must be >= 1");
    if (static_cast<int>(c.edge_colors.size()) != g.edge_count())
        throw std::invalid_argument("coloring/graph mismatch: edge color count");
}

std::optional<Violation> first_missing_color(int t, const std::vector<char>& used) {
    for (int c = 1; c <= t; ++c)
        if (!used[c]) return Violation{ViolationKind::missing_color, {}, {}, {c}};
    return std::nullopt;
}

}  // namespace

VerificationReport verify_total_proper(const Graph& g, const TotalColoring& c) {
    check_total_shape(g, c);

    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.vertex_colors[v] < 1 || c.vertex_colors[v] > c.t)
            return fail({ViolationKind::out_of_range, {v}, {}, {c.vertex_colors[v]}});
    for (int e = 0; e < g.edge_count(); ++e)
        if (c.edge_colors[e] < 1 || c.edge_colors[e] > c.t)
            return fail({ViolationKind::out_of_range, {}, {e}, {c.edge_colors[e]}});

    for (int v = 0; v < g.vertex_count(); ++v)
        for (const IncidentEdge& ie : g.incident(v))
            if (ie.neighbor > v && c.vertex_colors[v] == c.vertex_colors[ie.neighbor])
                return fail({ViolationKind::adjacent_vertices, {v, ie.neighbor}, {}, {c.vertex_colors[v]}});

    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                if (c.edge_colors[inc[a].edge] == c.edge_colors[inc[b].edge])
                    return fail({ViolationKind::adjacent_edges,
                                 {v},
                                 {inc[a].edge, inc[b].edge},
                                 {c.edge_colors[inc[a].edge]}});
    }

    for (int v = 0; v < g.vertex_count(); ++v)
        for (const IncidentEdge& ie : g.incident(v))
            if (c.vertex_colors[v] == c.edge_colors[ie.edge])
                return fail({ViolationKind::incident_vertex_edge, {v}, {ie.edge}, {c.vertex_colors[v]}});

    return {};
}

VerificationReport verify_interval_total(const Graph& g, const TotalColoring& c) {
    VerificationReport proper = verify_total_proper(g, c);
    if (!proper.ok()) return proper;

    for (int v = 0; v < g.vertex_count(); ++v) {
        int lo = c.vertex_colors[v], hi = c.vertex_colors[v];
        for (const IncidentEdge& ie : g.incident(v)) {
            lo = std::min(lo, c.edge_colors[ie.edge]);
            hi = std::max(hi, c.edge_colors[ie.edge]);
        }
        if (hi - lo != g.degree(v))
            return fail({ViolationKind::not_interval, {v}, {}, palette_of(g, c, v)});
    }

    std::vector<char> used(c.t + 1, 0);
    for (int col : c.vertex_colors) used[col] = 1;
    for (int col : c.edge_colors) used[col] = 1;
    if (auto missing = first_missing_color(c.t, used)) return fail(std::move(*missing));
    return {};
}

VerificationReport verify_interval_edge(const Graph& g, const EdgeColoring& c) {
    check_edge_shape(g, c);

    for (int e = 0; e < g.edge_count(); ++e)
        if (c.edge_colors[e] < 1 || c.edge_colors[e] > c.t)
            return fail({ViolationKind::out_of_range, {}, {e}, {c.edge_colors[e]}});

    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                if (c.edge_colors[inc[a].edge] == c.edge_colors[inc[b].edge])
                    return fail({ViolationKind::adjacent_edges,
                                 {v},
                                 {inc[a].edge, inc[b].edge},
                                 {c.edge_colors[inc[a].edge]}});
    }

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) continue;
        int lo = c.t + 1, hi = 0;
        for (const IncidentEdge& ie : g.incident(v)) {
            lo = std::min(lo, c.edge_colors[ie.edge]);
            hi = std::max(hi, c.edge_colors[ie.edge]);
        }
        if (hi - lo != g.degree(v) - 1)
            return fail({ViolationKind::not_interval, {v}, {}, edge_palette_of(g, c, v)});
    }

    std::vector<char> used(c.t + 1, 0);
    for (int col : c.edge_colors) used[col] = 1;
    if (auto missing = first_missing_color(c.t, used)) return fail(std::move(*missing));
    return {};
}

std::vector<int> palette_of(const Graph& g, const TotalColoring& c, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("palette_of: vertex out of range");
    check_total_shape(g, c);
    std::vector<int> palette{c.vertex_colors[v]};
    for (const IncidentEdge& ie : g.incident(v)) palette.push_back(c.edge_colors[ie.edge]);
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    return palette;
}

std::vector<int> edge_palette_of(const Graph& g, const EdgeColoring& c, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("edge_palette_of: vertex out of range");
    check_edge_shape(g, c);
    std::vector<int> palette;
    for (const IncidentEdge& ie : g.incident(v)) palette.push_back(c.edge_colors[ie.edge]);
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    return palette;
}

namespace {

nlohmann::json edge_colors_json(const Graph& g, const std::vector<int>& edge_colors) {
    nlohmann::json arr = nlohmann::json::array();
    for (int e = 0; e < g.edge_count(); ++e)
        arr.push_back({{"u", g.edge(e).u + 1}, {"v", g.edge(e).v + 1}, {"c", edge_colors[e]}});
    return arr;
}

std::vector<int> edge_colors_from_json(const Graph& g, const nlohmann::json& j) {
    if (!j.contains("edge_colors") || !j["edge_colors"].is_array())
        throw std::invalid_argument("coloring json: missing edge_colors array");
    std::vector<int> colors(g.edge_count(), 0);
    std::vector<char> seen(g.edge_count(), 0);
    for (const auto& entry : j["edge_colors"]) {
        int u = entry.at("u").get<int>() - 1;
        int v = entry.at("v").get<int>() - 1;
        int e = g.find_edge(u, v);
        if (e < 0) throw std::invalid_argument("coloring json: edge not present in graph");
        if (seen[e]) throw std::invalid_argument("coloring json: duplicate edge entry");
        seen[e] = 1;
        colors[e] = entry.at("c").get<int>();
    }
    if (static_cast<int>(j["edge_colors"].size()) != g.edge_count())
        throw std::invalid_argument("coloring json: edge color count mismatch");
    return colors;
}

}  // namespace

nlohmann::json to_json(const Graph& g, const TotalColoring& c) {
    check_total_shape(g, c);
    return {{"t", c.t}, {"vertex_colors", c.vertex_colors}, {"edge_colors", edge_colors_json(g, c.edge_colors)}};
}

nlohmann::json to_json(const Graph& g, const EdgeColoring& c) {
    check_edge_shape(g, c);
    return {{"t", c.t}, {"edge_colors", edge_colors_json(g, c.edge_colors)}};
}

TotalColoring total_coloring_from_json(const Graph& g, const nlohmann::json& j) {
    TotalColoring c;
    c.t = j.at("t").get<int>();
    c.vertex_colors = j.at("vertex_colors").get<std::vector<int>>();
    if (static_cast<int>(c.vertex_colors.size()) != g.vertex_count())
        throw std::invalid_argument("coloring json: vertex color count mismatch");
    c.edge_colors = edge_colors_from_json(g, j);
    return c;
}

EdgeColoring edge_coloring_from_json(const Graph& g, const nlohmann::json& j) {
    EdgeColoring c;
    c.t = j.at("t").get<int>();
    c.edge_colors = edge_colors_from_json(g, j);
    return c;
}

nlohmann::json to_json(const VerificationReport& report) {
    if (report.ok()) return {{"ok", true}};
    const Violation& v = *report.violation;
    nlohmann::json out{{"ok", false}, {"kind", std::string(to_string(v.kind))}};
    nlohmann::json verts = nlohmann::json::array();
    for (int x : v.vertices) verts.push_back(x + 1);
    out["vertices"] = verts;
    out["edges"] = v.edges;
    out["colors"] = v.colors;
    return out;
}

}  // namespace itc
