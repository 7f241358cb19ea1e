#include "itc/dot.hpp"

#include <sstream>

namespace itc {

namespace {

std::string render(const Graph& g, const std::vector<int>* vertex_colors, const std::vector<int>* edge_colors) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v + 1;
        if (vertex_colors) out << " [label=\"" << (*vertex_colors)[v] << "\"]";
        out << ";\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        out << "  " << g.edge(e).u + 1 << " -- " << g.edge(e).v + 1;
        if (edge_colors) out << " [label=\"" << (*edge_colors)[e] << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace

std::string to_dot(const Graph& g) { return render(g, nullptr, nullptr); }

std::string to_dot(const Graph& g, const TotalColoring& c) {
    return render(g, &c.vertex_colors, &c.edge_colors);
}

std::string to_dot(const Graph& g, const EdgeColoring& c) { return render(g, nullptr, &c.edge_colors); }

}  // namespace itc
