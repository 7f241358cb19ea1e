#include "itc/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace itc {

void Graph::build_adjacency() {
    adj_.assign(n_, {});
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        adj_[edges_[e].u].push_back({edges_[e].v, e});
        adj_[edges_[e].v].push_back({edges_[e].u, e});
    }
    for (auto& list : adj_)
        std::sort(list.begin(), list.end(),
                  [](const IncidentEdge& a, const IncidentEdge& b) { return a.neighbor < b.neighbor; });
}

Graph Graph::from_edges(int n_vertices, std::vector<Edge> edges) {
    if (n_vertices < 0) throw std::invalid_argument("negative vertex count");
    for (auto& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v) throw std::invalid_argument("loop edge rejected");
        if (e.u < 0 || e.v >= n_vertices) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge rejected");

    Graph g;
    g.n_ = n_vertices;
    g.edges_ = std::move(edges);
    g.build_adjacency();
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::find_edge(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
    Edge key = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it != edges_.end() && *it == key) return static_cast<int>(it - edges_.begin());
    return -1;
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite: both part sizes must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.push_back({i, m + j});
    Graph g = Graph::from_edges(m + n, std::move(edges));
    g.parts_ = 2;
    g.labels_.resize(m + n);
    for (int i = 0; i < m; ++i) g.labels_[i] = {1, i + 1};
    for (int j = 0; j < n; ++j) g.labels_[m + j] = {2, j + 1};
    return g;
}

Graph complete_balanced_multipartite(int r, int n) {
    if (r < 2) throw std::invalid_argument("complete_balanced_multipartite: need r >= 2");
    if (n < 1) throw std::invalid_argument("complete_balanced_multipartite: need n >= 1");
    int total = r * n;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(total) * (total - n) / 2);
    for (int u = 0; u < total; ++u)
        for (int v = u + 1; v < total; ++v)
            if (u / n != v / n) edges.push_back({u, v});
    Graph g = Graph::from_edges(total, std::move(edges));
    g.parts_ = r;
    g.labels_.resize(total);
    for (int v = 0; v < total; ++v) g.labels_[v] = {v / n + 1, v % n + 1};
    return g;
}

Graph hypercube(int n) {
    if (n < 1) throw std::invalid_argument("hypercube: need n >= 1");
    if (n > 20) throw std::invalid_argument("hypercube: n too large");
    int total = 1 << n;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) << (n - 1));
    for (int v = 0; v < total; ++v)
        for (int b = 0; b < n; ++b)
            if (!(v >> b & 1)) edges.push_back({v, v | (1 << b)});
    Graph g = Graph::from_edges(total, std::move(edges));
    g.cube_dims_ = n;
    return g;
}

HypercubeLabel cube_label(const Graph& g, int v) {
    if (!g.is_hypercube()) throw std::invalid_argument("cube_label: not a generated hypercube");
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("cube_label: vertex out of range");
    return {static_cast<std::uint32_t>(v), g.cube_dimensions()};
}

HypercubeSplit split_hypercube(const Graph& g) {
    if (!g.is_hypercube()) throw std::invalid_argument("split_hypercube: not a generated hypercube");
    int dims = g.cube_dimensions();
    if (dims < 2) throw std::invalid_argument("split_hypercube: need at least 2 coordinates");

    int half = 1 << (dims - 1);
    HypercubeSplit split;
    split.low = hypercube(dims - 1);
    split.high = hypercube(dims - 1);
    split.cross.reserve(half);
    for (int v = 0; v < half; ++v) split.cross.push_back({v, v + half});
    return split;
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char tag = 0;
        ls >> tag;
        if (tag == 'p') {
            if (n >= 0) throw std::invalid_argument("edge list: duplicate 'p' header");
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw std::invalid_argument("edge list: malformed 'p' header at line " + std::to_string(line_no));
        } else if (tag == 'e') {
            if (n < 0) throw std::invalid_argument("edge list: 'e' before 'p' header");
            int u = 0, v = 0;
            if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
                throw std::invalid_argument("edge list: malformed 'e' line " + std::to_string(line_no));
            edges.push_back(make_edge(u - 1, v - 1));
        } else {
            throw std::invalid_argument("edge list: unknown tag at line " + std::to_string(line_no));
        }
    }
    if (n < 0) throw std::invalid_argument("edge list: missing 'p' header");
    if (static_cast<int>(edges.size()) != m)
        throw std::invalid_argument("edge list: header declares " + std::to_string(m) + " edges, found " +
                                    std::to_string(edges.size()));
    return Graph::from_edges(n, std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

std::string describe(const Graph& g) {
    std::ostringstream name;
    if (g.is_hypercube()) {
        name << "Q_" << g.cube_dimensions();
    } else if (g.is_multipartite()) {
        std::vector<int> sizes(g.part_count(), 0);
        for (const auto& lab : g.part_labels()) sizes[lab.part - 1]++;
        name << "K_{";
        for (int i = 0; i < static_cast<int>(sizes.size()); ++i) name << (i ? "," : "") << sizes[i];
        name << "}";
    } else {
        name << "G(n=" << g.vertex_count() << ",m=" << g.edge_count() << ")";
    }
    return name.str();
}

}  // namespace itc
