#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace itc {

// Undirected edge, always stored with u < v (0-based vertex indices).
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Part/position metadata for generated complete multipartite graphs.
// Follows the usual 1-based convention: part in [1,r], pos in [1,n_i].
struct MultipartiteLabel {
    int part = 0;
    int pos = 0;

    friend bool operator==(const MultipartiteLabel&, const MultipartiteLabel&) = default;
};

// Coordinate view of a hypercube vertex. Coordinate 1 is the most significant
// bit, so a vertex index equals the integer value of its coordinate vector.
struct HypercubeLabel {
    std::uint32_t coords = 0;
    int dims = 0;

    bool coord(int k) const { return (coords >> (dims - k)) & 1u; }
};

struct IncidentEdge {
    int neighbor = 0;
    int edge = 0;  // index into Graph::edges()
};

// Immutable simple undirected graph. The edge list is kept sorted
// lexicographically; that single ordering fixes every scan order downstream
// (verifier reports, serialization, search), so identical inputs always
// produce identical outputs.
class Graph {
public:
    Graph() = default;

    // Validates and normalizes: rejects loops, out-of-range endpoints and
    // duplicate edges; sorts the edge list.
    static Graph from_edges(int n_vertices, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int element_count() const { return n_ + edge_count(); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<IncidentEdge>& incident(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    int find_edge(int u, int v) const;  // -1 when absent
    bool adjacent(int u, int v) const { return find_edge(u, v) >= 0; }

    bool is_multipartite() const { return parts_ > 0; }
    int part_count() const { return parts_; }
    const std::vector<MultipartiteLabel>& part_labels() const { return labels_; }

    bool is_hypercube() const { return cube_dims_ > 0; }
    int cube_dimensions() const { return cube_dims_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void build_adjacency();

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<IncidentEdge>> adj_;
    std::vector<MultipartiteLabel> labels_;
    int parts_ = 0;
    int cube_dims_ = 0;

    friend Graph complete_bipartite(int m, int n);
    friend Graph complete_balanced_multipartite(int r, int n);
    friend Graph hypercube(int n);
};

// K_{m,n}: vertices 0..m-1 form part 1, m..m+n-1 form part 2.
Graph complete_bipartite(int m, int n);

// K_{n,...,n} with r parts: vertex order is part-major, position-minor.
Graph complete_balanced_multipartite(int r, int n);

// Q_n: 2^n vertices indexed by coordinate value, adjacency = Hamming distance 1.
Graph hypercube(int n);

HypercubeLabel cube_label(const Graph& g, int v);

struct HypercubeSplit {
    Graph low;                // induced on first coordinate 0, equal to Q_n
    Graph high;               // induced on first coordinate 1, relabeled to Q_n
    std::vector<Edge> cross;  // the perfect matching {(0,a),(1,a)}, in Q_{n+1} indices
};

// Splits Q_{n+1} along its first coordinate. Because vertex indices are the
// coordinate values with coordinate 1 most significant, the split is the
// contiguous index ranges [0,2^n) and [2^n,2^{n+1}).
HypercubeSplit split_hypercube(const Graph& g);

// Edge-list text format: header "p <n_vertices> <n_edges>", then one
// "e <u> <v>" line per edge, vertices 1-based. Lines starting with 'c' are
// ignored on input and never emitted.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
void write_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list(const Graph& g);

// Short human-readable name: "K_{2,4}", "Q_3", "G(n=7,m=12)".
std::string describe(const Graph& g);

}  // namespace itc
