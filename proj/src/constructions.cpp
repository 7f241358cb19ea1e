#include "itc/constructions.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "itc/search.hpp"

namespace itc {

int block_pos(int i, int n) { return 1 + (i - 1) % n; }
int block_index(int j, int n) { return (j - 1) / n; }

namespace {

// (i+j-1) mod n with the i+j = n+1 cell patched to n. The residue is never 0
// in the unpatched branch: i+j = 1 (mod n) with 2 <= i+j <= 2n forces
// i+j = n+1.
int alpha_value(int i, int j, int n) {
    if (i + j == n + 1) return n;
    return (i + j - 1) % n;
}

// Within-block edge color for the balanced constructions, in [1, n+1].
int cyclic_block_value(int p, int q, int n) {
    if (p + q == n + 1) return n + 1;
    return 1 + (p + q - 1) % n;
}

struct OffsetFamily {
    bool (*matches)(int r, int i, int j);
    int (*offset)(int r, int i, int j);
};

// i < j ranges; r is the part count (even). Integer division is exact where
// r/2 appears and floors where r/4 or (r-2)/4 appears.
constexpr OffsetFamily kCrossPartFamilies[8] = {
    {[](int r, int i, int j) { return i <= r / 4 && j >= 2 && j <= r / 2 && i + j <= r / 2 + 1; },
     [](int, int i, int j) { return i + j - 3; }},
    {[](int r, int i, int j) { return i >= 2 && i <= r / 2 - 1 && j >= r / 4 + 2 && j <= r / 2 && i + j >= r / 2 + 2; },
     [](int r, int i, int j) { return i + j + r / 2 - 4; }},
    {[](int r, int i, int j) { return i >= 3 && i <= r / 2 && j >= r / 2 + 1 && j <= r - 2 && j - i <= r / 2 - 2; },
     [](int r, int i, int j) { return r / 2 + j - i - 1; }},
    {[](int r, int i, int j) { return i <= r / 2 && j >= r / 2 + 1 && j <= r && j - i >= r / 2; },
     [](int, int i, int j) { return j - i - 1; }},
    {[](int r, int i, int j) {
         return i >= 2 && i <= 1 + (r - 2) / 4 && j >= r / 2 + 1 && j <= r / 2 + (r - 2) / 4 && j - i == r / 2 - 1;
     },
     [](int, int i, int) { return 2 * i - 3; }},
    {[](int r, int i, int j) {
         return i >= (r - 2) / 4 + 2 && i <= r / 2 && j >= r / 2 + 1 + (r - 2) / 4 && j <= r - 1 && j - i == r / 2 - 1;
     },
     [](int, int i, int j) { return i + j - 3; }},
    {[](int r, int i, int j) {
         return i >= r / 2 + 1 && i <= r / 2 + r / 4 - 1 && j >= r / 2 + 2 && j <= r - 2 && i + j <= 3 * (r / 2) - 1;
     },
     [](int r, int i, int j) { return i + j - r - 1; }},
    {[](int r, int i, int j) {
         return i >= r / 2 + 1 && i <= r - 1 && j >= r / 2 + r / 4 + 1 && j <= r && i + j >= 3 * (r / 2);
     },
     [](int r, int i, int j) { return i + j - r / 2 - 2; }},
};

// Block-pair schedule on 2r blocks; pairs with j - i = r are the deleted
// perfect matching and match nothing. Here r may be odd, so r/2 and (r-1)/2
// are floor divisions.
constexpr OffsetFamily kCrossBlockFamilies[8] = {
    {[](int r, int i, int j) { return i <= r / 2 && j >= 2 && j <= r && i + j <= r + 1; },
     [](int, int i, int j) { return i + j - 3; }},
    {[](int r, int i, int j) { return i >= 2 && i <= r - 1 && j >= r / 2 + 2 && j <= r && i + j >= r + 2; },
     [](int r, int i, int j) { return i + j + r - 5; }},
    {[](int r, int i, int j) { return i >= 3 && i <= r && j >= r + 1 && j <= 2 * r - 2 && j - i <= r - 2; },
     [](int r, int i, int j) { return r + j - i - 2; }},
    {[](int r, int i, int j) { return i <= r - 1 && j >= r + 2 && j <= 2 * r && j - i >= r + 1; },
     [](int, int i, int j) { return j - i - 2; }},
    {[](int r, int i, int j) {
         return i >= 2 && i <= 1 + (r - 1) / 2 && j >= r + 1 && j <= r + (r - 1) / 2 && j - i == r - 1;
     },
     [](int, int i, int) { return 2 * i - 3; }},
    {[](int r, int i, int j) {
         return i >= (r - 1) / 2 + 2 && i <= r && j >= r + 1 + (r - 1) / 2 && j <= 2 * r - 1 && j - i == r - 1;
     },
     [](int, int i, int j) { return i + j - 4; }},
    {[](int r, int i, int j) {
         return i >= r + 1 && i <= r + r / 2 - 1 && j >= r + 2 && j <= 2 * r - 2 && i + j <= 3 * r - 1;
     },
     [](int r, int i, int j) { return i + j - 2 * r - 1; }},
    {[](int r, int i, int j) {
         return i >= r + 1 && i <= 2 * r - 1 && j >= r + r / 2 + 1 && j <= 2 * r && i + j >= 3 * r;
     },
     [](int r, int i, int j) { return i + j - r - 3; }},
};

std::vector<int> matching_families(const OffsetFamily (&families)[8], int r, int i, int j) {
    std::vector<int> out;
    for (int f = 0; f < 8; ++f)
        if (families[f].matches(r, i, j)) out.push_back(f + 1);
    return out;
}

int unique_offset(const OffsetFamily (&families)[8], int r, int i, int j, const char* what) {
    const OffsetFamily* found = nullptr;
    for (const OffsetFamily& fam : families) {
        if (!fam.matches(r, i, j)) continue;
        if (found) throw std::logic_error(std::string(what) + ": pair matched by two families");
        found = &fam;
    }
    if (!found) throw std::logic_error(std::string(what) + ": pair matched by no family");
    return found->offset(r, i, j);
}

// Part-constant vertex colors for theorem10_coloring. The r = 2 rules
// coincide pairwise, so dispatch order only matters for small r.
int part_vertex_base(int r, int n, int part) {
    if (part == 1) return 1;
    if (part == r) return (3 * (r / 2) - 2) * n + 2;
    if (part == 2) return (r - 1) * n + 2;
    if (part == r - 1) return (r / 2 - 1) * n + 1;
    if (part <= r / 2) return (part - 2) * n + 1;
    return (part + r / 2 - 1) * n + 2;
}

// Position-dependent vertex colors for theorem11_case1_coloring (add j).
int part_vertex_sliding(int r, int n, int part, int j) {
    if (part == 1) return j;
    if (part == r) return (3 * (r / 2) - 2) * n + 1 + j;
    if (part == 2) return (r - 1) * n + 1 + j;
    if (part == r - 1) return (r / 2 - 1) * n + j;
    if (part <= r / 2) return (part - 2) * n + j;
    return (part + r / 2 - 1) * n + 1 + j;
}

// Block vertex colors for theorem11_case2_coloring; blocks 1..2r of size m.
int block_vertex_color(int r, int m, int blk, int j) {
    if (blk == 1) return j;
    if (blk == 2 * r) return (3 * r - 3) * m + 1 + j;
    if (blk == 2) return (2 * r - 2) * m + 1 + j;
    if (blk == 2 * r - 1) return (r - 1) * m + j;
    if (blk <= r) return (blk - 2) * m + j;
    return (r + blk - 2) * m + 1 + j;
}

}  // namespace

EdgeColoring alpha_knn(int n) {
    if (n < 1) throw std::invalid_argument("alpha_knn: need n >= 1");
    Graph g = complete_bipartite(n, n);
    EdgeColoring c;
    c.t = n;
    c.edge_colors.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        int i = g.edge(e).u + 1;
        int j = g.edge(e).v - n + 1;
        c.edge_colors[e] = alpha_value(i, j, n);
    }
    return c;
}

TotalColoring knn_base_coloring(int n) {
    if (n < 1) throw std::invalid_argument("knn_base_coloring: need n >= 1");
    Graph g = complete_bipartite(n, n);
    TotalColoring c;
    c.t = n + 2;
    c.vertex_colors.resize(2 * n);
    for (int i = 0; i < n; ++i) c.vertex_colors[i] = 1;
    for (int j = 0; j < n; ++j) c.vertex_colors[n + j] = n + 2;
    c.edge_colors = alpha_knn(n).edge_colors;
    for (int& col : c.edge_colors) ++col;
    return c;
}

TotalColoring theorem8_coloring(int n, int l) {
    if (n < 1) throw std::invalid_argument("theorem8_coloring: need n >= 1");
    if (l < 1) throw std::invalid_argument("theorem8_coloring: need l >= 1");
    if (l == 1) return knn_base_coloring(n);

    Graph g = complete_bipartite(n, n * l);
    TotalColoring c;
    c.t = n * l + 1;
    c.vertex_colors.resize(g.vertex_count());
    for (int i = 1; i <= n; ++i) c.vertex_colors[i - 1] = n * l + 1;
    for (int j = 1; j <= n * l; ++j)
        c.vertex_colors[n + j - 1] = j <= n ? n + 1 : n * block_index(j, n);
    c.edge_colors.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        int i = g.edge(e).u + 1;
        int j = g.edge(e).v - n + 1;
        c.edge_colors[e] = alpha_value(block_pos(i, n), block_pos(j, n), n) + n * block_index(j, n);
    }
    return c;
}

int cross_part_offset(int parts, int i, int j) {
    return unique_offset(kCrossPartFamilies, parts, i, j, "cross_part_offset");
}

std::vector<int> cross_part_families(int parts, int i, int j) {
    return matching_families(kCrossPartFamilies, parts, i, j);
}

int cross_block_offset(int r, int i, int j) {
    return unique_offset(kCrossBlockFamilies, r, i, j, "cross_block_offset");
}

std::vector<int> cross_block_families(int r, int i, int j) {
    return matching_families(kCrossBlockFamilies, r, i, j);
}

TotalColoring theorem10_coloring(int r, int n) {
    if (r < 2 || n < 1) throw std::invalid_argument("theorem10_coloring: need r >= 2, n >= 1");
    if (r == 2) return knn_base_coloring(n);
    if (r % 2 != 0) throw std::domain_error("theorem10_coloring: r must be even");
    if (n % 2 == 0) throw std::domain_error("theorem10_coloring: n must be odd when r >= 4");

    Graph g = complete_balanced_multipartite(r, n);
    TotalColoring c;
    c.t = (3 * (r / 2) - 2) * n + 2;
    c.vertex_colors.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        c.vertex_colors[v] = part_vertex_base(r, n, g.part_labels()[v].part);
    c.edge_colors.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        MultipartiteLabel a = g.part_labels()[g.edge(e).u];
        MultipartiteLabel b = g.part_labels()[g.edge(e).v];
        if (a.part > b.part) std::swap(a, b);
        c.edge_colors[e] = cross_part_offset(r, a.part, b.part) * n + cyclic_block_value(a.pos, b.pos, n);
    }
    return c;
}

TotalColoring theorem11_case1_coloring(int r, int n) {
    if (r < 2 || n < 1) throw std::invalid_argument("theorem11_case1_coloring: need r >= 2, n >= 1");
    if (r % 2 != 0) throw std::domain_error("theorem11_case1_coloring: r must be even");

    Graph g = complete_balanced_multipartite(r, n);
    TotalColoring c;
    c.t = (3 * (r / 2) - 1) * n + 1;
    c.vertex_colors.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const MultipartiteLabel& lab = g.part_labels()[v];
        c.vertex_colors[v] = part_vertex_sliding(r, n, lab.part, lab.pos);
    }
    c.edge_colors.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        MultipartiteLabel a = g.part_labels()[g.edge(e).u];
        MultipartiteLabel b = g.part_labels()[g.edge(e).v];
        if (a.part > b.part) std::swap(a, b);
        c.edge_colors[e] = cross_part_offset(r, a.part, b.part) * n + a.pos + b.pos;
    }
    return c;
}

TotalColoring theorem11_case2_coloring(int r, int n) {
    if (r < 2 || n < 1) throw std::invalid_argument("theorem11_case2_coloring: need r >= 2, n >= 1");
    if (n % 2 != 0) throw std::domain_error("theorem11_case2_coloring: n must be even");

    int m = n / 2;
    Graph g = complete_balanced_multipartite(r, n);
    // Part i splits into blocks i (positions 1..m) and r+i (positions m+1..n);
    // the blocks and the sets of edges between them form K_{2r} minus the
    // perfect matching {block i, block r+i}.
    auto to_block = [&](const MultipartiteLabel& lab) {
        if (lab.pos <= m) return std::pair<int, int>{lab.part, lab.pos};
        return std::pair<int, int>{r + lab.part, lab.pos - m};
    };

    TotalColoring c;
    c.t = (3 * r - 2) * m + 1;
    c.vertex_colors.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto [blk, pos] = to_block(g.part_labels()[v]);
        c.vertex_colors[v] = block_vertex_color(r, m, blk, pos);
    }
    c.edge_colors.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [bi, pi] = to_block(g.part_labels()[g.edge(e).u]);
        auto [bj, pj] = to_block(g.part_labels()[g.edge(e).v]);
        if (bi > bj) {
            std::swap(bi, bj);
            std::swap(pi, pj);
        }
        c.edge_colors[e] = cross_block_offset(r, bi, bj) * m + pi + pj;
    }
    return c;
}

EdgeColoring theorem12_lift(const Graph& qn, const TotalColoring& phi) {
    if (!qn.is_hypercube()) throw std::invalid_argument("theorem12_lift: base graph must be a generated hypercube");
    VerificationReport report = verify_interval_total(qn, phi);
    if (!report.ok())
        throw std::invalid_argument("theorem12_lift: base coloring is not interval total (" +
                                    std::string(to_string(report.violation->kind)) + ")");

    int n = qn.cube_dimensions();
    Graph lifted = hypercube(n + 1);
    int half = 1 << n;
    EdgeColoring psi;
    psi.t = phi.t;
    psi.edge_colors.resize(lifted.edge_count());
    for (int e = 0; e < lifted.edge_count(); ++e) {
        int u = lifted.edge(e).u, v = lifted.edge(e).v;
        if (v < half) {
            psi.edge_colors[e] = phi.edge_colors[qn.find_edge(u, v)];
        } else if (u >= half) {
            psi.edge_colors[e] = phi.edge_colors[qn.find_edge(u - half, v - half)];
        } else {
            // v = u + half: the matching edge over base vertex u.
            psi.edge_colors[e] = phi.vertex_colors[u];
        }
    }
    return psi;
}

TotalColoring hypercube_total_coloring(int n, int t, const SearchConfig& cfg) {
    if (n < 1) throw std::invalid_argument("hypercube_total_coloring: need n >= 1");
    int w = n <= 2 ? n + 2 : n + 1;
    int w_max = (n + 1) * (n + 2) / 2;
    if (t < w || t > w_max)
        throw std::invalid_argument("hypercube_total_coloring: t outside [" + std::to_string(w) + "," +
                                    std::to_string(w_max) + "]");

    SearchOutcome outcome = decide_interval_total(hypercube(n), t, cfg);
    if (outcome.status == SearchStatus::timeout)
        throw budget_exhausted("hypercube_total_coloring: search budget exhausted");
    if (outcome.status != SearchStatus::sat)
        throw std::logic_error("hypercube_total_coloring: search refuted a feasible t");
    return *outcome.witness;
}

TotalColoring hypercube_total_coloring(int n, int t) {
    return hypercube_total_coloring(n, t, SearchConfig{});
}

}  // namespace itc
