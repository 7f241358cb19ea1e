#pragma once

#include <vector>

#include "itc/coloring.hpp"
#include "itc/graph.hpp"

namespace itc {

struct SearchConfig;

// Helpers that map flat 1-based indices into (block, within-block) pairs:
// f1 picks the position inside a block of size n, f2 the block number, so
// j = n*f2(j) + f1(j) for every j >= 1.
int block_pos(int i, int n);    // 1 + (i-1) mod n
int block_index(int j, int n);  // floor((j-1)/n)

// Proper edge n-coloring of K_{n,n} with S(v) = [1,n] at every vertex:
// color(i,j) = (i+j-1) mod n when i+j != n+1, and n otherwise (1-based i,j).
EdgeColoring alpha_knn(int n);

// Interval total (n+2)-coloring of K_{n,n}: one part gets vertex color 1, the
// other n+2, and the edges carry alpha_knn shifted up by one, giving palettes
// [1,n+1] and [2,n+2].
TotalColoring knn_base_coloring(int n);

// Interval total (n*l+1)-coloring of K_{n,n*l} for l >= 2, built from
// alpha_knn shifted block by block; l = 1 falls back to knn_base_coloring.
TotalColoring theorem8_coloring(int n, int l);

// Offset schedule for the cross-part edges of a complete balanced graph with
// an even number of parts: eight index-range families that partition all part
// pairs 1 <= i < j <= parts. Returns the offset multiplier for (i,j).
int cross_part_offset(int parts, int i, int j);
// Family ids (1..8) matching (i,j); used to assert the partition property.
std::vector<int> cross_part_families(int parts, int i, int j);

// Same idea for the 2r blocks of the K_{2r} - F decomposition (n even case):
// pairs with j - i = r carry no edges and match no family.
int cross_block_offset(int r, int i, int j);
std::vector<int> cross_block_families(int r, int i, int j);

// Interval total ((3/2)r-2)n+2 coloring of K_{n,...,n} for even r >= 4 and
// odd n; r = 2 falls back to knn_base_coloring. Other parities are rejected.
TotalColoring theorem10_coloring(int r, int n);

// Interval total ((3/2)r-1)n+1 coloring of K_{n,...,n} for even r >= 2.
TotalColoring theorem11_case1_coloring(int r, int n);

// Interval total ((3/2)r-1)n+1 coloring of K_{n,...,n} for even n >= 2 and
// any r >= 2, via the K_{2r} - F block decomposition with blocks of size n/2.
TotalColoring theorem11_case2_coloring(int r, int n);

// Lifts an interval total t-coloring of Q_n to an interval edge t-coloring of
// Q_{n+1}: edges inside either copy inherit the edge colors, the matching
// edges between copies inherit the vertex colors.
EdgeColoring theorem12_lift(const Graph& qn, const TotalColoring& phi);

// Interval total t-coloring of Q_n found by exact search; valid t range is
// [w(Q_n), (n+1)(n+2)/2]. Guaranteed practical for n <= 3, best effort above.
TotalColoring hypercube_total_coloring(int n, int t, const SearchConfig& cfg);
TotalColoring hypercube_total_coloring(int n, int t);

}  // namespace itc
