#include "itc/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>

namespace itc {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t interval_mask(int lo, int hi) {
    // colors lo..hi as bits lo-1..hi-1
    std::uint64_t high = hi >= 64 ? ~0ull : (1ull << hi) - 1;
    return high & ~((1ull << (lo - 1)) - 1);
}

// Vertices with identical neighborhoods (ignoring a possible mutual edge)
// are swappable by an automorphism; chains of them admit ordered starts.
std::vector<int> twin_predecessors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> keys(n);
    for (int v = 0; v < n; ++v) {
        for (const IncidentEdge& ie : g.incident(v)) keys[v].push_back(ie.neighbor);
    }
    std::vector<int> prev(n, -1);
    for (int v = 0; v < n; ++v) {
        for (int u = v - 1; u >= 0; --u) {
            bool adjacent = g.adjacent(u, v);
            std::vector<int> ku = keys[u], kv = keys[v];
            if (adjacent) {
                std::erase(ku, v);
                std::erase(kv, u);
            }
            if (ku == kv) {
                prev[v] = u;
                break;
            }
        }
    }
    return prev;
}

class IntervalSolver {
public:
    IntervalSolver(const Graph& g, int t, const SearchConfig& cfg)
        : g_(g), t_(t), cfg_(cfg), n_(g.vertex_count()), m_(g.edge_count()) {
        elems_ = n_ + m_;
        full_mask_ = interval_mask(1, t_);
        if (cfg_.node_limit > 0) node_limit_ = cfg_.node_limit;
        if (cfg_.time_budget_seconds > 0) {
            deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(cfg_.time_budget_seconds));
            has_deadline_ = true;
        }

        starts_.assign(n_, 0);
        if (cfg_.twin_symmetry) twin_prev_ = twin_predecessors(g_);

        // Conflict lists over elements: 0..n-1 vertices, n..n+m-1 edges.
        conflicts_.assign(elems_, {});
        group_.assign(n_, {});
        for (int v = 0; v < n_; ++v) {
            group_[v].push_back(v);
            for (const IncidentEdge& ie : g_.incident(v)) {
                conflicts_[v].push_back(ie.neighbor);
                conflicts_[v].push_back(n_ + ie.edge);
                group_[v].push_back(n_ + ie.edge);
            }
        }
        for (int e = 0; e < m_; ++e) {
            int x = n_ + e;
            int u = g_.edge(e).u, v = g_.edge(e).v;
            conflicts_[x].push_back(u);
            conflicts_[x].push_back(v);
            for (const IncidentEdge& ie : g_.incident(u))
                if (ie.edge != e) conflicts_[x].push_back(n_ + ie.edge);
            for (const IncidentEdge& ie : g_.incident(v))
                if (ie.edge != e) conflicts_[x].push_back(n_ + ie.edge);
        }

        dom_.assign(elems_, 0);
        assigned_.assign(elems_, 0);

        // 2-color the graph if possible; enables the per-side counting prune.
        side_.assign(n_, -1);
        bipartite_ = true;
        for (int root = 0; root < n_ && bipartite_; ++root) {
            if (side_[root] >= 0) continue;
            side_[root] = 0;
            std::vector<int> queue{root};
            for (std::size_t head = 0; head < queue.size() && bipartite_; ++head) {
                int u = queue[head];
                for (const IncidentEdge& ie : g_.incident(u)) {
                    if (side_[ie.neighbor] < 0) {
                        side_[ie.neighbor] = 1 - side_[u];
                        queue.push_back(ie.neighbor);
                    } else if (side_[ie.neighbor] == side_[u]) {
                        bipartite_ = false;
                        break;
                    }
                }
            }
        }
        match_.assign(n_, -1);
        seen_.assign(n_, 0);
    }

    SearchOutcome solve() {
        auto t0 = Clock::now();
        SearchOutcome out;
        bool found = n_ > 0 && enumerate_starts(0, cfg_.color_reversal_symmetry);
        out.stats.nodes = nodes_;
        out.stats.start_vectors = start_vectors_;
        out.stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (found) {
            out.status = SearchStatus::sat;
            out.witness = std::move(witness_);
        } else {
            out.status = aborted_ ? SearchStatus::timeout : SearchStatus::unsat;
        }
        return out;
    }

private:
    bool budget_spent() {
        if (aborted_) return true;
        if (node_limit_ && nodes_ >= node_limit_) aborted_ = true;
        if (has_deadline_ && (nodes_ & 1023) == 0 && Clock::now() >= deadline_) aborted_ = true;
        return aborted_;
    }

    // Phase 1: depth-first assignment of interval starts, vertices in index
    // order, values ascending. `balanced` tracks whether the prefix equals
    // its color reversal, the lex tie-break that halves the space.
    bool enumerate_starts(int v, bool balanced) {
        if (v == n_) return starts_complete();
        int d = g_.degree(v);
        int max_start = t_ - d;
        for (int s = 1; s <= max_start; ++s) {
            ++nodes_;
            if (budget_spent()) return false;
            if (balanced && 2 * s > t_ + 1 - d) break;  // reversed image is lex-smaller
            bool ok = true;
            for (const IncidentEdge& ie : g_.incident(v)) {
                if (ie.neighbor > v) continue;
                int su = starts_[ie.neighbor], du = g_.degree(ie.neighbor);
                if (s > su + du || su > s + d) {  // edge domain would be empty
                    ok = false;
                    break;
                }
            }
            if (ok && !twin_prev_.empty() && twin_prev_[v] >= 0 && s < starts_[twin_prev_[v]]) ok = false;
            if (ok) {
                starts_[v] = s;
                if (enumerate_starts(v + 1, balanced && 2 * s == t_ + 1 - d)) return true;
                if (aborted_) return false;
            }
        }
        return false;
    }

    bool starts_complete() {
        std::uint64_t covered = 0;
        for (int v = 0; v < n_; ++v) covered |= interval_mask(starts_[v], starts_[v] + g_.degree(v));
        if (covered != full_mask_) return false;

        ++start_vectors_;
        for (int v = 0; v < n_; ++v) dom_[v] = interval_mask(starts_[v], starts_[v] + g_.degree(v));
        for (int e = 0; e < m_; ++e) dom_[n_ + e] = dom_[g_.edge(e).u] & dom_[g_.edge(e).v];
        std::fill(assigned_.begin(), assigned_.end(), 0);
        trail_.clear();
        assign_trail_.clear();

        if (!propagate()) return false;
        if (bipartite_ && !counting_feasible()) return false;
        return extend();
    }

    // Maximum matching (Kuhn) among the edges that can still take color bit;
    // assigned edges of that color participate, other assignments drop out
    // because their domains are singletons.
    int max_matching_for_color(std::uint64_t bit) {
        color_adj_.assign(n_, {});
        for (int e = 0; e < m_; ++e) {
            if (!(dom_[n_ + e] & bit)) continue;
            int a = g_.edge(e).u, b = g_.edge(e).v;
            if (side_[a] == 1) std::swap(a, b);
            color_adj_[a].push_back(b);
        }
        std::fill(match_.begin(), match_.end(), -1);
        int size = 0, stamp = 0;
        std::fill(seen_.begin(), seen_.end(), 0);
        auto augment = [&](auto&& self, int a) -> bool {
            for (int b : color_adj_[a]) {
                if (seen_[b] == stamp) continue;
                seen_[b] = stamp;
                if (match_[b] < 0 || self(self, match_[b])) {
                    match_[b] = a;
                    return true;
                }
            }
            return false;
        };
        for (int a = 0; a < n_; ++a) {
            if (side_[a] != 0 || color_adj_[a].empty()) continue;
            ++stamp;
            if (augment(augment, a)) ++size;
        }
        return size;
    }

    // Per-side counting argument: in a bipartite graph, the edges of one
    // color form a matching and cover at most that many groups per side, so
    // every remaining group of the side must be covered by its own vertex
    // color. A vertex takes one color, so the summed deficits per side cannot
    // exceed the side's unassigned vertices.
    bool counting_feasible() {
        int unassigned[2] = {0, 0};
        for (int v = 0; v < n_; ++v)
            if (!assigned_[v]) unassigned[side_[v]]++;
        long long deficit_sum[2] = {0, 0};
        for (int c = 1; c <= t_; ++c) {
            std::uint64_t bit = 1ull << (c - 1);
            int need[2] = {0, 0};
            for (int v = 0; v < n_; ++v) {
                if (!(interval_mask(starts_[v], starts_[v] + g_.degree(v)) & bit)) continue;
                bool satisfied = false;
                for (int x : group_[v])
                    if (assigned_[x] == c) {
                        satisfied = true;
                        break;
                    }
                if (!satisfied) need[side_[v]]++;
            }
            if (!need[0] && !need[1]) continue;
            int matched = max_matching_for_color(bit);
            for (int s = 0; s < 2; ++s) {
                long long deficit = need[s] - matched;
                if (deficit <= 0) continue;
                int avail = 0;
                for (int v = 0; v < n_; ++v)
                    if (!assigned_[v] && side_[v] == s && (dom_[v] & bit)) ++avail;
                if (deficit > avail) return false;
                deficit_sum[s] += deficit;
            }
        }
        return deficit_sum[0] <= unassigned[0] && deficit_sum[1] <= unassigned[1];
    }

    bool assign(int x, int c) {
        assign_trail_.push_back(x);
        assigned_[x] = c;
        std::uint64_t bit = 1ull << (c - 1);
        trail_.emplace_back(x, dom_[x]);
        dom_[x] = bit;
        for (int y : conflicts_[x]) {
            if (assigned_[y] || !(dom_[y] & bit)) continue;
            trail_.emplace_back(y, dom_[y]);
            dom_[y] &= ~bit;
            if (!dom_[y]) return false;
        }
        return true;
    }

    // Per-vertex exact-cover propagation: every color of a vertex interval
    // must keep at least one supporting element among the vertex and its
    // incident edges; a unique unassigned supporter is forced.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < n_; ++v) {
                std::uint64_t want = interval_mask(starts_[v], starts_[v] + g_.degree(v));
                while (want) {
                    int c = std::countr_zero(want) + 1;
                    want &= want - 1;
                    int supporter = -1;
                    int count = 0;
                    std::uint64_t bit = 1ull << (c - 1);
                    for (int x : group_[v]) {
                        if (assigned_[x] == c) {
                            count = 2;
                            break;
                        }
                        if (!assigned_[x] && (dom_[x] & bit)) {
                            ++count;
                            supporter = x;
                            if (count > 1) break;
                        }
                    }
                    if (count == 0) return false;
                    if (count == 1) {
                        if (!assign(supporter, c)) return false;
                        changed = true;
                    }
                }
            }
        }
        return true;
    }

    bool extend() {
        int best = -1, best_size = 65;
        for (int x = 0; x < elems_; ++x) {
            if (assigned_[x]) continue;
            int size = std::popcount(dom_[x]);
            if (size < best_size) {
                best_size = size;
                best = x;
                if (size <= 1) break;
            }
        }
        if (best < 0) return emit_witness();

        std::uint64_t options = dom_[best];
        while (options) {
            int c = std::countr_zero(options) + 1;
            options &= options - 1;
            ++nodes_;
            if (budget_spent()) return false;
            std::size_t mark = trail_.size();
            std::size_t amark = assign_trail_.size();
            if (assign(best, c) && propagate() && extend()) return true;
            if (aborted_) return false;
            while (trail_.size() > mark) {
                dom_[trail_.back().first] = trail_.back().second;
                trail_.pop_back();
            }
            while (assign_trail_.size() > amark) {
                assigned_[assign_trail_.back()] = 0;
                assign_trail_.pop_back();
            }
        }
        return false;
    }

    bool emit_witness() {
        TotalColoring c;
        c.t = t_;
        c.vertex_colors.assign(assigned_.begin(), assigned_.begin() + n_);
        c.edge_colors.assign(assigned_.begin() + n_, assigned_.end());
        if (!verify_interval_total(g_, c).ok())
            throw std::logic_error("interval search: witness failed re-verification");
        witness_ = std::move(c);
        return true;
    }

    const Graph& g_;
    int t_;
    SearchConfig cfg_;
    int n_, m_, elems_;
    std::uint64_t full_mask_ = 0;

    std::vector<int> starts_;
    std::vector<int> twin_prev_;
    std::vector<std::vector<int>> conflicts_;
    std::vector<std::vector<int>> group_;
    std::vector<std::uint64_t> dom_;
    std::vector<int> assigned_;
    std::vector<std::pair<int, std::uint64_t>> trail_;
    std::vector<int> assign_trail_;

    std::vector<int> side_;
    bool bipartite_ = false;
    std::vector<std::vector<int>> color_adj_;
    std::vector<int> match_;
    std::vector<int> seen_;

    long long nodes_ = 0, start_vectors_ = 0;
    long long node_limit_ = 0;
    Clock::time_point deadline_{};
    bool has_deadline_ = false;
    bool aborted_ = false;
    std::optional<TotalColoring> witness_;
};

SpanResult span_skeleton(const Graph& g) {
    SpanResult r;
    r.graph_name = describe(g);
    r.n_vertices = g.vertex_count();
    r.n_edges = g.edge_count();
    return r;
}

}  // namespace

SearchOutcome decide_interval_total(const Graph& g, int t, const SearchConfig& cfg) {
    if (t < 1) throw std::invalid_argument("decide_interval_total: need t >= 1");
    if (t > 64) throw std::invalid_argument("decide_interval_total: t > 64 unsupported");
    SearchOutcome out;
    if (g.vertex_count() == 0 || t < g.max_degree() + 1) {
        // Fewer colors than any palette needs (|S[v]| = d(v)+1), or nothing
        // to cover color 1 with.
        out.status = SearchStatus::unsat;
        return out;
    }
    return IntervalSolver(g, t, cfg).solve();
}

SpanResult min_span(const Graph& g, const SearchConfig& cfg) {
    SpanResult r = span_skeleton(g);
    int lo = g.max_degree() + 1;
    int hi = g.element_count();
    for (int t = lo; t <= hi; ++t) {
        SearchOutcome out = decide_interval_total(g, t, cfg);
        r.w_tau.lower = t;
        r.w_tau.lower_ref = "search";
        if (out.status == SearchStatus::sat) {
            r.w_tau.upper = t;
            r.w_tau.upper_ref = "search";
            return r;
        }
        if (out.status == SearchStatus::timeout) {
            r.w_tau.lower_ref = "search:budget";
            r.note = "budget exhausted at t=" + std::to_string(t);
            return r;
        }
    }
    r.w_tau = {};
    r.note = "no interval total coloring exists";
    return r;
}

SpanResult max_span(const Graph& g, const SearchConfig& cfg) {
    SpanResult r = span_skeleton(g);
    int lo = g.max_degree() + 1;
    int hi = g.element_count();
    for (int t = hi; t >= lo; --t) {
        SearchOutcome out = decide_interval_total(g, t, cfg);
        r.W_tau.upper = t;
        r.W_tau.upper_ref = "search";
        if (out.status == SearchStatus::sat) {
            r.W_tau.lower = t;
            r.W_tau.lower_ref = "search";
            return r;
        }
        if (out.status == SearchStatus::timeout) {
            r.W_tau.upper_ref = "search:budget";
            r.note = "budget exhausted at t=" + std::to_string(t);
            return r;
        }
    }
    r.W_tau = {};
    r.note = "no interval total coloring exists";
    return r;
}

SpectrumResult spectrum(const Graph& g, const SearchConfig& cfg) {
    SpectrumResult result;
    int lo = g.max_degree() + 1;
    int hi = g.element_count();
    for (int t = lo; t <= hi; ++t) {
        SearchOutcome out = decide_interval_total(g, t, cfg);
        result.stats.nodes += out.stats.nodes;
        result.stats.start_vectors += out.stats.start_vectors;
        result.stats.seconds += out.stats.seconds;
        if (out.status == SearchStatus::sat) result.feasible.push_back(t);
        if (out.status == SearchStatus::timeout) result.complete = false;
    }
    return result;
}

}  // namespace itc
