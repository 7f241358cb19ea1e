#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "itc/bounds.hpp"
#include "itc/coloring.hpp"
#include "itc/graph.hpp"

namespace itc {

// Raised when a caller needs a definite answer but the budget ran out.
struct budget_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchConfig {
    double time_budget_seconds = 0.0;  // 0 = unlimited
    long long node_limit = 0;          // 0 = unlimited
    // Halves the space via the color reversal c -> t+1-c.
    bool color_reversal_symmetry = true;
    // Orders interval starts across twin vertices (equal neighborhoods, e.g.
    // positions inside one part of a multipartite graph). Off by default:
    // the plain ordering is the documented, auditable tree.
    bool twin_symmetry = false;
};

enum class SearchStatus { sat, unsat, timeout };

struct SearchStats {
    long long nodes = 0;          // decision nodes across both phases
    long long start_vectors = 0;  // interval-start assignments reaching phase 2
    double seconds = 0.0;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::timeout;
    std::optional<TotalColoring> witness;  // present iff status == sat
    SearchStats stats;
};

// Exact decision: does g admit an interval total t-coloring? The search
// enumerates interval starts s_v in [1, t-d(v)] per vertex (a proper total
// coloring is interval iff S[v] = [s_v, s_v+d(v)] for some start), then
// backtracks over proper completions; properness inside the fixed intervals
// already forces every palette to fill its interval exactly. Witnesses are
// re-verified before being returned. Deterministic for a fixed config.
// Practical limits: around 16 vertices / 40 edges, t <= 64.
SearchOutcome decide_interval_total(const Graph& g, int t, const SearchConfig& cfg = {});

// Exact minimum/maximum span by sweeping decide upward from Delta+1 or
// downward from |V|+|E|. On timeout the partial information is returned as a
// one-sided bound with provenance "search:budget".
SpanResult min_span(const Graph& g, const SearchConfig& cfg = {});
SpanResult max_span(const Graph& g, const SearchConfig& cfg = {});

struct SpectrumResult {
    std::vector<int> feasible;  // all t with decide == sat, ascending
    bool complete = true;       // false when any decide timed out
    SearchStats stats;
};

// The exact feasible set within [Delta+1, |V|+|E|]. Reported as a set; no
// gap-freeness is assumed or interpolated.
SpectrumResult spectrum(const Graph& g, const SearchConfig& cfg = {});

}  // namespace itc
