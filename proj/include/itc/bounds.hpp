#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace itc {

// One bounded quantity with per-side provenance, so consumers can tell an
// established exact value from a one-sided construction bound.
struct BoundEntry {
    std::optional<long long> lower;
    std::optional<long long> upper;
    std::string lower_ref;
    std::string upper_ref;

    bool is_exact() const { return lower && upper && *lower == *upper; }
    std::optional<long long> exact() const {
        if (is_exact()) return lower;
        return std::nullopt;
    }
};

struct SpanResult {
    std::string graph_name;
    long long n_vertices = 0;
    long long n_edges = 0;
    long long element_count() const { return n_vertices + n_edges; }

    std::optional<long long> chi_tt;  // total chromatic number when known
    std::string chi_tt_ref;
    BoundEntry w_tau;  // minimum span
    BoundEntry W_tau;  // maximum span
    bool spectrum_gap_free = false;
    std::string spectrum_ref;
    std::string note;
};

nlohmann::json to_json(const SpanResult& r);

// Total chromatic numbers of the closed-form families.
long long chi_tt_complete(long long n);
long long chi_tt_complete_bipartite(long long m, long long n);
long long chi_tt_balanced_multipartite(long long r, long long n);

// Best known spans per family. Provenance strings are stable identifiers:
// "closed-form", "construction:*", "regular-type1", "counting-argument",
// "gcd-construction", "chromatic-lower", "min-span-chain", "element-count",
// "hypercube-lift", "search".
SpanResult span_table_complete(long long n);
SpanResult span_table_complete_bipartite(long long m, long long n);
SpanResult span_table_balanced_bipartite(long long n);
SpanResult span_table_multiple_bipartite(long long n, long long l);
SpanResult span_table_balanced_multipartite(long long r, long long n);
SpanResult span_table_hypercube(long long n);

// Dispatch by stable family id: kn(n), kmn(m,n), knn(n), knl(n,l),
// kbal(r,n), qn(n). Unknown ids raise invalid_argument.
struct FamilySpec {
    std::string family;
    long long a = 0;
    long long b = 0;
};
SpanResult span_table(const FamilySpec& spec);

// Counting certificate for the minimum-span gap on K_{n+l,2n} with n = l+3:
// any interval total t-coloring with t <= 2n+l would force, for each of the
// l+2 colors in [n, n+l+1], at least n-l distinct vertices of the larger part
// to carry that vertex color, needing (l+2)(n-l) <= 2n — which fails. Hence
// the minimum span exceeds the total chromatic number 2n+1 by at least l.
struct PigeonholeCertificate {
    long long l = 0;
    long long n = 0;           // l + 3
    long long part_small = 0;  // n + l
    long long part_large = 0;  // 2n
    long long chi_tt = 0;      // 2n + 1
    long long w_tau_lower = 0; // 2n + 1 + l
    long long required_vertices = 0;  // (l+2)(n-l)
    long long available_vertices = 0; // 2n
    bool inequality_fails = false;    // required > available
    long long gap = 0;                // l
};

PigeonholeCertificate theorem9_certificate(long long l);
nlohmann::json to_json(const PigeonholeCertificate& c);

}  // namespace itc
