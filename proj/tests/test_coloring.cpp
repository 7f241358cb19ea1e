#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "itc/coloring.hpp"
#include "itc/constructions.hpp"
#include "itc/dot.hpp"
#include "itc/graph.hpp"
#include "naive_oracle.hpp"

using namespace itc;

namespace {

Graph k2() { return complete_bipartite(1, 1); }

TotalColoring k2_coloring(int a, int edge, int b, int t) {
    return TotalColoring{t, {a, b}, {edge}};
}

}  // namespace

TEST_CASE("verify_total_proper on K_2") {
    Graph g = k2();
    CHECK(verify_total_proper(g, k2_coloring(1, 2, 3, 3)).ok());

    VerificationReport same = verify_total_proper(g, k2_coloring(1, 2, 1, 3));
    REQUIRE(!same.ok());
    CHECK(same.violation->kind == ViolationKind::adjacent_vertices);
    CHECK(same.violation->vertices == std::vector<int>{0, 1});

    VerificationReport inc = verify_total_proper(g, k2_coloring(1, 2, 2, 3));
    REQUIRE(!inc.ok());
    CHECK(inc.violation->kind == ViolationKind::incident_vertex_edge);
}

TEST_CASE("verify_interval_total on K_2") {
    Graph g = k2();
    CHECK(verify_interval_total(g, k2_coloring(1, 2, 3, 3)).ok());

    // S at the vertex colored 4 is {2,4}: not an interval
    VerificationReport gap = verify_interval_total(g, k2_coloring(1, 2, 4, 4));
    REQUIRE(!gap.ok());
    CHECK(gap.violation->kind == ViolationKind::not_interval);
    CHECK(gap.violation->vertices == std::vector<int>{1});

    // t=4 with max color 3: color 4 missing
    VerificationReport miss = verify_interval_total(g, k2_coloring(1, 2, 3, 4));
    REQUIRE(!miss.ok());
    CHECK(miss.violation->kind == ViolationKind::missing_color);
    CHECK(miss.violation->colors == std::vector<int>{4});

    VerificationReport range = verify_interval_total(g, k2_coloring(0, 2, 3, 3));
    REQUIRE(!range.ok());
    CHECK(range.violation->kind == ViolationKind::out_of_range);
}

TEST_CASE("verify_interval_total accepts the generated K_{2,4} coloring") {
    Graph g = complete_bipartite(2, 4);
    TotalColoring c = theorem8_coloring(2, 2);
    CHECK(c.t == 5);
    CHECK(verify_interval_total(g, c).ok());
    CHECK(oracle::verify_total(g, c));
}

TEST_CASE("verify_interval_edge") {
    // Q_2 with copy edges {2,2} and cross edges {1,3}: the 2-dimensional lift
    // of the K_2 total coloring
    Graph q2 = hypercube(2);
    EdgeColoring psi;
    psi.t = 3;
    psi.edge_colors.assign(4, 0);
    psi.edge_colors[q2.find_edge(0, 1)] = 2;
    psi.edge_colors[q2.find_edge(2, 3)] = 2;
    psi.edge_colors[q2.find_edge(0, 2)] = 1;
    psi.edge_colors[q2.find_edge(1, 3)] = 3;
    CHECK(verify_interval_edge(q2, psi).ok());
    CHECK(oracle::verify_edge(q2, psi));

    Graph single = k2();
    CHECK(verify_interval_edge(single, EdgeColoring{1, {1}}).ok());

    // path on 3 vertices with edge colors 1,3: color 2 unused and the center
    // palette {1,3} is not an interval; the interval scan reports first
    Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
    VerificationReport rep = verify_interval_edge(path, EdgeColoring{3, {1, 3}});
    REQUIRE(!rep.ok());
    CHECK(rep.violation->kind == ViolationKind::not_interval);
    CHECK(rep.violation->vertices == std::vector<int>{1});
    CHECK(!oracle::verify_edge(path, EdgeColoring{3, {1, 3}}));

    // a pure coverage failure: proper and interval everywhere, color 2 unused
    Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
    VerificationReport rep2 = verify_interval_edge(two, EdgeColoring{2, {1, 1}});
    REQUIRE(!rep2.ok());
    CHECK(rep2.violation->kind == ViolationKind::missing_color);
}

TEST_CASE("palette_of") {
    Graph g = k2();
    TotalColoring c = k2_coloring(1, 2, 3, 3);
    CHECK(palette_of(g, c, 0) == std::vector<int>{1, 2});
    CHECK(palette_of(g, c, 1) == std::vector<int>{2, 3});

    // K_{2,4} under the generated coloring: S[u_i] = [1, n*l+1], and the
    // vertex v_3 palette starts at n*f2(3) = 2
    Graph g24 = complete_bipartite(2, 4);
    TotalColoring t8 = theorem8_coloring(2, 2);
    for (int i = 0; i < 2; ++i) CHECK(palette_of(g24, t8, i) == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(palette_of(g24, t8, 2 + 2) == std::vector<int>{2, 3, 4});
}

TEST_CASE("palette sizes and union properties") {
    Graph g = complete_bipartite(2, 3);
    TotalColoring c = theorem8_coloring(1, 2);  // wrong graph on purpose
    CHECK_THROWS_AS(verify_total_proper(g, c), std::invalid_argument);

    TotalColoring good = knn_base_coloring(3);
    Graph k33 = complete_bipartite(3, 3);
    REQUIRE(verify_interval_total(k33, good).ok());
    std::set<int> union_of_palettes, used;
    for (int v = 0; v < k33.vertex_count(); ++v) {
        std::vector<int> p = palette_of(k33, good, v);
        CHECK(static_cast<int>(p.size()) == k33.degree(v) + 1);
        union_of_palettes.insert(p.begin(), p.end());
    }
    used.insert(good.vertex_colors.begin(), good.vertex_colors.end());
    used.insert(good.edge_colors.begin(), good.edge_colors.end());
    CHECK(union_of_palettes == used);
}

TEST_CASE("coloring json round trip preserves the verification report") {
    Graph g = complete_bipartite(2, 4);
    TotalColoring good = theorem8_coloring(2, 2);
    TotalColoring bad = good;
    bad.edge_colors[3] = 1;  // tamper

    for (const TotalColoring& c : {good, bad}) {
        nlohmann::json j = to_json(g, c);
        TotalColoring back = total_coloring_from_json(g, j);
        CHECK(back == c);
        VerificationReport before = verify_interval_total(g, c);
        VerificationReport after = verify_interval_total(g, back);
        CHECK(before.ok() == after.ok());
        if (!before.ok()) {
            CHECK(before.violation->kind == after.violation->kind);
            CHECK(before.violation->vertices == after.violation->vertices);
            CHECK(before.violation->edges == after.violation->edges);
        }
    }

    EdgeColoring psi = alpha_knn(3);
    Graph k33 = complete_bipartite(3, 3);
    EdgeColoring back = edge_coloring_from_json(k33, to_json(k33, psi));
    CHECK(back == psi);

    nlohmann::json j = to_json(g, good);
    j["edge_colors"][0]["u"] = 1;
    j["edge_colors"][0]["v"] = 2;  // not an edge of K_{2,4}
    CHECK_THROWS_AS(total_coloring_from_json(g, j), std::invalid_argument);
}

TEST_CASE("dot export") {
    Graph g = k2();
    CHECK(to_dot(g) == "graph G {\n  1;\n  2;\n  1 -- 2;\n}\n");
    CHECK(to_dot(g, k2_coloring(1, 2, 3, 3)) ==
          "graph G {\n  1 [label=\"1\"];\n  2 [label=\"3\"];\n  1 -- 2 [label=\"2\"];\n}\n");
    CHECK(to_dot(g, EdgeColoring{1, {1}}) == "graph G {\n  1;\n  2;\n  1 -- 2 [label=\"1\"];\n}\n");

    // deterministic: regenerating gives identical text
    Graph q3 = hypercube(3);
    CHECK(to_dot(q3) == to_dot(hypercube(3)));
}

TEST_CASE("verifier agrees with the naive checker under random single mutations") {
    Graph g = complete_bipartite(2, 4);
    TotalColoring base = theorem8_coloring(2, 2);
    REQUIRE(verify_interval_total(g, base).ok());

    std::mt19937 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        TotalColoring c = base;
        int pick = static_cast<int>(rng() % g.element_count());
        int new_color = 1 + static_cast<int>(rng() % c.t);
        if (pick < g.vertex_count())
            c.vertex_colors[pick] = new_color;
        else
            c.edge_colors[pick - g.vertex_count()] = new_color;
        CHECK(verify_interval_total(g, c).ok() == oracle::verify_total(g, c));
    }
}
