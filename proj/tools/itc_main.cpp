#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "itc/bounds.hpp"
#include "itc/coloring.hpp"
#include "itc/constructions.hpp"
#include "itc/dot.hpp"
#include "itc/graph.hpp"
#include "itc/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;  // verification violation / unsat
constexpr int kExitTimeout = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<long long> parse_params(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

// Graph argument: an edge-list file path, or a family spec such as
// qn:3, kn:5, kmn:5,8, knn:3, knl:2,2, kbal:4,3.
itc::Graph graph_from_arg(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        if (!in) throw DataError("cannot open graph file: " + arg);
        try {
            return itc::parse_edge_list(in);
        } catch (const std::invalid_argument& e) {
            throw DataError(std::string("bad graph file: ") + e.what());
        }
    }
    auto colon = arg.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("graph argument is neither a file nor a family spec: " + arg);
    std::string family = arg.substr(0, colon);
    std::vector<long long> p = parse_params(arg.substr(colon + 1));
    auto want = [&](std::size_t k) {
        if (p.size() != k) throw std::invalid_argument("family " + family + " expects " + std::to_string(k) + " parameter(s)");
    };
    if (family == "qn") {
        want(1);
        return itc::hypercube(static_cast<int>(p[0]));
    }
    if (family == "kn") {
        want(1);
        if (p[0] == 1) return itc::Graph::from_edges(1, {});
        return itc::complete_balanced_multipartite(static_cast<int>(p[0]), 1);
    }
    if (family == "kmn") {
        want(2);
        return itc::complete_bipartite(static_cast<int>(p[0]), static_cast<int>(p[1]));
    }
    if (family == "knn") {
        want(1);
        return itc::complete_bipartite(static_cast<int>(p[0]), static_cast<int>(p[0]));
    }
    if (family == "knl") {
        want(2);
        return itc::complete_bipartite(static_cast<int>(p[0]), static_cast<int>(p[0] * p[1]));
    }
    if (family == "kbal") {
        want(2);
        return itc::complete_balanced_multipartite(static_cast<int>(p[0]), static_cast<int>(p[1]));
    }
    throw std::invalid_argument("unknown graph family: " + family);
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("bad json in ") + path + ": " + e.what());
    }
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty() || output_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw DataError("cannot open output file: " + output_path);
    out << text;
}

double default_time_budget() {
    if (const char* env = std::getenv("ITC_TIME_BUDGET")) {
        try {
            return std::stod(env);
        } catch (...) {
            throw std::invalid_argument("ITC_TIME_BUDGET is not a number");
        }
    }
    return 0.0;
}

struct ConstructArgs {
    std::string family;
    int n = 0, l = 0, r = 0, t = 0;
    double budget = -1.0;
    long long nodes = 0;
    std::string output;
};

int run_construct(const ConstructArgs& a) {
    itc::SearchConfig cfg;
    cfg.time_budget_seconds = a.budget >= 0 ? a.budget : default_time_budget();
    cfg.node_limit = a.nodes;

    itc::Graph graph;
    nlohmann::json payload;
    itc::VerificationReport report;

    if (a.family == "t8") {
        itc::TotalColoring c = itc::theorem8_coloring(a.n, a.l);
        graph = itc::complete_bipartite(a.n, a.n * std::max(a.l, 1));
        report = itc::verify_interval_total(graph, c);
        payload = itc::to_json(graph, c);
    } else if (a.family == "knn") {
        itc::TotalColoring c = itc::knn_base_coloring(a.n);
        graph = itc::complete_bipartite(a.n, a.n);
        report = itc::verify_interval_total(graph, c);
        payload = itc::to_json(graph, c);
    } else if (a.family == "t10") {
        itc::TotalColoring c = itc::theorem10_coloring(a.r, a.n);
        graph = itc::complete_balanced_multipartite(a.r, a.n);
        report = itc::verify_interval_total(graph, c);
        payload = itc::to_json(graph, c);
    } else if (a.family == "t11c1") {
        itc::TotalColoring c = itc::theorem11_case1_coloring(a.r, a.n);
        graph = itc::complete_balanced_multipartite(a.r, a.n);
        report = itc::verify_interval_total(graph, c);
        payload = itc::to_json(graph, c);
    } else if (a.family == "t11c2") {
        itc::TotalColoring c = itc::theorem11_case2_coloring(a.r, a.n);
        graph = itc::complete_balanced_multipartite(a.r, a.n);
        report = itc::verify_interval_total(graph, c);
        payload = itc::to_json(graph, c);
    } else if (a.family == "qlift") {
        itc::Graph base = itc::hypercube(a.n);
        itc::TotalColoring phi = itc::hypercube_total_coloring(a.n, a.t, cfg);
        itc::EdgeColoring psi = itc::theorem12_lift(base, phi);
        graph = itc::hypercube(a.n + 1);
        report = itc::verify_interval_edge(graph, psi);
        payload = itc::to_json(graph, psi);
    } else if (a.family == "qn") {
        itc::TotalColoring c = itc::hypercube_total_coloring(a.n, a.t, cfg);
        graph = itc::hypercube(a.n);
        report = itc::verify_interval_total(graph, c);
        payload = itc::to_json(graph, c);
    } else {
        throw std::invalid_argument("unknown construction family: " + a.family);
    }

    if (!report.ok()) {
        std::cerr << "internal error: construction failed verification: " << itc::to_json(report).dump() << "\n";
        return kExitInternal;
    }
    emit(payload.dump(2) + "\n", a.output);
    return kExitOk;
}

int run_verify(const std::string& graph_arg, const std::string& coloring_path, const std::string& output) {
    itc::Graph g = graph_from_arg(graph_arg);
    nlohmann::json j = load_json(coloring_path);
    itc::VerificationReport report;
    try {
        if (j.contains("vertex_colors")) {
            report = itc::verify_interval_total(g, itc::total_coloring_from_json(g, j));
        } else {
            report = itc::verify_interval_edge(g, itc::edge_coloring_from_json(g, j));
        }
    } catch (const std::invalid_argument& e) {
        throw DataError(std::string("coloring does not fit graph: ") + e.what());
    }
    emit(itc::to_json(report).dump(2) + "\n", output);
    return report.ok() ? kExitOk : kExitViolation;
}

int run_search(const std::string& graph_arg, const std::string& mode, int t, double budget, long long nodes,
               bool no_reversal, bool twins, const std::string& output) {
    itc::Graph g = graph_from_arg(graph_arg);
    itc::SearchConfig cfg;
    cfg.time_budget_seconds = budget >= 0 ? budget : default_time_budget();
    cfg.node_limit = nodes;
    cfg.color_reversal_symmetry = !no_reversal;
    cfg.twin_symmetry = twins;

    if (mode == "decide") {
        if (t <= 0) throw std::invalid_argument("decide mode needs --t");
        itc::SearchOutcome out = itc::decide_interval_total(g, t, cfg);
        if (out.status == itc::SearchStatus::sat) {
            emit(itc::to_json(g, *out.witness).dump(2) + "\n", output);
            return kExitOk;
        }
        nlohmann::json j{{"status", out.status == itc::SearchStatus::unsat ? "unsat" : "timeout"},
                         {"nodes", out.stats.nodes},
                         {"seconds", out.stats.seconds}};
        emit(j.dump(2) + "\n", output);
        return out.status == itc::SearchStatus::unsat ? kExitViolation : kExitTimeout;
    }
    if (mode == "wmin" || mode == "wmax") {
        itc::SpanResult r = mode == "wmin" ? itc::min_span(g, cfg) : itc::max_span(g, cfg);
        emit(itc::to_json(r).dump(2) + "\n", output);
        const itc::BoundEntry& entry = mode == "wmin" ? r.w_tau : r.W_tau;
        if (entry.is_exact()) return kExitOk;
        return r.note.rfind("budget", 0) == 0 ? kExitTimeout : kExitViolation;
    }
    if (mode == "spectrum") {
        itc::SpectrumResult r = itc::spectrum(g, cfg);
        nlohmann::json j{{"feasible", r.feasible}, {"complete", r.complete}, {"nodes", r.stats.nodes}};
        emit(j.dump(2) + "\n", output);
        return r.complete ? kExitOk : kExitTimeout;
    }
    throw std::invalid_argument("unknown search mode: " + mode);
}

int run_export(const std::string& graph_arg, const std::string& coloring_path, const std::string& format,
               const std::string& output) {
    itc::Graph g = graph_from_arg(graph_arg);
    if (format == "edgelist") {
        emit(itc::to_edge_list(g), output);
        return kExitOk;
    }
    if (format != "dot") throw std::invalid_argument("unknown export format: " + format);
    std::string text;
    if (coloring_path.empty()) {
        text = itc::to_dot(g);
    } else {
        nlohmann::json j = load_json(coloring_path);
        if (j.contains("vertex_colors"))
            text = itc::to_dot(g, itc::total_coloring_from_json(g, j));
        else
            text = itc::to_dot(g, itc::edge_coloring_from_json(g, j));
    }
    emit(text, output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"interval total colorings of complete multipartite graphs and hypercubes"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "generate or canonicalize a graph as an edge list");
    std::string build_graph, build_input, build_output;
    build->add_option("--family", build_graph, "family spec, e.g. qn:3 kmn:5,8 kbal:4,3");
    build->add_option("--input", build_input, "edge-list file to canonicalize");
    build->add_option("-o,--output", build_output, "output path (default stdout)");

    auto* construct = app.add_subcommand("construct", "emit a verified coloring for one of the constructions");
    ConstructArgs cargs;
    construct->add_option("--family", cargs.family, "t8|knn|t10|t11c1|t11c2|qlift|qn")->required();
    construct->add_option("--n", cargs.n, "n parameter");
    construct->add_option("--l", cargs.l, "l parameter (t8)");
    construct->add_option("--r", cargs.r, "r parameter (t10, t11c1, t11c2)");
    construct->add_option("--t", cargs.t, "color count (qn, qlift)");
    construct->add_option("--budget", cargs.budget, "search time budget in seconds");
    construct->add_option("--nodes", cargs.nodes, "search node limit");
    construct->add_option("-o,--output", cargs.output, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "verify a coloring against a graph");
    std::string verify_graph, verify_coloring, verify_output;
    verify->add_option("--graph", verify_graph, "edge-list file or family spec")->required();
    verify->add_option("--coloring", verify_coloring, "coloring json file")->required();
    verify->add_option("-o,--output", verify_output, "output path (default stdout)");

    auto* bounds = app.add_subcommand("bounds", "print best known span bounds for a family");
    std::string bounds_family;
    long long bn = 0, bm = 0, bl = 0, br = 0;
    bounds->add_option("--family", bounds_family, "kn|kmn|knn|knl|kbal|qn")->required();
    bounds->add_option("--n", bn, "n parameter");
    bounds->add_option("--m", bm, "m parameter (kmn)");
    bounds->add_option("--l", bl, "l parameter (knl)");
    bounds->add_option("--r", br, "r parameter (kbal)");

    auto* search = app.add_subcommand("search", "exact search for interval total colorings");
    std::string search_graph, search_mode = "decide", search_output;
    int search_t = 0;
    double search_budget = -1.0;
    long long search_nodes = 0;
    bool search_no_reversal = false, search_twins = false;
    search->add_option("--graph", search_graph, "edge-list file or family spec")->required();
    search->add_option("--mode", search_mode, "decide|wmin|wmax|spectrum");
    search->add_option("--t", search_t, "color count (decide)");
    search->add_option("--budget", search_budget, "time budget in seconds (default ITC_TIME_BUDGET)");
    search->add_option("--nodes", search_nodes, "node limit");
    search->add_flag("--no-reversal", search_no_reversal, "disable color-reversal symmetry breaking");
    search->add_flag("--twins", search_twins, "order starts across twin vertices");
    search->add_option("-o,--output", search_output, "output path (default stdout)");

    auto* exp = app.add_subcommand("export", "export a graph (optionally colored) as dot or edgelist");
    std::string export_graph, export_coloring, export_format = "dot", export_output;
    exp->add_option("--graph", export_graph, "edge-list file or family spec")->required();
    exp->add_option("--coloring", export_coloring, "coloring json file");
    exp->add_option("--format", export_format, "dot|edgelist");
    exp->add_option("-o,--output", export_output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (build->parsed()) {
            if (build_graph.empty() == build_input.empty())
                throw std::invalid_argument("build: give exactly one of --family or --input");
            itc::Graph g = graph_from_arg(build_graph.empty() ? build_input : build_graph);
            emit(itc::to_edge_list(g), build_output);
            return kExitOk;
        }
        if (construct->parsed()) return run_construct(cargs);
        if (verify->parsed()) return run_verify(verify_graph, verify_coloring, verify_output);
        if (bounds->parsed()) {
            itc::FamilySpec spec{bounds_family, 0, 0};
            if (bounds_family == "kmn") {
                spec.a = bm;
                spec.b = bn;
            } else if (bounds_family == "knl") {
                spec.a = bn;
                spec.b = bl;
            } else if (bounds_family == "kbal") {
                spec.a = br;
                spec.b = bn;
            } else {
                spec.a = bn;
            }
            emit(itc::to_json(itc::span_table(spec)).dump(2) + "\n", "");
            return kExitOk;
        }
        if (search->parsed())
            return run_search(search_graph, search_mode, search_t, search_budget, search_nodes, search_no_reversal,
                              search_twins, search_output);
        if (exp->parsed()) return run_export(export_graph, export_coloring, export_format, export_output);
    } catch (const itc::budget_exhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTimeout;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
