#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "subcrit/components.hpp"
#include "subcrit/configuration.hpp"
#include "subcrit/experiment.hpp"
#include "subcrit/exploration.hpp"
#include "subcrit/io.hpp"
#include "subcrit/models.hpp"

namespace {

using namespace subcrit;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& given) {
    if (given) return *given;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void echo_seed(std::uint64_t seed) { std::cerr << "seed: " << seed << "\n"; }

void emit_text(const std::string& out, const std::string& content) {
    if (out.empty() || out == "-") {
        std::cout << content;
    } else {
        atomic_write_text(out, content);
    }
}

std::string degrees_text(const DegreeSequence& seq) {
    std::string text;
    text.reserve(seq.size() * 4);
    for (const auto d : seq.degrees()) {
        text += std::to_string(d);
        text += '\n';
    }
    return text;
}

std::string edges_text(const MultiGraph& g) {
    std::string text = "u,v\n";
    for (const auto& [u, v] : g.edges()) {
        text += std::to_string(u);
        text += ',';
        text += std::to_string(v);
        text += '\n';
    }
    return text;
}

std::vector<std::uint64_t> parse_n_list(const std::string& text) {
    std::vector<std::uint64_t> ns;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (item.empty()) throw CLI::ValidationError("--n", "empty n entry");
        ns.push_back(std::stoull(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return ns;
}

struct GenDegreesArgs {
    std::string dist = "zeta:gamma=4";
    std::uint64_t n = 0;
    std::string parity = "even";
    std::optional<std::uint64_t> seed;
    std::string out = "-";
};

int run_gen_degrees(const GenDegreesArgs& args) {
    const auto dist = parse_distribution_spec(args.dist);
    const std::uint64_t seed = resolve_seed(args.seed);
    echo_seed(seed);
    Rng rng(seed);
    const auto parity =
        args.parity == "even" ? Parity::require_even : Parity::allow_any;
    const auto seq = sample_iid_sequence(dist, args.n, parity, rng);
    emit_text(args.out, degrees_text(seq));
    return 0;
}

struct GenGraphArgs {
    std::string model = "nsw:zeta:gamma=4";
    std::string degrees_file;
    std::string weights_file;
    std::uint64_t n = 0;
    std::string post = "keep";
    std::uint32_t max_tries = 1000;
    std::optional<std::uint64_t> seed;
    std::string out = "-";
};

MultiGraph post_treat(const DegreeSequence& seq, const GenGraphArgs& args, Rng& rng) {
    if (args.post == "simple") return sample_simple(seq, rng, args.max_tries).graph;
    const auto g = pair_half_edges(seq, rng);
    return args.post == "erase" ? erase(g) : g;
}

int run_gen_graph(const GenGraphArgs& args) {
    const std::uint64_t seed = resolve_seed(args.seed);
    echo_seed(seed);
    Rng rng(seed);

    MultiGraph g;
    if (!args.degrees_file.empty()) {
        g = post_treat(load_sequence(args.degrees_file), args, rng);
    } else {
        auto model = ModelSpec::parse(args.model);
        if (!args.weights_file.empty()) {
            if (model.kind != ModelSpec::Kind::rank1) {
                throw std::invalid_argument("--weights only applies to rank1 models");
            }
            model.rank1.weights = load_weights(args.weights_file);
            model.rank1.weight_dist.reset();
        }
        std::uint64_t n = args.n;
        if (model.kind == ModelSpec::Kind::rank1 && !model.rank1.weights.empty()) {
            const std::uint64_t wn = model.rank1.weights.size();
            if (n != 0 && n != wn) {
                throw std::invalid_argument("--n disagrees with the weight file size");
            }
            n = wn;
        }
        if (n == 0) throw std::invalid_argument("--n is required for this model");
        if (n > 0xffffffffull) {
            throw std::invalid_argument("n exceeds the 2^32 vertex limit");
        }
        if (model.kind == ModelSpec::Kind::nsw) {
            const auto seq = sample_iid_sequence(*model.dist, n, Parity::require_even,
                                                 rng);
            g = post_treat(seq, args, rng);
        } else {
            g = rank1_sample(model.rank1, static_cast<std::uint32_t>(n), rng);
        }
    }
    emit_text(args.out, edges_text(g));
    return 0;
}

struct AnalyzeArgs {
    std::string graph_file;
    std::string degrees_file;
    double gamma = 4.0;
    std::string json_out;
};

int run_analyze(const AnalyzeArgs& args) {
    if (args.graph_file.empty() == args.degrees_file.empty()) {
        throw std::invalid_argument("analyze needs exactly one of --graph/--degrees");
    }
    std::string report;
    if (!args.degrees_file.empty()) {
        const auto seq = load_sequence(args.degrees_file);
        report += "vertices: " + std::to_string(seq.size()) + "\n";
        report += "degree_sum: " + std::to_string(seq.degree_sum()) + "\n";
        report += "mu: " + format_double(mu(seq)) + "\n";
        report += "nu: " +
                  (seq.degree_sum() > 0 ? format_double(nu(seq)) : "undefined") + "\n";
        report += "delta: " + std::to_string(seq.max_degree()) + "\n";
        report += "tail_constant: " + format_double(tail_constant(seq, args.gamma)) +
                  " (gamma = " + format_double(args.gamma) + ")\n";
        report += std::string("pairing_eligible: ") +
                  (seq.pairing_eligible() ? "true" : "false") + "\n";
        std::cout << report;
        return 0;
    }

    const auto g = load_graph(args.graph_file);
    if (g.vertex_count() == 0) {
        std::cout << "vertices: 0\nedges: 0\n";
        return 0;
    }
    const auto stats = realized_stats(g);
    const auto summary = components(g);
    report += "vertices: " + std::to_string(g.vertex_count()) + "\n";
    report += "edges: " + std::to_string(g.edge_count()) + "\n";
    report += "mu: " + format_double(stats.mu) + "\n";
    report += "nu: " + (stats.nu ? format_double(*stats.nu) : "undefined") + "\n";
    report += "delta: " + std::to_string(stats.delta) + "\n";
    report += std::string("simple: ") + (is_simple(g) ? "true" : "false") + "\n";
    report += "components: " + std::to_string(summary.count()) + "\n";
    std::string sizes = "component_sizes:";
    for (std::size_t i = 0; i < std::min<std::size_t>(summary.count(), 10); ++i) {
        sizes += ' ' + std::to_string(summary.sizes[i]);
    }
    report += sizes + "\n";
    report += "c1_size: " + std::to_string(summary.sizes[0]) + "\n";
    report += "c1_edges: " + std::to_string(summary.edge_counts[0]) + "\n";
    report += "c1_excess: " + std::to_string(excess(summary, 1)) + "\n";
    std::cout << report;
    if (!args.json_out.empty()) {
        atomic_write_text(args.json_out, to_json(summary).dump(2) + "\n");
    }
    return 0;
}

struct ExploreArgs {
    std::string graph_file;
    std::int64_t root = -1;  // -1: the max-degree vertex
    std::string policy = "fifo";
    std::uint32_t gen_depth = 10;
    std::uint32_t gen_degree = 20;
    std::string out = "-";
};

int run_explore(const ExploreArgs& args) {
    const auto g = load_graph(args.graph_file);
    if (g.vertex_count() == 0) {
        throw std::invalid_argument("graph has no vertices");
    }
    std::uint32_t root;
    if (args.root >= 0) {
        if (args.root >= g.vertex_count()) {
            throw std::invalid_argument("--root out of range [0, n)");
        }
        root = static_cast<std::uint32_t>(args.root);
    } else {
        const DegreeSequence seq(g.degrees());
        root = top_vertices(seq, 1)[0];
    }
    const auto policy =
        args.policy == "lifo" ? ExplorePolicy::lifo : ExplorePolicy::fifo;
    const auto trace = explore(g, root, policy);
    const auto gens = bfs_generations(g, root, args.gen_depth, args.gen_degree);
    emit_text(args.out, trace_to_json(trace, &gens).dump(2) + "\n");
    return 0;
}

struct ExperimentArgs {
    std::string config_file;
    std::optional<std::string> model;
    std::optional<std::string> n_list;
    std::optional<std::uint32_t> replicates;
    std::optional<std::uint64_t> seed;
    std::optional<double> gamma;
    std::optional<double> epsilon;
    std::optional<std::uint32_t> top_j;
    std::optional<std::string> out_csv;
    std::optional<std::string> out_json;
};

int run_experiment_cmd(const ExperimentArgs& args) {
    ExperimentConfig cfg;
    if (!args.config_file.empty()) cfg = parse_config(args.config_file);
    if (args.model) cfg.model = *args.model;
    if (args.n_list) cfg.ns = parse_n_list(*args.n_list);
    if (args.replicates) cfg.replicates = *args.replicates;
    if (args.seed) cfg.seed = *args.seed;
    if (args.gamma) cfg.gamma = *args.gamma;
    if (args.epsilon) cfg.epsilon = *args.epsilon;
    if (args.top_j) cfg.top_j = *args.top_j;
    if (args.out_csv) cfg.out_csv = *args.out_csv;
    if (args.out_json) cfg.out_json = *args.out_json;

    if (!(cfg.gamma > 3.0)) {
        throw std::invalid_argument(
            "experiment requires gamma > 3 (got " + format_double(cfg.gamma) +
            "); the diagnostics are only meaningful in that regime");
    }
    cfg.seed = resolve_seed(cfg.seed);
    echo_seed(*cfg.seed);

    const auto result = run_experiment(cfg);
    if (!cfg.out_csv.empty()) {
        write_results(result, cfg.out_csv, ResultFormat::csv);
        std::cerr << "wrote " << cfg.out_csv << "\n";
    }
    if (!cfg.out_json.empty()) {
        write_results(result, cfg.out_json, ResultFormat::json);
        std::cerr << "wrote " << cfg.out_json << "\n";
    }
    if (cfg.out_csv.empty() && cfg.out_json.empty()) {
        nlohmann::json aggs = nlohmann::json::array();
        for (const auto& agg : result.aggregates) {
            aggs.push_back({{"n", agg.n},
                            {"ratio_median", agg.ratio.median},
                            {"ratio_iqr", agg.ratio.q75 - agg.ratio.q25},
                            {"ks_norm_delta", agg.ks_norm_delta},
                            {"bad_fraction", agg.bad_fraction},
                            {"topJ_distinct_fraction", agg.topj_distinct_fraction},
                            {"mean_norm_excess", agg.mean_norm_excess}});
        }
        std::cout << aggs.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "subcritical power-law random graph toolkit\n"
        "Exit codes: 0 ok, 2 argument/validation error, 1 runtime error.\n"
        "SUBCRIT_THREADS caps experiment workers (default: hardware "
        "parallelism)."};
    app.require_subcommand(1);

    GenDegreesArgs gd;
    auto* gen_degrees = app.add_subcommand(
        "gen-degrees", "sample a degree sequence from a distribution");
    gen_degrees->add_option("--dist", gd.dist,
                            "zeta:gamma=G or pmf:k=p,... (default zeta:gamma=4)");
    gen_degrees->add_option("--n", gd.n, "number of vertices")->required();
    gen_degrees->add_option("--parity", gd.parity, "even | any")
        ->check(CLI::IsMember({"even", "any"}));
    gen_degrees->add_option("--seed", gd.seed, "rng seed (default: entropy)");
    gen_degrees->add_option("--out", gd.out, "output file ('-' = stdout)");

    GenGraphArgs gg;
    auto* gen_graph =
        app.add_subcommand("gen-graph", "sample a graph and write its edge list");
    gen_graph->add_option("--model", gg.model,
                          "nsw:<dist> or rank1:<variant>[:pareto:gamma=G,nu=NU]");
    gen_graph->add_option("--degrees", gg.degrees_file,
                          "pair an explicit degree sequence file instead");
    gen_graph->add_option("--weights", gg.weights_file, "rank1 weight file");
    gen_graph->add_option("--n", gg.n, "number of vertices");
    gen_graph->add_option("--post", gg.post, "keep | erase | simple")
        ->check(CLI::IsMember({"keep", "erase", "simple"}));
    gen_graph->add_option("--max-tries", gg.max_tries,
                          "rejection cap for --post simple");
    gen_graph->add_option("--seed", gg.seed, "rng seed (default: entropy)");
    gen_graph->add_option("--out", gg.out, "output file ('-' = stdout)");

    AnalyzeArgs an;
    auto* analyze =
        app.add_subcommand("analyze", "report statistics of a graph or sequence");
    analyze->add_option("--graph", an.graph_file, "edge-list CSV");
    analyze->add_option("--degrees", an.degrees_file, "degree sequence file");
    analyze->add_option("--gamma", an.gamma, "tail exponent for tail_constant");
    analyze->add_option("--json", an.json_out, "write the component summary JSON");

    ExploreArgs ex;
    auto* explore_cmd =
        app.add_subcommand("explore", "run the half-edge exploration from a root");
    explore_cmd->add_option("--graph", ex.graph_file, "edge-list CSV")->required();
    explore_cmd->add_option("--root", ex.root,
                            "root vertex (default: a maximum-degree vertex)");
    explore_cmd->add_option("--policy", ex.policy, "fifo | lifo")
        ->check(CLI::IsMember({"fifo", "lifo"}));
    explore_cmd->add_option("--gen-depth", ex.gen_depth, "generation rows J");
    explore_cmd->add_option("--gen-degree", ex.gen_degree, "degree columns K");
    explore_cmd->add_option("--out", ex.out, "output file ('-' = stdout)");

    ExperimentArgs ea;
    auto* experiment =
        app.add_subcommand("experiment", "Monte Carlo runs with aggregation");
    experiment->add_option("--config", ea.config_file, "key = value config file");
    experiment->add_option("--model", ea.model, "model spec override");
    experiment->add_option("--n", ea.n_list, "comma-separated n values");
    experiment->add_option("--replicates", ea.replicates, "replicates per n");
    experiment->add_option("--seed", ea.seed, "master seed (default: entropy)");
    experiment->add_option("--gamma", ea.gamma, "tail exponent (> 3)");
    experiment->add_option("--epsilon", ea.epsilon, "fat-vertex threshold factor");
    experiment->add_option("--j", ea.top_j, "top components/degrees tracked");
    experiment->add_option("--out-csv", ea.out_csv, "per-replicate CSV path");
    experiment->add_option("--out-json", ea.out_json, "full JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen_degrees->parsed()) return run_gen_degrees(gd);
        if (gen_graph->parsed()) return run_gen_graph(gg);
        if (analyze->parsed()) return run_analyze(an);
        if (explore_cmd->parsed()) return run_explore(ex);
        if (experiment->parsed()) return run_experiment_cmd(ea);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
