#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "subcrit/models.hpp"

namespace subcrit {

/// Declarative description of one Monte Carlo run. gamma > 3 is the regime
/// the trend checks are stated in; run_experiment only warns outside it, the
/// CLI refuses.
struct ExperimentConfig {
    std::string model = "nsw:zeta:gamma=4";
    std::vector<std::uint64_t> ns = {10000, 100000, 1000000};
    std::uint32_t replicates = 50;
    std::optional<std::uint64_t> seed;  // master seed; must be set to run
    double gamma = 4.0;
    double epsilon = 0.5;  // fat-vertex threshold factor
    std::uint32_t top_j = 3;
    std::string out_csv;   // empty = no file
    std::string out_json;

    bool operator==(const ExperimentConfig&) const = default;
};

/// Observables of a single sampled graph. Doubles are NaN when undefined
/// (zero mean degree, zero max degree, or no known tail constant).
struct ReplicateRecord {
    std::uint64_t n = 0;
    std::uint32_t replicate = 0;
    std::uint64_t seed = 0;  // derived stream seed, reruns this record alone
    std::vector<std::uint64_t> top_sizes;    // top_j component sizes (0-padded)
    std::vector<std::uint64_t> top_edges;    // edge counts, aligned
    std::vector<std::uint32_t> top_degrees;  // top_j degrees (0-padded)
    double mu_n = 0.0;
    double nu_n = 0.0;
    std::uint32_t delta = 0;
    double ratio = 0.0;       // |C1| (1 - nu_n) / delta
    double residual = 0.0;    // (|C1| - delta/(1-nu_n)) / n^(1/(gamma-1))
    double norm_delta = 0.0;  // delta / (a1 n)^(1/(gamma-1))
    std::uint64_t bad_components = 0;
    bool topj_distinct = false;
};

struct AggregateStats {
    double mean = 0.0;
    double median = 0.0;
    double q05 = 0.0;
    double q25 = 0.0;
    double q75 = 0.0;
    double q95 = 0.0;
};

struct NAggregate {
    std::uint64_t n = 0;
    std::uint32_t count = 0;
    AggregateStats ratio;
    AggregateStats residual;
    double ks_norm_delta = 0.0;  // KS distance to the Frechet limit; NaN w/o a1
    double bad_fraction = 0.0;   // replicates containing a bad component
    double topj_distinct_fraction = 0.0;
    double mean_norm_excess = 0.0;  // mean (C1 edges - size) / n^(1/(gamma-1))
    double max_norm_c1 = 0.0;       // sup over replicates of |C1| / n^(1/(gamma-1))
};

struct ExperimentResult {
    ExperimentConfig config;  // with the resolved seed
    std::vector<ReplicateRecord> records;  // sorted by (n, replicate)
    std::vector<NAggregate> aggregates;    // one per n, in config order
};

/// Runs every (n, replicate) pair, in parallel up to SUBCRIT_THREADS workers
/// (default: hardware concurrency). Replicate r at size n always uses the rng
/// stream derive_stream_seed(master, n, r), so results do not depend on the
/// worker count or execution order.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Pure fold over the record multiset (order-independent).
std::vector<NAggregate> aggregate_records(const std::vector<ReplicateRecord>& records,
                                          const ExperimentConfig& config,
                                          std::optional<double> a1);

/// Sup distance between the empirical CDF and cdf, both one-sided gaps.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

enum class ResultFormat { json, csv };

/// csv: one row per record (columns n,replicate,seed,c1_size,c1_edges,c2_size,
/// delta,delta2,mu_n,nu_n,ratio,residual,norm_delta,bad_components,
/// topJ_distinct) plus "<stem>.aggregates.json" next to it.
/// json: the full structure; read_results_json inverts it exactly.
void write_results(const ExperimentResult& result, const std::string& path,
                   ResultFormat format);

ExperimentResult read_results_json(const std::string& path);

/// NaN-tolerant structural equality (NaN counts as equal to NaN).
bool results_equal(const ExperimentResult& a, const ExperimentResult& b);

/// Config files are "key = value" lines; '#' starts a comment. Keys: model,
/// n (comma-separated), replicates, seed, gamma, epsilon, j, out_csv,
/// out_json. Missing keys take defaults; unknown keys are an error.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config(const std::string& path);
std::string config_to_text(const ExperimentConfig& config);
void write_config(const ExperimentConfig& config, const std::string& path);

}  // namespace subcrit
