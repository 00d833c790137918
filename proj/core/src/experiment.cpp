#include "subcrit/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "subcrit/components.hpp"
#include "subcrit/io.hpp"

namespace subcrit {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.replicates == 0) {
        throw std::invalid_argument("replicates must be >= 1");
    }
    if (cfg.ns.empty()) throw std::invalid_argument("at least one n is required");
    for (const std::uint64_t n : cfg.ns) {
        if (n == 0) throw std::invalid_argument("every n must be >= 1");
        if (n > 0xffffffffull) {
            throw std::invalid_argument("n exceeds the 2^32 vertex limit");
        }
    }
    if (!(cfg.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (!(cfg.gamma > 1.0)) throw std::invalid_argument("gamma must exceed 1");
    if (cfg.top_j == 0) throw std::invalid_argument("j must be >= 1");
    ModelSpec::parse(cfg.model);  // throws on a bad spec
}

unsigned worker_count(std::size_t tasks) {
    unsigned cap = std::thread::hardware_concurrency();
    if (cap == 0) cap = 1;
    if (const char* env = std::getenv("SUBCRIT_THREADS")) {
        char* end = nullptr;
        const unsigned long parsed = std::strtoul(env, &end, 10);
        if (end != env && parsed >= 1) cap = static_cast<unsigned>(parsed);
    }
    return static_cast<unsigned>(std::min<std::size_t>(cap, std::max<std::size_t>(tasks, 1)));
}

ReplicateRecord run_replicate(const ModelSpec& model, const ExperimentConfig& cfg,
                              std::optional<double> a1, std::uint64_t n,
                              std::uint32_t rep) {
    ReplicateRecord rec;
    rec.n = n;
    rec.replicate = rep;
    rec.seed = derive_stream_seed(*cfg.seed, n, rep);
    Rng rng(rec.seed);

    const MultiGraph g = sample_model(model, static_cast<std::uint32_t>(n), rng);
    const DegreeSequence realized(g.degrees());
    const ComponentSummary summary = components(g);

    const std::uint32_t j =
        static_cast<std::uint32_t>(std::min<std::uint64_t>(cfg.top_j, n));
    rec.top_sizes.assign(cfg.top_j, 0u);
    rec.top_edges.assign(cfg.top_j, 0u);
    for (std::size_t i = 0; i < std::min<std::size_t>(cfg.top_j, summary.count()); ++i) {
        rec.top_sizes[i] = summary.sizes[i];
        rec.top_edges[i] = summary.edge_counts[i];
    }
    rec.top_degrees.assign(cfg.top_j, 0u);
    const std::vector<std::uint32_t> tops = top_vertices(realized, j);
    for (std::size_t i = 0; i < tops.size(); ++i) rec.top_degrees[i] = realized[tops[i]];

    rec.mu_n = mu(realized);
    rec.nu_n = realized.degree_sum() > 0 ? nu(realized) : kNaN;
    rec.delta = realized.max_degree();

    const double pw = std::pow(static_cast<double>(n), 1.0 / (cfg.gamma - 1.0));
    const double c1 = static_cast<double>(rec.top_sizes[0]);
    rec.ratio = (rec.delta > 0 && !std::isnan(rec.nu_n))
                    ? c1 * (1.0 - rec.nu_n) / static_cast<double>(rec.delta)
                    : kNaN;
    rec.residual = (!std::isnan(rec.nu_n) && rec.nu_n != 1.0)
                       ? (c1 - static_cast<double>(rec.delta) / (1.0 - rec.nu_n)) / pw
                       : kNaN;
    rec.norm_delta = a1 ? static_cast<double>(rec.delta) /
                              std::pow(*a1 * static_cast<double>(n),
                                       1.0 / (cfg.gamma - 1.0))
                        : kNaN;

    const std::vector<std::uint32_t> fat = fat_vertices(realized, cfg.epsilon, cfg.gamma);
    rec.bad_components = count_bad_components(summary, fat);

    bool distinct = true;
    for (std::size_t a = 0; a < tops.size() && distinct; ++a) {
        for (std::size_t b = a + 1; b < tops.size(); ++b) {
            if (summary.comp_of[tops[a]] == summary.comp_of[tops[b]]) {
                distinct = false;
                break;
            }
        }
    }
    rec.topj_distinct = distinct;
    return rec;
}

// Type-7 (linear interpolation) quantile of a sorted sample.
double quantile_sorted(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return kNaN;
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

// Undefined observables (NaN) are dropped; sorting a mixed NaN/finite vector
// would not even be a valid ordering.
AggregateStats stats_of(const std::vector<double>& xs) {
    std::vector<double> finite;
    finite.reserve(xs.size());
    for (const double x : xs) {
        if (std::isfinite(x)) finite.push_back(x);
    }
    AggregateStats out{kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
    if (finite.empty()) return out;
    double sum = 0.0;
    for (const double x : finite) sum += x;
    out.mean = sum / static_cast<double>(finite.size());
    std::sort(finite.begin(), finite.end());
    out.median = quantile_sorted(finite, 0.5);
    out.q05 = quantile_sorted(finite, 0.05);
    out.q25 = quantile_sorted(finite, 0.25);
    out.q75 = quantile_sorted(finite, 0.75);
    out.q95 = quantile_sorted(finite, 0.95);
    return out;
}

}  // namespace

std::vector<NAggregate> aggregate_records(const std::vector<ReplicateRecord>& records,
                                          const ExperimentConfig& config,
                                          std::optional<double> a1) {
    // Sort a copy so the fold cannot depend on execution order.
    std::vector<const ReplicateRecord*> sorted;
    sorted.reserve(records.size());
    for (const auto& r : records) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(),
              [](const ReplicateRecord* a, const ReplicateRecord* b) {
                  if (a->n != b->n) return a->n < b->n;
                  return a->replicate < b->replicate;
              });

    std::vector<NAggregate> out;
    for (const std::uint64_t n : config.ns) {
        NAggregate agg;
        agg.n = n;
        std::vector<double> ratios, residuals, norm_deltas;
        std::uint64_t bad = 0, distinct = 0;
        double excess_sum = 0.0;
        double max_norm_c1 = 0.0;
        const double pw = std::pow(static_cast<double>(n), 1.0 / (config.gamma - 1.0));
        for (const ReplicateRecord* r : sorted) {
            if (r->n != n) continue;
            ++agg.count;
            ratios.push_back(r->ratio);
            residuals.push_back(r->residual);
            norm_deltas.push_back(r->norm_delta);
            if (r->bad_components > 0) ++bad;
            if (r->topj_distinct) ++distinct;
            excess_sum += (static_cast<double>(r->top_edges[0]) -
                           static_cast<double>(r->top_sizes[0])) /
                          pw;
            max_norm_c1 =
                std::max(max_norm_c1, static_cast<double>(r->top_sizes[0]) / pw);
        }
        if (agg.count == 0) {
            throw std::invalid_argument("no records for n = " + std::to_string(n));
        }
        agg.ratio = stats_of(ratios);
        agg.residual = stats_of(residuals);
        agg.bad_fraction = static_cast<double>(bad) / agg.count;
        agg.topj_distinct_fraction = static_cast<double>(distinct) / agg.count;
        agg.mean_norm_excess = excess_sum / agg.count;
        agg.max_norm_c1 = max_norm_c1;
        if (a1) {
            const FrechetLaw law{config.gamma, 1.0};
            agg.ks_norm_delta = ks_statistic(
                norm_deltas, [&law](double x) { return law.cdf(x); });
        } else {
            agg.ks_norm_delta = kNaN;
        }
        out.push_back(std::move(agg));
    }
    return out;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    validate_config(config);
    if (!config.seed) {
        throw std::invalid_argument("run_experiment needs a resolved master seed");
    }
    if (!(config.gamma > 3.0)) {
        std::cerr << "warning: gamma = " << config.gamma
                  << " is outside the gamma > 3 regime; the trend diagnostics "
                     "are not meaningful there\n";
    }
    const ModelSpec model = ModelSpec::parse(config.model);
    const std::optional<double> a1 = model.tail_constant();
    if (model.gamma() && std::abs(*model.gamma() - config.gamma) > 1e-12) {
        std::cerr << "warning: model gamma " << *model.gamma()
                  << " differs from experiment gamma " << config.gamma << "\n";
    }

    const std::size_t tasks =
        config.ns.size() * static_cast<std::size_t>(config.replicates);
    std::vector<ReplicateRecord> records(tasks);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::string error;

    const auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks || failed.load()) return;
            const std::uint64_t n = config.ns[i / config.replicates];
            const std::uint32_t rep = static_cast<std::uint32_t>(i % config.replicates);
            try {
                records[i] = run_replicate(model, config, a1, n, rep);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (error.empty()) {
                    error = "replicate " + std::to_string(rep) + " at n = " +
                            std::to_string(n) + " failed: " + e.what();
                }
                failed.store(true);
                return;
            }
        }
    };

    const unsigned workers = worker_count(tasks);
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failed.load()) throw std::runtime_error(error);

    ExperimentResult result;
    result.config = config;
    result.records = std::move(records);
    result.aggregates = aggregate_records(result.records, config, a1);
    return result;
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic needs samples");
    for (const double x : samples) {
        if (std::isnan(x)) {
            throw std::invalid_argument("ks_statistic: samples must not be NaN");
        }
    }
    std::sort(samples.begin(), samples.end());
    const double m = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, static_cast<double>(i + 1) / m - f);
        d = std::max(d, f - static_cast<double>(i) / m);
    }
    return d;
}

namespace {

nlohmann::json json_double(double x) {
    if (std::isnan(x)) return nullptr;
    return x;
}

double double_from(const nlohmann::json& j) {
    if (j.is_null()) return kNaN;
    return j.get<double>();
}

// The config echoed into results files covers the sampling-relevant fields;
// output paths are run metadata and would break byte-identity across
// otherwise identical runs writing to different locations.
nlohmann::json config_to_json(const ExperimentConfig& cfg) {
    nlohmann::json j{{"model", cfg.model},     {"n", cfg.ns},
                     {"replicates", cfg.replicates}, {"gamma", cfg.gamma},
                     {"epsilon", cfg.epsilon}, {"j", cfg.top_j}};
    if (cfg.seed) j["seed"] = *cfg.seed;
    return j;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    cfg.model = j.at("model").get<std::string>();
    cfg.ns = j.at("n").get<std::vector<std::uint64_t>>();
    cfg.replicates = j.at("replicates").get<std::uint32_t>();
    cfg.gamma = j.at("gamma").get<double>();
    cfg.epsilon = j.at("epsilon").get<double>();
    cfg.top_j = j.at("j").get<std::uint32_t>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    return cfg;
}

nlohmann::json record_to_json(const ReplicateRecord& r) {
    return nlohmann::json{{"n", r.n},
                          {"replicate", r.replicate},
                          {"seed", r.seed},
                          {"top_sizes", r.top_sizes},
                          {"top_edges", r.top_edges},
                          {"top_degrees", r.top_degrees},
                          {"mu_n", json_double(r.mu_n)},
                          {"nu_n", json_double(r.nu_n)},
                          {"delta", r.delta},
                          {"ratio", json_double(r.ratio)},
                          {"residual", json_double(r.residual)},
                          {"norm_delta", json_double(r.norm_delta)},
                          {"bad_components", r.bad_components},
                          {"topJ_distinct", r.topj_distinct}};
}

ReplicateRecord record_from_json(const nlohmann::json& j) {
    ReplicateRecord r;
    r.n = j.at("n").get<std::uint64_t>();
    r.replicate = j.at("replicate").get<std::uint32_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.top_sizes = j.at("top_sizes").get<std::vector<std::uint64_t>>();
    r.top_edges = j.at("top_edges").get<std::vector<std::uint64_t>>();
    r.top_degrees = j.at("top_degrees").get<std::vector<std::uint32_t>>();
    r.mu_n = double_from(j.at("mu_n"));
    r.nu_n = double_from(j.at("nu_n"));
    r.delta = j.at("delta").get<std::uint32_t>();
    r.ratio = double_from(j.at("ratio"));
    r.residual = double_from(j.at("residual"));
    r.norm_delta = double_from(j.at("norm_delta"));
    r.bad_components = j.at("bad_components").get<std::uint64_t>();
    r.topj_distinct = j.at("topJ_distinct").get<bool>();
    return r;
}

nlohmann::json stats_to_json(const AggregateStats& s) {
    return nlohmann::json{{"mean", json_double(s.mean)}, {"median", json_double(s.median)},
                          {"q05", json_double(s.q05)},   {"q25", json_double(s.q25)},
                          {"q75", json_double(s.q75)},   {"q95", json_double(s.q95)}};
}

AggregateStats stats_from_json(const nlohmann::json& j) {
    AggregateStats s;
    s.mean = double_from(j.at("mean"));
    s.median = double_from(j.at("median"));
    s.q05 = double_from(j.at("q05"));
    s.q25 = double_from(j.at("q25"));
    s.q75 = double_from(j.at("q75"));
    s.q95 = double_from(j.at("q95"));
    return s;
}

nlohmann::json aggregate_to_json(const NAggregate& a) {
    return nlohmann::json{{"n", a.n},
                          {"count", a.count},
                          {"ratio", stats_to_json(a.ratio)},
                          {"residual", stats_to_json(a.residual)},
                          {"ks_norm_delta", json_double(a.ks_norm_delta)},
                          {"bad_fraction", a.bad_fraction},
                          {"topJ_distinct_fraction", a.topj_distinct_fraction},
                          {"mean_norm_excess", a.mean_norm_excess},
                          {"max_norm_c1", a.max_norm_c1}};
}

NAggregate aggregate_from_json(const nlohmann::json& j) {
    NAggregate a;
    a.n = j.at("n").get<std::uint64_t>();
    a.count = j.at("count").get<std::uint32_t>();
    a.ratio = stats_from_json(j.at("ratio"));
    a.residual = stats_from_json(j.at("residual"));
    a.ks_norm_delta = double_from(j.at("ks_norm_delta"));
    a.bad_fraction = j.at("bad_fraction").get<double>();
    a.topj_distinct_fraction = j.at("topJ_distinct_fraction").get<double>();
    a.mean_norm_excess = j.at("mean_norm_excess").get<double>();
    a.max_norm_c1 = j.at("max_norm_c1").get<double>();
    return a;
}

std::string records_csv(const ExperimentResult& result) {
    std::string out =
        "n,replicate,seed,c1_size,c1_edges,c2_size,delta,delta2,mu_n,nu_n,"
        "ratio,residual,norm_delta,bad_components,topJ_distinct\n";
    for (const auto& r : result.records) {
        const std::uint64_t c2 = r.top_sizes.size() > 1 ? r.top_sizes[1] : 0;
        const std::uint32_t d2 = r.top_degrees.size() > 1 ? r.top_degrees[1] : 0;
        out += std::to_string(r.n) + ',' + std::to_string(r.replicate) + ',' +
               std::to_string(r.seed) + ',' + std::to_string(r.top_sizes[0]) + ',' +
               std::to_string(r.top_edges[0]) + ',' + std::to_string(c2) + ',' +
               std::to_string(r.delta) + ',' + std::to_string(d2) + ',' +
               format_double(r.mu_n) + ',' + format_double(r.nu_n) + ',' +
               format_double(r.ratio) + ',' + format_double(r.residual) + ',' +
               format_double(r.norm_delta) + ',' + std::to_string(r.bad_components) +
               ',' + (r.topj_distinct ? "1" : "0") + '\n';
    }
    return out;
}

std::string aggregates_sidecar_path(const std::string& csv_path) {
    const std::string suffix = ".csv";
    if (csv_path.size() > suffix.size() &&
        csv_path.compare(csv_path.size() - suffix.size(), suffix.size(), suffix) == 0) {
        return csv_path.substr(0, csv_path.size() - suffix.size()) +
               ".aggregates.json";
    }
    return csv_path + ".aggregates.json";
}

}  // namespace

void write_results(const ExperimentResult& result, const std::string& path,
                   ResultFormat format) {
    if (format == ResultFormat::csv) {
        atomic_write_text(path, records_csv(result));
        nlohmann::json aggs = nlohmann::json::array();
        for (const auto& a : result.aggregates) aggs.push_back(aggregate_to_json(a));
        atomic_write_text(aggregates_sidecar_path(path), aggs.dump(2) + "\n");
        return;
    }
    nlohmann::json j;
    j["config"] = config_to_json(result.config);
    j["records"] = nlohmann::json::array();
    for (const auto& r : result.records) j["records"].push_back(record_to_json(r));
    j["aggregates"] = nlohmann::json::array();
    for (const auto& a : result.aggregates) j["aggregates"].push_back(aggregate_to_json(a));
    atomic_write_text(path, j.dump(2) + "\n");
}

ExperimentResult read_results_json(const std::string& path) {
    const nlohmann::json j = nlohmann::json::parse(read_text_file(path));
    ExperimentResult result;
    result.config = config_from_json(j.at("config"));
    for (const auto& rj : j.at("records")) {
        result.records.push_back(record_from_json(rj));
    }
    for (const auto& aj : j.at("aggregates")) {
        result.aggregates.push_back(aggregate_from_json(aj));
    }
    return result;
}

namespace {

bool eq_nan(double a, double b) {
    if (std::isnan(a) && std::isnan(b)) return true;
    return a == b;
}

bool stats_equal(const AggregateStats& a, const AggregateStats& b) {
    return eq_nan(a.mean, b.mean) && eq_nan(a.median, b.median) &&
           eq_nan(a.q05, b.q05) && eq_nan(a.q25, b.q25) && eq_nan(a.q75, b.q75) &&
           eq_nan(a.q95, b.q95);
}

}  // namespace

bool results_equal(const ExperimentResult& a, const ExperimentResult& b) {
    ExperimentConfig ca = a.config, cb = b.config;
    ca.out_csv.clear();
    ca.out_json.clear();
    cb.out_csv.clear();
    cb.out_json.clear();
    if (!(ca == cb)) return false;
    if (a.records.size() != b.records.size()) return false;
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        const auto& x = a.records[i];
        const auto& y = b.records[i];
        if (x.n != y.n || x.replicate != y.replicate || x.seed != y.seed ||
            x.top_sizes != y.top_sizes || x.top_edges != y.top_edges ||
            x.top_degrees != y.top_degrees || !eq_nan(x.mu_n, y.mu_n) ||
            !eq_nan(x.nu_n, y.nu_n) || x.delta != y.delta ||
            !eq_nan(x.ratio, y.ratio) || !eq_nan(x.residual, y.residual) ||
            !eq_nan(x.norm_delta, y.norm_delta) ||
            x.bad_components != y.bad_components ||
            x.topj_distinct != y.topj_distinct) {
            return false;
        }
    }
    if (a.aggregates.size() != b.aggregates.size()) return false;
    for (std::size_t i = 0; i < a.aggregates.size(); ++i) {
        const auto& x = a.aggregates[i];
        const auto& y = b.aggregates[i];
        if (x.n != y.n || x.count != y.count || !stats_equal(x.ratio, y.ratio) ||
            !stats_equal(x.residual, y.residual) ||
            !eq_nan(x.ks_norm_delta, y.ks_norm_delta) ||
            x.bad_fraction != y.bad_fraction ||
            x.topj_distinct_fraction != y.topj_distinct_fraction ||
            x.mean_norm_excess != y.mean_norm_excess ||
            x.max_norm_c1 != y.max_norm_c1) {
            return false;
        }
    }
    return true;
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

template <typename T>
T parse_unsigned(const std::string& text, const std::string& key) {
    T value{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw std::invalid_argument("config: invalid " + key + " value '" + text + "'");
    }
    return value;
}

double parse_real(const std::string& text, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: invalid " + key + " value '" + text + "'");
    }
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    std::vector<std::string> unknown;
    std::stringstream ss(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "model") {
            cfg.model = value;
        } else if (key == "n") {
            cfg.ns.clear();
            std::stringstream ns(value);
            std::string item;
            while (std::getline(ns, item, ',')) {
                cfg.ns.push_back(parse_unsigned<std::uint64_t>(trim(item), "n"));
            }
            if (cfg.ns.empty()) {
                throw std::invalid_argument("config: n needs at least one value");
            }
        } else if (key == "replicates") {
            cfg.replicates = parse_unsigned<std::uint32_t>(value, "replicates");
        } else if (key == "seed") {
            cfg.seed = parse_unsigned<std::uint64_t>(value, "seed");
        } else if (key == "gamma") {
            cfg.gamma = parse_real(value, "gamma");
        } else if (key == "epsilon") {
            cfg.epsilon = parse_real(value, "epsilon");
        } else if (key == "j") {
            cfg.top_j = parse_unsigned<std::uint32_t>(value, "j");
        } else if (key == "out_csv") {
            cfg.out_csv = value;
        } else if (key == "out_json") {
            cfg.out_json = value;
        } else {
            unknown.push_back(key);
        }
    }
    if (!unknown.empty()) {
        std::string msg = "config: unknown keys:";
        for (const auto& k : unknown) msg += " " + k;
        throw std::invalid_argument(msg);
    }
    validate_config(cfg);
    return cfg;
}

ExperimentConfig parse_config(const std::string& path) {
    return parse_config_text(read_text_file(path));
}

std::string config_to_text(const ExperimentConfig& cfg) {
    std::string out;
    out += "model = " + cfg.model + "\n";
    out += "n = ";
    for (std::size_t i = 0; i < cfg.ns.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(cfg.ns[i]);
    }
    out += "\n";
    out += "replicates = " + std::to_string(cfg.replicates) + "\n";
    if (cfg.seed) out += "seed = " + std::to_string(*cfg.seed) + "\n";
    out += "gamma = " + format_double(cfg.gamma) + "\n";
    out += "epsilon = " + format_double(cfg.epsilon) + "\n";
    out += "j = " + std::to_string(cfg.top_j) + "\n";
    if (!cfg.out_csv.empty()) out += "out_csv = " + cfg.out_csv + "\n";
    if (!cfg.out_json.empty()) out += "out_json = " + cfg.out_json + "\n";
    return out;
}

void write_config(const ExperimentConfig& cfg, const std::string& path) {
    atomic_write_text(path, config_to_text(cfg));
}

}  // namespace subcrit
