#include "subcrit/models.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "subcrit/configuration.hpp"
#include "subcrit/io.hpp"

namespace subcrit {

MultiGraph nsw_sample(const DegreeDistribution& dist, std::uint32_t n, Rng& rng) {
    const DegreeSequence seq =
        sample_iid_sequence(dist, n, Parity::require_even, rng);
    return pair_half_edges(seq, rng);
}

ParetoWeights ParetoWeights::from_target_nu(double gamma, double nu) {
    if (!(gamma > 3.0)) {
        throw std::invalid_argument("pareto weights need gamma > 3 for a finite E W^2");
    }
    if (!(nu > 0.0)) throw std::invalid_argument("target nu must be positive");
    ParetoWeights w;
    w.gamma = gamma;
    w.x0 = std::sqrt(nu * (gamma - 3.0) / (gamma - 1.0));
    return w;
}

double ParetoWeights::sample(Rng& rng) const {
    return x0 * std::pow(uniform01_pos(rng), -1.0 / (gamma - 1.0));
}

double rank1_edge_probability(Rank1Variant variant, double wi, double wj,
                              std::uint64_t n, double weight_sum) {
    const double ww = wi * wj;
    switch (variant) {
        case Rank1Variant::bdm:
            return ww / (static_cast<double>(n) + ww);
        case Rank1Variant::chung_lu:
            return std::min(ww / weight_sum, 1.0);
        case Rank1Variant::plain:
            return std::min(ww / static_cast<double>(n), 1.0);
    }
    return 0.0;
}

namespace {

void validate_weights(const std::vector<double>& weights) {
    for (const double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw std::invalid_argument("weights must be finite and nonnegative");
        }
    }
}

double weight_total(Rank1Variant variant, const std::vector<double>& weights) {
    if (variant != Rank1Variant::chung_lu) return 0.0;
    const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(sum > 0.0)) {
        throw std::invalid_argument("chung_lu requires a positive weight sum");
    }
    return sum;
}

}  // namespace

MultiGraph rank1_sample_pairwise(Rank1Variant variant,
                                 const std::vector<double>& weights, Rng& rng) {
    validate_weights(weights);
    const std::uint64_t n = weights.size();
    const double wsum = weight_total(variant, weights);
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
        if (weights[i] == 0.0) continue;
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const double p = rank1_edge_probability(variant, weights[i], weights[j],
                                                    n, wsum);
            if (p > 0.0 && uniform01(rng) < p) edges.emplace_back(i, j);
        }
    }
    return MultiGraph(static_cast<std::uint32_t>(n), std::move(edges));
}

MultiGraph rank1_sample_skip(Rank1Variant variant, const std::vector<double>& weights,
                             Rng& rng) {
    validate_weights(weights);
    const std::uint64_t n = weights.size();
    const double wsum = weight_total(variant, weights);

    // Descending weights make p(a, b) non-increasing in b, so the probability
    // at the current position bounds everything to its right.
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&weights](std::uint32_t a, std::uint32_t b) {
        if (weights[a] != weights[b]) return weights[a] > weights[b];
        return a < b;
    });

    std::vector<Edge> edges;
    for (std::uint64_t a = 0; a < n; ++a) {
        const double wi = weights[order[a]];
        if (wi == 0.0) break;
        std::uint64_t b = a + 1;
        while (b < n) {
            const double q = rank1_edge_probability(variant, wi, weights[order[b]],
                                                    n, wsum);
            if (q <= 0.0) break;
            if (q >= 1.0) {
                edges.emplace_back(order[a], order[b]);
                ++b;
                continue;
            }
            // candidate = b + Geom(q) failures; thin the landing with p/q
            const double u = uniform01(rng);
            const double skip = std::floor(std::log1p(-u) / std::log1p(-q));
            if (!(skip < static_cast<double>(n - b))) break;
            b += static_cast<std::uint64_t>(skip);
            const double p = rank1_edge_probability(variant, wi, weights[order[b]],
                                                    n, wsum);
            if (uniform01(rng) * q < p) edges.emplace_back(order[a], order[b]);
            ++b;
        }
    }
    return MultiGraph(static_cast<std::uint32_t>(n), std::move(edges));
}

MultiGraph rank1_sample(const Rank1Params& params, std::uint32_t n, Rng& rng) {
    std::vector<double> weights;
    if (!params.weights.empty()) {
        if (params.weights.size() != n) {
            throw std::invalid_argument("rank1: weight count must equal n");
        }
        weights = params.weights;
    } else if (params.weight_dist) {
        weights.resize(n);
        for (auto& w : weights) w = params.weight_dist->sample(rng);
    } else {
        throw std::invalid_argument("rank1: no weights and no weight distribution");
    }
    if (n >= kPairwiseCutoff) {
        return rank1_sample_skip(params.variant, weights, rng);
    }
    return rank1_sample_pairwise(params.variant, weights, rng);
}

RealizedStats realized_stats(const MultiGraph& g) {
    if (g.vertex_count() == 0) {
        throw std::invalid_argument("realized_stats needs at least one vertex");
    }
    const DegreeSequence seq(g.degrees());
    RealizedStats out;
    out.mu = mu(seq);
    out.delta = seq.max_degree();
    if (seq.degree_sum() > 0) out.nu = nu(seq);
    return out;
}

double FrechetLaw::cdf(double x) const {
    if (!(x > 0.0)) return 0.0;
    return std::exp(-std::pow(x / scale, 1.0 - gamma));
}

double FrechetLaw::quantile(double q) const {
    if (!(q > 0.0 && q < 1.0)) {
        throw std::invalid_argument("frechet quantile needs q in (0,1)");
    }
    return scale * std::pow(-std::log(q), 1.0 / (1.0 - gamma));
}

namespace {

Rank1Variant parse_variant(const std::string& text) {
    if (text == "bdm") return Rank1Variant::bdm;
    if (text == "chung_lu") return Rank1Variant::chung_lu;
    if (text == "plain") return Rank1Variant::plain;
    throw std::invalid_argument("unknown rank1 variant '" + text +
                                "' (expected bdm, chung_lu or plain)");
}

std::string variant_name(Rank1Variant v) {
    switch (v) {
        case Rank1Variant::bdm: return "bdm";
        case Rank1Variant::chung_lu: return "chung_lu";
        case Rank1Variant::plain: return "plain";
    }
    return "?";
}

ParetoWeights parse_pareto(const std::string& text) {
    // "gamma=G,nu=NU"
    double gamma = 0.0, nu = 0.0;
    bool have_gamma = false, have_nu = false;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("pareto parameter must be key=value, got '" +
                                        item + "'");
        }
        const std::string key = item.substr(0, eq);
        const double value = std::stod(item.substr(eq + 1));
        if (key == "gamma") {
            gamma = value;
            have_gamma = true;
        } else if (key == "nu") {
            nu = value;
            have_nu = true;
        } else {
            throw std::invalid_argument("unknown pareto parameter '" + key + "'");
        }
    }
    if (!have_gamma || !have_nu) {
        throw std::invalid_argument("pareto weights need gamma=... and nu=...");
    }
    return ParetoWeights::from_target_nu(gamma, nu);
}

}  // namespace

ModelSpec ModelSpec::parse(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    ModelSpec out;
    if (head == "nsw") {
        if (colon == std::string::npos) {
            throw std::invalid_argument("nsw spec needs a distribution, e.g. "
                                        "nsw:zeta:gamma=4");
        }
        out.kind = Kind::nsw;
        out.dist = parse_distribution_spec(spec.substr(colon + 1));
        return out;
    }
    if (head == "rank1") {
        if (colon == std::string::npos) {
            throw std::invalid_argument("rank1 spec needs a variant, e.g. rank1:bdm");
        }
        out.kind = Kind::rank1;
        const std::string rest = spec.substr(colon + 1);
        const auto colon2 = rest.find(':');
        out.rank1.variant = parse_variant(rest.substr(0, colon2));
        if (colon2 != std::string::npos) {
            const std::string wspec = rest.substr(colon2 + 1);
            if (wspec.rfind("pareto:", 0) != 0) {
                throw std::invalid_argument("unknown rank1 weight law '" + wspec +
                                            "' (expected pareto:gamma=...,nu=...)");
            }
            out.rank1.weight_dist = parse_pareto(wspec.substr(7));
        }
        return out;
    }
    throw std::invalid_argument("unknown model spec '" + spec +
                                "' (expected nsw:... or rank1:...)");
}

std::string ModelSpec::str() const {
    if (kind == Kind::nsw) return "nsw:" + dist->spec();
    std::string out = "rank1:" + variant_name(rank1.variant);
    if (rank1.weight_dist) {
        out += ":pareto:gamma=" + format_double(rank1.weight_dist->gamma) +
               ",nu=" + format_double(rank1.weight_dist->second_moment());
    }
    return out;
}

std::optional<double> ModelSpec::tail_constant() const {
    if (kind == Kind::nsw && dist) return dist->tail_constant();
    return std::nullopt;
}

std::optional<double> ModelSpec::gamma() const {
    if (kind == Kind::nsw && dist) return dist->gamma();
    if (kind == Kind::rank1 && rank1.weight_dist) return rank1.weight_dist->gamma;
    return std::nullopt;
}

MultiGraph sample_model(const ModelSpec& model, std::uint32_t n, Rng& rng) {
    if (model.kind == ModelSpec::Kind::nsw) {
        return nsw_sample(*model.dist, n, rng);
    }
    return rank1_sample(model.rank1, n, rng);
}

std::vector<double> load_weights(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::vector<double> weights;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::string where = "'" + path + "' line " + std::to_string(lineno);
        try {
            std::size_t pos = 0;
            const double w = std::stod(line, &pos);
            if (pos != line.size()) throw std::invalid_argument("trailing characters");
            if (!(w >= 0.0) || !std::isfinite(w)) {
                throw std::invalid_argument("negative or non-finite");
            }
            weights.push_back(w);
        } catch (const std::exception&) {
            throw std::runtime_error("invalid weight at " + where + ": '" + line + "'");
        }
    }
    return weights;
}

}  // namespace subcrit
