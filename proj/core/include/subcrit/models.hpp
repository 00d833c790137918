#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subcrit/degrees.hpp"
#include "subcrit/multigraph.hpp"
#include "subcrit/random.hpp"

namespace subcrit {

/// i.i.d. degrees conditioned on an even sum, then one configuration-model
/// pairing. The result is a multigraph; erase() or sample_simple() are the
/// caller's post-treatments.
MultiGraph nsw_sample(const DegreeDistribution& dist, std::uint32_t n, Rng& rng);

enum class Rank1Variant { bdm, chung_lu, plain };

/// Pareto-type weight law P(W >= x) = min(1, (x/x0)^(1-gamma)), x0 > 0.
struct ParetoWeights {
    double gamma = 4.0;
    double x0 = 1.0;

    /// x0 calibrated so E W^2 = nu (the bdm-normalization offspring mean).
    static ParetoWeights from_target_nu(double gamma, double nu);

    double sample(Rng& rng) const;
    double mean() const { return x0 * (gamma - 1.0) / (gamma - 2.0); }
    double second_moment() const { return x0 * x0 * (gamma - 1.0) / (gamma - 3.0); }
};

struct Rank1Params {
    Rank1Variant variant = Rank1Variant::bdm;
    std::vector<double> weights;               // explicit; wins over weight_dist
    std::optional<ParetoWeights> weight_dist;  // i.i.d. weights when set
};

/// Edge probability of the variant: bdm = wi wj/(n + wi wj),
/// chung_lu = wi wj / weight_sum, plain = wi wj / n; the last two clamp at 1.
double rank1_edge_probability(Rank1Variant variant, double wi, double wj,
                              std::uint64_t n, double weight_sum);

/// Independent edges over pairs i < j; simple by construction.
/// Picks the skip sampler above kPairwiseCutoff vertices.
MultiGraph rank1_sample(const Rank1Params& params, std::uint32_t n, Rng& rng);

inline constexpr std::uint32_t kPairwiseCutoff = 8192;

/// O(n^2) per-pair Bernoulli reference path.
MultiGraph rank1_sample_pairwise(Rank1Variant variant,
                                 const std::vector<double>& weights, Rng& rng);

/// Geometric skips over weight-sorted pairs with acceptance thinning; O(n + m).
MultiGraph rank1_sample_skip(Rank1Variant variant, const std::vector<double>& weights,
                             Rng& rng);

struct RealizedStats {
    double mu = 0.0;
    std::optional<double> nu;  // absent when mu = 0
    std::uint32_t delta = 0;
};

/// mu, nu, max degree of the realized graph (loops count twice).
RealizedStats realized_stats(const MultiGraph& g);

/// P(Z <= x) = exp(-(x/scale)^(1-gamma)) for x > 0; the max-degree limit law.
struct FrechetLaw {
    double gamma = 4.0;
    double scale = 1.0;

    double cdf(double x) const;
    double quantile(double q) const;  // q in (0,1)
};

/// "nsw:<dist-spec>" or "rank1:<variant>[:pareto:gamma=G,nu=NU]"; a rank1 spec
/// without a weight law needs weights supplied at sampling time.
struct ModelSpec {
    enum class Kind { nsw, rank1 };

    Kind kind = Kind::nsw;
    std::optional<DegreeDistribution> dist;  // nsw
    Rank1Params rank1;                       // rank1

    static ModelSpec parse(const std::string& spec);
    std::string str() const;

    /// a1 of P(D >= k) ~ a1 k^(1-gamma) when the model knows it.
    std::optional<double> tail_constant() const;
    std::optional<double> gamma() const;
};

MultiGraph sample_model(const ModelSpec& model, std::uint32_t n, Rng& rng);

/// Weight file: one nonnegative decimal per line.
std::vector<double> load_weights(const std::string& path);

}  // namespace subcrit
