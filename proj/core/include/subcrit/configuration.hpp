#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "subcrit/degrees.hpp"
#include "subcrit/multigraph.hpp"
#include "subcrit/random.hpp"

namespace subcrit {

/// A uniform perfect matching of the half-edges of a degree sequence.
/// Half-edge ids are vertex-major: vertex 0 owns ids [0, d_0), and so on.
struct Configuration {
    std::vector<std::uint32_t> half_edge_owner;
    std::vector<std::uint32_t> matching;  // involution without fixed points

    /// Canonical (min, max) half-edge pairs, sorted; the matching's identity.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> matched_pairs() const;
};

/// Uniform over all (sum d - 1)!! matchings: Fisher-Yates over the half-edge
/// ids, then pair consecutive slots. Throws std::invalid_argument on odd sum.
Configuration sample_configuration(const DegreeSequence& seq, Rng& rng);

MultiGraph multigraph_from(const Configuration& config, std::uint32_t n);

/// One configuration-model draw collapsed to its multigraph.
MultiGraph pair_half_edges(const DegreeSequence& seq, Rng& rng);

struct SimpleSampleResult {
    MultiGraph graph;
    std::uint32_t tries = 0;
};

/// Rejection sampling of a uniform simple graph with the given degrees.
/// Throws std::runtime_error after max_tries failures.
SimpleSampleResult sample_simple(const DegreeSequence& seq, Rng& rng,
                                 std::uint32_t max_tries = 1000);

struct SimpleProbabilityEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Monte Carlo estimate of P(configuration draw is simple), with the binomial
/// standard error.
SimpleProbabilityEstimate estimate_simple_probability(const DegreeSequence& seq,
                                                      std::uint32_t reps, Rng& rng);

}  // namespace subcrit
