#include "subcrit/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subcrit {

std::vector<std::pair<std::uint32_t, std::uint32_t>> Configuration::matched_pairs()
    const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    pairs.reserve(matching.size() / 2);
    for (std::uint32_t h = 0; h < matching.size(); ++h) {
        if (h < matching[h]) pairs.emplace_back(h, matching[h]);
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

Configuration sample_configuration(const DegreeSequence& seq, Rng& rng) {
    if (!seq.pairing_eligible()) {
        throw std::invalid_argument(
            "cannot pair half-edges: the degree sum is odd");
    }
    const std::uint64_t m = seq.degree_sum();
    if (m > 0xffffffffull || seq.size() > 0xffffffffull) {
        throw std::invalid_argument("degree sum exceeds the 2^32 half-edge limit");
    }

    Configuration config;
    config.half_edge_owner.reserve(m);
    for (std::uint32_t v = 0; v < static_cast<std::uint32_t>(seq.size()); ++v) {
        for (std::uint32_t k = 0; k < seq[v]; ++k) config.half_edge_owner.push_back(v);
    }

    std::vector<std::uint32_t> perm(m);
    for (std::uint32_t h = 0; h < m; ++h) perm[h] = h;
    for (std::uint64_t i = m; i-- > 1;) {
        const std::uint64_t j = uniform_below(rng, i + 1);
        std::swap(perm[i], perm[j]);
    }

    config.matching.resize(m);
    for (std::uint64_t i = 0; i < m; i += 2) {
        config.matching[perm[i]] = perm[i + 1];
        config.matching[perm[i + 1]] = perm[i];
    }
    return config;
}

MultiGraph multigraph_from(const Configuration& config, std::uint32_t n) {
    std::vector<Edge> edges;
    edges.reserve(config.matching.size() / 2);
    for (std::uint32_t h = 0; h < config.matching.size(); ++h) {
        if (h < config.matching[h]) {
            edges.emplace_back(config.half_edge_owner[h],
                               config.half_edge_owner[config.matching[h]]);
        }
    }
    return MultiGraph(n, std::move(edges));
}

MultiGraph pair_half_edges(const DegreeSequence& seq, Rng& rng) {
    const Configuration config = sample_configuration(seq, rng);
    return multigraph_from(config, static_cast<std::uint32_t>(seq.size()));
}

SimpleSampleResult sample_simple(const DegreeSequence& seq, Rng& rng,
                                 std::uint32_t max_tries) {
    if (max_tries == 0) throw std::invalid_argument("max_tries must be >= 1");
    for (std::uint32_t t = 1; t <= max_tries; ++t) {
        MultiGraph g = pair_half_edges(seq, rng);
        if (is_simple(g)) return SimpleSampleResult{std::move(g), t};
    }
    throw std::runtime_error("no simple pairing found after " +
                             std::to_string(max_tries) + " tries");
}

SimpleProbabilityEstimate estimate_simple_probability(const DegreeSequence& seq,
                                                      std::uint32_t reps, Rng& rng) {
    if (reps == 0) throw std::invalid_argument("reps must be >= 1");
    std::uint64_t simple = 0;
    for (std::uint32_t r = 0; r < reps; ++r) {
        if (is_simple(pair_half_edges(seq, rng))) ++simple;
    }
    SimpleProbabilityEstimate out;
    out.estimate = static_cast<double>(simple) / static_cast<double>(reps);
    out.std_error =
        std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(reps));
    return out;
}

}  // namespace subcrit
