#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "subcrit/multigraph.hpp"

namespace subcrit {

enum class ExplorePolicy { fifo, lifo };

/// One run of the half-edge exploration from a root. Each step consumes one
/// edge; s tracks the true number of active half-edges, so a step into an
/// already-used vertex removes both half-edges (net -2) and s hits 0 exactly
/// when the component's edges are exhausted (tau = component edge count).
struct ExplorationTrace {
    std::uint32_t root = 0;
    std::vector<std::uint64_t> s;    // S_0 .. S_tau
    std::vector<std::uint32_t> xi;   // xi_1 .. xi_tau (0 on back-edge steps)
    std::vector<bool> new_vertex;    // per step: did it discover a vertex?
    std::uint64_t tau = 0;
    std::vector<std::uint32_t> visited;  // sorted vertex ids of the component
};

ExplorationTrace explore(const MultiGraph& g, std::uint32_t root,
                         ExplorePolicy policy = ExplorePolicy::fifo);

/// Breadth-first generation counts around a root.
/// counts[j-1][k-1] = vertices of degree k at distance exactly j (j <= J,
/// k <= K); frontier[j] = |H_j|, the active half-edges remaining once every
/// half-edge at distance < j has been processed (|H_0| = deg(root)).
struct GenerationCounts {
    std::vector<std::uint64_t> frontier;
    std::vector<std::vector<std::uint64_t>> counts;
};

GenerationCounts bfs_generations(const MultiGraph& g, std::uint32_t root,
                                 std::uint32_t max_depth, std::uint32_t max_degree);

/// {"root":..,"tau":..,"s":[..],"visited_count":..,"generations":[[..]],
///  "frontier":[..]}; generations/frontier are null without a gens argument.
nlohmann::json trace_to_json(const ExplorationTrace& trace,
                             const GenerationCounts* gens = nullptr);

}  // namespace subcrit
