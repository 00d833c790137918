#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "subcrit/degrees.hpp"
#include "subcrit/multigraph.hpp"

namespace subcrit {

/// Connected components in canonical order: size descending, ties broken by
/// the smallest contained vertex id. Loops contribute one edge to their
/// component's edge count.
struct ComponentSummary {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> comp_of;      // vertex -> component rank
    std::vector<std::uint64_t> sizes;        // non-increasing
    std::vector<std::uint64_t> edge_counts;  // aligned with sizes

    std::size_t count() const noexcept { return sizes.size(); }
};

/// Union-find with path compression and union by size.
ComponentSummary components(const MultiGraph& g);

/// edges - vertices of the j-th largest component (1-based j); -1 for trees.
std::int64_t excess(const ComponentSummary& summary, std::size_t j);

/// Vertices with degree >= epsilon * n^(1/(gamma-1)), compared as reals.
/// gamma > 3 is the regime of interest; anything > 1 is accepted.
std::vector<std::uint32_t> fat_vertices(const DegreeSequence& seq, double epsilon,
                                        double gamma);

/// Number of components holding at least two of the given vertices.
std::uint64_t count_bad_components(const ComponentSummary& summary,
                                   const std::vector<std::uint32_t>& fat);

/// {"sizes": [...], "edge_counts": [...], "n": n}
nlohmann::json to_json(const ComponentSummary& summary);

}  // namespace subcrit
