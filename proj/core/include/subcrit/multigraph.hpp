#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace subcrit {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Undirected multigraph over vertices [0, n). Loops and parallel edges are
/// allowed; the edge list is kept canonical (u <= v, lexicographically sorted)
/// so serialized output is bit-stable.
class MultiGraph {
public:
    MultiGraph() = default;
    MultiGraph(std::uint32_t n, std::vector<Edge> edges);

    std::uint32_t vertex_count() const noexcept { return n_; }
    std::uint64_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Realized degrees; a loop adds 2 to its vertex.
    std::vector<std::uint32_t> degrees() const;

private:
    std::uint32_t n_ = 0;
    std::vector<Edge> edges_;
};

/// True iff the graph has no loop and no parallel edge.
bool is_simple(const MultiGraph& g);

/// Drop loops, merge parallel edges; the vertex set is unchanged.
MultiGraph erase(const MultiGraph& g);

/// Edge-list CSV with header "u,v". The vertex count is inferred as
/// max endpoint + 1 on load.
MultiGraph load_graph(const std::string& path);
void save_graph(const MultiGraph& g, const std::string& path);

/// Half-edge view of a realized multigraph: edge e owns half-edges 2e (at u)
/// and 2e+1 (at v); partner(h) = h ^ 1. Incident lists are in edge order.
struct HalfEdgeIndex {
    std::vector<std::uint32_t> owner;     // half-edge -> vertex
    std::vector<std::uint64_t> offsets;   // CSR offsets per vertex
    std::vector<std::uint32_t> incident;  // half-edge ids grouped by owner

    static HalfEdgeIndex build(const MultiGraph& g);
    std::uint32_t degree(std::uint32_t v) const {
        return static_cast<std::uint32_t>(offsets[v + 1] - offsets[v]);
    }
};

}  // namespace subcrit
