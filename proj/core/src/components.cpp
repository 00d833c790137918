#include "subcrit/components.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace subcrit {

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> size;

    explicit UnionFind(std::uint32_t n) : parent(n), size(n, 1u) {
        std::iota(parent.begin(), parent.end(), 0u);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];  // path halving
            x = parent[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

}  // namespace

ComponentSummary components(const MultiGraph& g) {
    const std::uint32_t n = g.vertex_count();
    UnionFind uf(n);
    for (const auto& [u, v] : g.edges()) uf.unite(u, v);

    std::vector<std::uint64_t> edge_at_root(n, 0u);
    for (const auto& [u, v] : g.edges()) ++edge_at_root[uf.find(u)];

    // Scanning vertices in id order makes each component's first vertex its
    // minimum, which is the tie-break key.
    struct Comp {
        std::uint64_t size;
        std::uint32_t min_vertex;
        std::uint64_t edges;
    };
    std::vector<Comp> comps;
    std::vector<std::uint32_t> slot_of_root(n, 0xffffffffu);
    for (std::uint32_t v = 0; v < n; ++v) {
        const std::uint32_t r = uf.find(v);
        if (slot_of_root[r] == 0xffffffffu) {
            slot_of_root[r] = static_cast<std::uint32_t>(comps.size());
            comps.push_back(Comp{uf.size[r], v, edge_at_root[r]});
        }
    }
    std::vector<std::uint32_t> order(comps.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&comps](std::uint32_t a, std::uint32_t b) {
        if (comps[a].size != comps[b].size) return comps[a].size > comps[b].size;
        return comps[a].min_vertex < comps[b].min_vertex;
    });

    ComponentSummary out;
    out.n = n;
    out.sizes.resize(comps.size());
    out.edge_counts.resize(comps.size());
    std::vector<std::uint32_t> rank_of_slot(comps.size());
    for (std::uint32_t rank = 0; rank < order.size(); ++rank) {
        rank_of_slot[order[rank]] = rank;
        out.sizes[rank] = comps[order[rank]].size;
        out.edge_counts[rank] = comps[order[rank]].edges;
    }
    out.comp_of.resize(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        out.comp_of[v] = rank_of_slot[slot_of_root[uf.find(v)]];
    }
    return out;
}

std::int64_t excess(const ComponentSummary& summary, std::size_t j) {
    if (j == 0 || j > summary.count()) {
        throw std::invalid_argument("excess: component index out of range");
    }
    return static_cast<std::int64_t>(summary.edge_counts[j - 1]) -
           static_cast<std::int64_t>(summary.sizes[j - 1]);
}

std::vector<std::uint32_t> fat_vertices(const DegreeSequence& seq, double epsilon,
                                        double gamma) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (!(gamma > 1.0)) throw std::invalid_argument("gamma must exceed 1");
    const double threshold =
        epsilon * std::pow(static_cast<double>(seq.size()), 1.0 / (gamma - 1.0));
    std::vector<std::uint32_t> fat;
    for (std::uint32_t v = 0; v < seq.size(); ++v) {
        if (static_cast<double>(seq[v]) >= threshold) fat.push_back(v);
    }
    return fat;
}

std::uint64_t count_bad_components(const ComponentSummary& summary,
                                   const std::vector<std::uint32_t>& fat) {
    std::vector<std::uint32_t> fat_in_comp(summary.count(), 0u);
    std::uint64_t bad = 0;
    for (const std::uint32_t v : fat) {
        if (v >= summary.n) {
            throw std::invalid_argument("fat vertex id out of range [0, n)");
        }
        const std::uint32_t c = summary.comp_of[v];
        if (++fat_in_comp[c] == 2) ++bad;  // counted once, on the second hit
    }
    return bad;
}

nlohmann::json to_json(const ComponentSummary& summary) {
    return nlohmann::json{{"sizes", summary.sizes},
                          {"edge_counts", summary.edge_counts},
                          {"n", summary.n}};
}

}  // namespace subcrit
