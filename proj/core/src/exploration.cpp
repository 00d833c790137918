#include "subcrit/exploration.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace subcrit {

ExplorationTrace explore(const MultiGraph& g, std::uint32_t root,
                         ExplorePolicy policy) {
    if (root >= g.vertex_count()) {
        throw std::invalid_argument("explore: root out of range [0, n)");
    }
    const HalfEdgeIndex idx = HalfEdgeIndex::build(g);

    ExplorationTrace trace;
    trace.root = root;

    std::vector<char> consumed(idx.owner.size(), 0);
    std::vector<char> used(g.vertex_count(), 0);
    std::deque<std::uint32_t> active;

    used[root] = 1;
    trace.visited.push_back(root);
    for (std::uint64_t i = idx.offsets[root]; i < idx.offsets[root + 1]; ++i) {
        active.push_back(idx.incident[i]);
    }
    std::uint64_t s = idx.degree(root);
    trace.s.push_back(s);

    while (s > 0) {
        std::uint32_t x;
        do {  // skip half-edges consumed from the partner side
            if (policy == ExplorePolicy::fifo) {
                x = active.front();
                active.pop_front();
            } else {
                x = active.back();
                active.pop_back();
            }
        } while (consumed[x]);

        const std::uint32_t y = x ^ 1u;
        const std::uint32_t v = idx.owner[y];
        consumed[x] = 1;
        consumed[y] = 1;
        std::uint32_t xi = 0;
        bool fresh = false;
        if (!used[v]) {
            used[v] = 1;
            fresh = true;
            trace.visited.push_back(v);
            xi = idx.degree(v) - 1;
            for (std::uint64_t i = idx.offsets[v]; i < idx.offsets[v + 1]; ++i) {
                const std::uint32_t h = idx.incident[i];
                if (h != y) active.push_back(h);
            }
            s += xi;
            s -= 1;
        } else {
            // back edge or loop: y was active too, both leave the active set
            s -= 2;
        }
        trace.xi.push_back(xi);
        trace.new_vertex.push_back(fresh);
        trace.s.push_back(s);
        ++trace.tau;
    }

    std::sort(trace.visited.begin(), trace.visited.end());
    return trace;
}

GenerationCounts bfs_generations(const MultiGraph& g, std::uint32_t root,
                                 std::uint32_t max_depth, std::uint32_t max_degree) {
    if (root >= g.vertex_count()) {
        throw std::invalid_argument("bfs_generations: root out of range [0, n)");
    }
    if (max_depth == 0 || max_degree == 0) {
        throw std::invalid_argument("bfs_generations: J and K must be >= 1");
    }
    const HalfEdgeIndex idx = HalfEdgeIndex::build(g);

    GenerationCounts out;
    out.counts.assign(max_depth, std::vector<std::uint64_t>(max_degree, 0u));

    std::vector<char> consumed(idx.owner.size(), 0);
    std::vector<char> used(g.vertex_count(), 0);
    used[root] = 1;

    std::vector<std::uint32_t> stage;
    for (std::uint64_t i = idx.offsets[root]; i < idx.offsets[root + 1]; ++i) {
        stage.push_back(idx.incident[i]);
    }
    std::uint64_t s = idx.degree(root);
    out.frontier.push_back(s);  // |H_0|

    // Stage j consumes the half-edges at distance-j vertices; whatever is
    // still active afterwards is H_{j+1}.
    for (std::uint32_t depth = 1; depth <= max_depth; ++depth) {
        std::vector<std::uint32_t> next;
        for (const std::uint32_t x : stage) {
            if (consumed[x]) continue;
            const std::uint32_t y = x ^ 1u;
            const std::uint32_t v = idx.owner[y];
            consumed[x] = 1;
            consumed[y] = 1;
            if (!used[v]) {
                used[v] = 1;
                const std::uint32_t d = idx.degree(v);
                if (d >= 1 && d <= max_degree) {
                    ++out.counts[depth - 1][d - 1];
                }
                for (std::uint64_t i = idx.offsets[v]; i < idx.offsets[v + 1]; ++i) {
                    const std::uint32_t h = idx.incident[i];
                    if (h != y) next.push_back(h);
                }
                s += d - 1;
                s -= 1;
            } else {
                s -= 2;
            }
        }
        out.frontier.push_back(s);  // |H_depth|
        stage = std::move(next);
    }
    return out;
}

nlohmann::json trace_to_json(const ExplorationTrace& trace,
                             const GenerationCounts* gens) {
    nlohmann::json j{{"root", trace.root},
                     {"tau", trace.tau},
                     {"s", trace.s},
                     {"visited_count", trace.visited.size()}};
    if (gens != nullptr) {
        j["generations"] = gens->counts;
        j["frontier"] = gens->frontier;
    } else {
        j["generations"] = nullptr;
        j["frontier"] = nullptr;
    }
    return j;
}

}  // namespace subcrit
