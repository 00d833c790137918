#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <random>
#include <string>
#include <unistd.h>
#include <utility>
#include <vector>

#include "subcrit/degrees.hpp"
#include "subcrit/multigraph.hpp"

namespace testutil {

/// Unique scratch directory, removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<unsigned> counter{0};
        const auto base = std::filesystem::temp_directory_path();
        path_ = base / ("subcrit-test-" + std::to_string(::getpid()) + "-" +
                        std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

/// Random even-sum degree sequence for fuzz-style checks (test-local rng,
/// independent of the library's samplers).
inline std::vector<std::uint32_t> random_even_degrees(std::mt19937_64& rng,
                                                      std::size_t max_n = 50,
                                                      std::uint32_t max_deg = 5) {
    std::uniform_int_distribution<std::size_t> nd(1, max_n);
    const std::size_t n = nd(rng);
    std::uniform_int_distribution<std::uint32_t> dd(0, max_deg);
    std::vector<std::uint32_t> degrees(n);
    for (;;) {
        std::uint64_t sum = 0;
        for (auto& d : degrees) {
            d = dd(rng);
            sum += d;
        }
        if (sum % 2 == 0) return degrees;
    }
}

struct OracleComponent {
    std::vector<std::uint32_t> vertices;  // sorted
    std::uint64_t edges = 0;
};

/// Breadth-first components straight off the edge list; the independent
/// oracle for union-find and the exploration walk.
inline std::vector<OracleComponent> bfs_components(const subcrit::MultiGraph& g) {
    const std::uint32_t n = g.vertex_count();
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (const auto& [u, v] : g.edges()) {
        adj[u].push_back(v);
        if (u != v) adj[v].push_back(u);
    }
    std::vector<std::int64_t> comp(n, -1);
    std::vector<OracleComponent> out;
    for (std::uint32_t start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        const std::int64_t id = static_cast<std::int64_t>(out.size());
        OracleComponent c;
        std::deque<std::uint32_t> queue{start};
        comp[start] = id;
        while (!queue.empty()) {
            const std::uint32_t v = queue.front();
            queue.pop_front();
            c.vertices.push_back(v);
            for (const std::uint32_t w : adj[v]) {
                if (comp[w] < 0) {
                    comp[w] = id;
                    queue.push_back(w);
                }
            }
        }
        std::sort(c.vertices.begin(), c.vertices.end());
        out.push_back(std::move(c));
    }
    for (const auto& [u, v] : g.edges()) ++out[comp[u]].edges;
    // canonical order: size descending, then smallest vertex
    std::sort(out.begin(), out.end(), [](const OracleComponent& a, const OracleComponent& b) {
        if (a.vertices.size() != b.vertices.size()) {
            return a.vertices.size() > b.vertices.size();
        }
        return a.vertices.front() < b.vertices.front();
    });
    return out;
}

using MatchKey = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

namespace detail {
inline void enumerate_rec(std::vector<std::uint32_t>& free_ids, MatchKey& current,
                          std::vector<MatchKey>& out) {
    if (free_ids.empty()) {
        MatchKey key = current;
        std::sort(key.begin(), key.end());
        out.push_back(std::move(key));
        return;
    }
    const std::uint32_t first = free_ids.front();
    for (std::size_t i = 1; i < free_ids.size(); ++i) {
        std::vector<std::uint32_t> rest;
        for (std::size_t j = 1; j < free_ids.size(); ++j) {
            if (j != i) rest.push_back(free_ids[j]);
        }
        current.emplace_back(first, free_ids[i]);
        enumerate_rec(rest, current, out);
        current.pop_back();
    }
}
}  // namespace detail

/// Every perfect matching of the half-edges of seq (vertex-major ids), as
/// canonical sorted pair lists. (sum d - 1)!! of them.
inline std::vector<MatchKey> enumerate_matchings(const subcrit::DegreeSequence& seq) {
    std::vector<std::uint32_t> ids(seq.degree_sum());
    for (std::uint32_t h = 0; h < ids.size(); ++h) ids[h] = h;
    std::vector<MatchKey> out;
    MatchKey current;
    detail::enumerate_rec(ids, current, out);
    return out;
}

}  // namespace testutil
