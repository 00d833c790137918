#include "subcrit/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

#include "subcrit/io.hpp"

namespace subcrit {

MultiGraph::MultiGraph(std::uint32_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
    for (auto& [u, v] : edges_) {
        if (u >= n_ || v >= n_) {
            throw std::invalid_argument("edge endpoint out of range [0, n)");
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
}

std::vector<std::uint32_t> MultiGraph::degrees() const {
    std::vector<std::uint32_t> deg(n_, 0u);
    for (const auto& [u, v] : edges_) {
        ++deg[u];
        ++deg[v];  // loops count twice
    }
    return deg;
}

bool is_simple(const MultiGraph& g) {
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].first == edges[i].second) return false;
        if (i > 0 && edges[i] == edges[i - 1]) return false;
    }
    return true;
}

MultiGraph erase(const MultiGraph& g) {
    std::vector<Edge> kept;
    kept.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        if (e.first != e.second) kept.push_back(e);
    }
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return MultiGraph(g.vertex_count(), std::move(kept));
}

MultiGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("'" + path + "' is empty (expected header \"u,v\")");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "u,v") {
        throw std::runtime_error("'" + path + "' line 1: expected header \"u,v\"");
    }
    std::vector<Edge> edges;
    std::uint32_t n = 0;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;  // tolerate a trailing blank line
        const auto comma = line.find(',');
        const std::string where = "'" + path + "' line " + std::to_string(lineno);
        if (comma == std::string::npos) {
            throw std::runtime_error("parse error at " + where + ": '" + line + "'");
        }
        std::uint32_t u = 0, v = 0;
        const char* ub = line.data();
        const char* ue = line.data() + comma;
        const char* vb = line.data() + comma + 1;
        const char* ve = line.data() + line.size();
        const auto ru = std::from_chars(ub, ue, u);
        const auto rv = std::from_chars(vb, ve, v);
        if (ru.ec != std::errc() || ru.ptr != ue || rv.ec != std::errc() ||
            rv.ptr != ve) {
            throw std::runtime_error("parse error at " + where + ": '" + line + "'");
        }
        edges.emplace_back(u, v);
        n = std::max({n, u + 1u, v + 1u});
    }
    return MultiGraph(n, std::move(edges));
}

void save_graph(const MultiGraph& g, const std::string& path) {
    std::string out = "u,v\n";
    out.reserve(out.size() + g.edge_count() * 8);
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ',';
        out += std::to_string(v);
        out += '\n';
    }
    atomic_write_text(path, out);
}

HalfEdgeIndex HalfEdgeIndex::build(const MultiGraph& g) {
    HalfEdgeIndex idx;
    const std::uint64_t m2 = 2 * g.edge_count();
    idx.owner.resize(m2);
    idx.offsets.assign(g.vertex_count() + 1, 0u);
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        idx.owner[2 * e] = edges[e].first;
        idx.owner[2 * e + 1] = edges[e].second;
        ++idx.offsets[edges[e].first + 1];
        ++idx.offsets[edges[e].second + 1];
    }
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        idx.offsets[v + 1] += idx.offsets[v];
    }
    idx.incident.resize(m2);
    std::vector<std::uint64_t> cursor(idx.offsets.begin(), idx.offsets.end() - 1);
    for (std::uint64_t h = 0; h < m2; ++h) {
        idx.incident[cursor[idx.owner[h]]++] = static_cast<std::uint32_t>(h);
    }
    return idx;
}

}  // namespace subcrit
