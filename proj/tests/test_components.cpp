#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "helpers.hpp"
#include "subcrit/components.hpp"
#include "subcrit/configuration.hpp"

using namespace subcrit;

TEST_CASE("no edges: all singletons") {
    const auto s = components(MultiGraph(4, {}));
    CHECK(s.sizes == std::vector<std::uint64_t>{1, 1, 1, 1});
    CHECK(s.edge_counts == std::vector<std::uint64_t>{0, 0, 0, 0});
    CHECK(s.comp_of == std::vector<std::uint32_t>{0, 1, 2, 3});
}

TEST_CASE("path plus isolated vertex") {
    const auto s = components(MultiGraph(4, {{0, 1}, {1, 2}}));
    CHECK(s.sizes == std::vector<std::uint64_t>{3, 1});
    CHECK(s.edge_counts == std::vector<std::uint64_t>{2, 0});
    CHECK(s.comp_of[0] == s.comp_of[1]);
    CHECK(s.comp_of[1] == s.comp_of[2]);
    CHECK(s.comp_of[3] == 1);
}

TEST_CASE("equal sizes are ordered by smallest contained vertex") {
    const auto s = components(MultiGraph(4, {{2, 3}, {0, 1}}));
    CHECK(s.sizes == std::vector<std::uint64_t>{2, 2});
    CHECK(s.comp_of[0] == 0);
    CHECK(s.comp_of[2] == 1);
}

TEST_CASE("loops join nothing but count one edge") {
    const auto s = components(MultiGraph(2, {{0, 0}}));
    CHECK(s.sizes == std::vector<std::uint64_t>{1, 1});
    CHECK(s.edge_counts == std::vector<std::uint64_t>{1, 0});
}

TEST_CASE("union-find agrees with the BFS oracle on random multigraphs") {
    std::mt19937_64 seed_rng(21);
    Rng rng(22);
    for (int rep = 0; rep < 300; ++rep) {
        const DegreeSequence seq(testutil::random_even_degrees(seed_rng));
        const auto g = pair_half_edges(seq, rng);
        const auto s = components(g);
        const auto oracle = testutil::bfs_components(g);

        REQUIRE(s.count() == oracle.size());
        CHECK(std::accumulate(s.sizes.begin(), s.sizes.end(), std::uint64_t{0}) ==
              g.vertex_count());
        CHECK(std::accumulate(s.edge_counts.begin(), s.edge_counts.end(),
                              std::uint64_t{0}) == g.edge_count());
        for (std::size_t c = 0; c < oracle.size(); ++c) {
            CHECK(s.sizes[c] == oracle[c].vertices.size());
            CHECK(s.edge_counts[c] == oracle[c].edges);
            for (const auto v : oracle[c].vertices) {
                CHECK(s.comp_of[v] == c);
            }
        }
    }
}

TEST_CASE("excess: trees, cycles, loops") {
    const auto tree = components(MultiGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
    CHECK(excess(tree, 1) == -1);

    const auto triangle = components(MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(excess(triangle, 1) == 0);

    const auto loop = components(MultiGraph(1, {{0, 0}}));
    CHECK(excess(loop, 1) == 0);  // 1 edge, 1 vertex

    CHECK_THROWS_AS(excess(tree, 0), std::invalid_argument);
    CHECK_THROWS_AS(excess(tree, 2), std::invalid_argument);
}

TEST_CASE("excess is never below -1") {
    std::mt19937_64 seed_rng(23);
    Rng rng(24);
    for (int rep = 0; rep < 100; ++rep) {
        const DegreeSequence seq(testutil::random_even_degrees(seed_rng));
        const auto s = components(pair_half_edges(seq, rng));
        for (std::size_t j = 1; j <= s.count(); ++j) {
            CHECK(excess(s, j) >= -1);
        }
    }
}

TEST_CASE("fat_vertices threshold") {
    const DegreeSequence zeros(std::vector<std::uint32_t>(10, 0u));
    CHECK(fat_vertices(zeros, 0.5, 4.0).empty());

    // n = 1000, gamma = 4, eps = 0.5: threshold = 0.5 * 10 = 5
    std::vector<std::uint32_t> degrees(1000, 1u);
    degrees[3] = 5;
    degrees[7] = 4;
    degrees[500] = 17;
    const auto fat = fat_vertices(DegreeSequence(degrees), 0.5, 4.0);
    CHECK(fat == std::vector<std::uint32_t>{3, 500});

    // 3^(1/3) ~ 1.442, so only the degree-10 vertex passes
    const auto fat2 =
        fat_vertices(DegreeSequence(std::vector<std::uint32_t>{10, 1, 1}), 1.0, 4.0);
    CHECK(fat2 == std::vector<std::uint32_t>{0});

    CHECK_THROWS_AS(fat_vertices(zeros, 0.0, 4.0), std::invalid_argument);
    CHECK_THROWS_AS(fat_vertices(zeros, 0.5, 1.0), std::invalid_argument);
}

TEST_CASE("count_bad_components") {
    const auto joined = components(MultiGraph(2, {{0, 1}}));
    CHECK(count_bad_components(joined, {}) == 0);
    CHECK(count_bad_components(joined, {0, 1}) == 1);

    const auto split = components(MultiGraph(2, {}));
    CHECK(count_bad_components(split, {0, 1}) == 0);

    const auto three = components(MultiGraph(3, {{0, 1}, {1, 2}}));
    CHECK(count_bad_components(three, {0, 1, 2}) == 1);  // one component, one bad

    CHECK_THROWS_AS(count_bad_components(split, {5}), std::invalid_argument);
}

TEST_CASE("summary serializes to the documented JSON object") {
    const auto s = components(MultiGraph(4, {{0, 1}, {1, 2}}));
    const auto j = to_json(s);
    CHECK(j.at("n") == 4);
    CHECK(j.at("sizes") == nlohmann::json::array({3, 1}));
    CHECK(j.at("edge_counts") == nlohmann::json::array({2, 0}));
    CHECK(j.size() == 3);
}
