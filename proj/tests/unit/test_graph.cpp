#include <catch_amalgamated.hpp>

#include <vector>

#include "ggindex/families.hpp"
#include "ggindex/graph.hpp"
#include "oracles.hpp"

using namespace ggindex;

namespace {

Graph make(int n, std::vector<std::pair<int, int>> edges)
{
    return Graph(n, std::span<const std::pair<int, int>>(edges));
}

}  // namespace

TEST_CASE("graph construction normalizes and deduplicates edges")
{
    const auto g = make(3, {{1, 0}, {0, 1}, {2, 1}});
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
    REQUIRE(g.edges().size() == 2);
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK(g.edges()[1] == Edge{1, 2});
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.max_degree() == 2);
    CHECK(g.min_degree() == 1);
    CHECK(g.degree_sequence() == std::vector<int>{2, 1, 1});
}

TEST_CASE("graph construction rejects invalid input")
{
    CHECK_THROWS_AS(make(0, {}), GraphError);
    CHECK_THROWS_AS(make(2, {{0, 0}, {0, 1}}), GraphError);
    CHECK_THROWS_AS(make(2, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(make(2, {{-1, 1}}), GraphError);
    CHECK_THROWS_AS(make(4, {{0, 1}, {2, 3}}), GraphError);
    CHECK_THROWS_AS(make(2, {}), GraphError);
}

TEST_CASE("single vertex graph")
{
    const auto g = make(1, {});
    CHECK(g.order() == 1);
    CHECK(g.size() == 0);
    CHECK(g.is_tree());
    CHECK(g.cyclomatic_number() == 0);
    CHECK(is_bipartite(g));
    CHECK(all_pairs_distances(g).diameter() == 0);
}

TEST_CASE("neighbors are sorted and masks agree with edges")
{
    const auto g = make(5, {{4, 0}, {2, 0}, {0, 1}, {3, 4}, {1, 2}});
    const auto n0 = g.neighbors(0);
    CHECK(std::vector<int>(n0.begin(), n0.end()) == std::vector<int>{1, 2, 4});
    REQUIRE(g.has_bitset_adjacency());
    for (int v = 0; v < g.order(); ++v) {
        std::uint64_t mask = 0;
        for (int w : g.neighbors(v)) {
            mask |= std::uint64_t{1} << w;
        }
        CHECK(g.adjacency_mask(v) == mask);
    }
    CHECK(graph_from_masks(g.adjacency_masks()) == g);
}

TEST_CASE("relabeling maps edges through the permutation")
{
    const auto g = path(4);
    const std::vector<int> perm{3, 1, 0, 2};
    const auto h = g.relabeled(perm);
    CHECK(h.has_edge(3, 1));
    CHECK(h.has_edge(1, 0));
    CHECK(h.has_edge(0, 2));
    CHECK(h.size() == 3);
    const std::vector<int> bad{0, 0, 1, 2};
    CHECK_THROWS(g.relabeled(bad));
}

TEST_CASE("distances match min-plus closure on random graphs")
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const int n = 2 + static_cast<int>(seed % 15);
        const auto g = oracle::random_connected(n, 0.15, seed);
        const auto d = all_pairs_distances(g);
        const auto expected = oracle::min_plus_distances(g);
        for (int i = 0; i < n; ++i) {
            const auto row = bfs_distances(g, i);
            for (int j = 0; j < n; ++j) {
                CHECK(d(i, j) == static_cast<std::uint32_t>(expected[i][j]));
                CHECK(row[j] == d(i, j));
            }
        }
    }
}

TEST_CASE("diameters of named graphs")
{
    CHECK(all_pairs_distances(path(7)).diameter() == 6);
    CHECK(all_pairs_distances(cycle(7)).diameter() == 3);
    CHECK(all_pairs_distances(complete(5)).diameter() == 1);
    CHECK(all_pairs_distances(star(6)).diameter() == 2);
}

TEST_CASE("bipartiteness agrees with exhaustive colorings")
{
    CHECK(is_bipartite(cycle(6)));
    CHECK_FALSE(is_bipartite(cycle(7)));
    CHECK(is_bipartite(complete_bipartite(3, 4)));
    CHECK_FALSE(is_bipartite(complete(3)));
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        const int n = 2 + static_cast<int>(seed % 11);
        const auto g = oracle::random_connected(n, 0.1, seed);
        CHECK(is_bipartite(g) == oracle::bipartite_by_colorings(g));
        const auto coloring = two_coloring(g);
        CHECK(coloring.has_value() == is_bipartite(g));
        if (coloring) {
            CHECK((*coloring)[0] == 0);
            for (const auto& e : g.edges()) {
                CHECK((*coloring)[e.u] != (*coloring)[e.v]);
            }
        }
    }
}

TEST_CASE("cyclomatic number agrees with spanning forest count")
{
    CHECK(path(5).cyclomatic_number() == 0);
    CHECK(cycle(5).cyclomatic_number() == 1);
    CHECK(complete(5).cyclomatic_number() == 6);
    CHECK(theta(3, 2, 2).cyclomatic_number() == 2);
    for (std::uint64_t seed = 200; seed < 240; ++seed) {
        const auto g = oracle::random_connected(3 + static_cast<int>(seed % 12), 0.2, seed);
        CHECK(g.cyclomatic_number() == oracle::cyclomatic_by_forest(g));
        CHECK(g.is_tree() == (g.cyclomatic_number() == 0));
    }
}

TEST_CASE("large graphs fall back to adjacency lists")
{
    const auto g = path(100);
    CHECK_FALSE(g.has_bitset_adjacency());
    CHECK_THROWS(g.adjacency_mask(0));
    CHECK(bfs_distances(g, 0)[99] == 99);
}
