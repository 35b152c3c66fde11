#include <catch_amalgamated.hpp>

#include <cmath>

#include "ggindex/families.hpp"
#include "ggindex/indices.hpp"
#include "oracles.hpp"

using namespace ggindex;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("splits of a path")
{
    const auto splits = edge_splits(path(5));
    REQUIRE(splits.size() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(splits[i].edge == Edge{i, i + 1});
        CHECK(splits[i].n_u == i + 1);
        CHECK(splits[i].n_v == 4 - i);
    }
}

TEST_CASE("odd cycles have one equidistant vertex per edge")
{
    for (int n = 3; n <= 15; n += 2) {
        for (const auto& s : edge_splits(cycle(n))) {
            CHECK(s.n_u == (n - 1) / 2);
            CHECK(s.n_v == (n - 1) / 2);
        }
    }
}

TEST_CASE("index values of small named graphs")
{
    CHECK_THAT(ngg_index(path(4)), WithinAbs(2.0 / std::sqrt(3.0) + 0.5, 1e-15));
    CHECK_THAT(gg_index(path(2)), WithinAbs(0.0, 0.0));
    CHECK_THAT(ngg_index(path(2)), WithinAbs(1.0, 1e-15));
    CHECK_THAT(ngg_index(cycle(8)), WithinAbs(2.0, 1e-14));
    CHECK_THAT(ngg_index(star(10)), WithinAbs(3.0, 1e-14));
    CHECK_THAT(ngg_index(complete_bipartite(3, 4)), WithinAbs(std::sqrt(12.0), 1e-14));
    CHECK_THAT(abc_index(path(6)), WithinAbs(5.0 / std::sqrt(2.0), 1e-14));
    CHECK_THAT(abc_index(star(7)), WithinAbs(std::sqrt(30.0), 1e-13));
    CHECK_THAT(abc_index(complete(5)), WithinAbs(10.0 * std::sqrt(6.0) / 4.0, 1e-13));
    CHECK_THAT(gg_index(cycle(7)), WithinAbs(7.0 * std::sqrt(4.0 / 9.0), 1e-14));
}

TEST_CASE("complete graphs have GG exactly zero")
{
    for (int n = 2; n <= 20; ++n) {
        CHECK(gg_index(complete(n)) == 0.0);
        CHECK_THAT(ngg_index(complete(n)), WithinAbs(n * (n - 1) / 2.0, 1e-12));
    }
}

TEST_CASE("library values agree with the min-plus oracle")
{
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        const int n = 2 + static_cast<int>(seed % 24);
        const auto g = oracle::random_connected(n, 0.05 + 0.01 * static_cast<double>(seed % 30), seed);
        const auto splits = edge_splits(g);
        const auto expected = oracle::splits(g);
        REQUIRE(splits.size() == expected.size());
        for (std::size_t i = 0; i < splits.size(); ++i) {
            CHECK(splits[i].edge.u == expected[i].u);
            CHECK(splits[i].edge.v == expected[i].v);
            CHECK(splits[i].n_u == expected[i].n_u);
            CHECK(splits[i].n_v == expected[i].n_v);
        }
        const auto values = compute_indices(g);
        CHECK_THAT(values.gg, WithinAbs(static_cast<double>(oracle::gg(g)), 1e-12));
        CHECK_THAT(values.ngg, WithinAbs(static_cast<double>(oracle::ngg(g)), 1e-12));
        CHECK_THAT(values.abc, WithinAbs(static_cast<double>(oracle::abc(g)), 1e-12));
        CHECK(gg_index(g) == values.gg);
        CHECK(ngg_index(g) == values.ngg);
        CHECK(abc_index(g) == values.abc);
        CHECK_THAT(static_cast<double>(gg_index_extended(splits)), WithinAbs(values.gg, 1e-12));
        CHECK_THAT(static_cast<double>(ngg_index_extended(splits)), WithinAbs(values.ngg, 1e-12));
        CHECK_THAT(static_cast<double>(abc_index_extended(g)), WithinAbs(values.abc, 1e-12));
    }
}

TEST_CASE("indices are invariant under relabeling")
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const int n = 3 + static_cast<int>(seed % 20);
        const auto g = oracle::random_connected(n, 0.15, seed);
        const auto h = g.relabeled(oracle::random_permutation(n, seed + 7));
        CHECK_THAT(gg_index(h), WithinRel(gg_index(g), 1e-13));
        CHECK_THAT(ngg_index(h), WithinRel(ngg_index(g), 1e-13));
        CHECK_THAT(abc_index(h), WithinRel(abc_index(g), 1e-13));
    }
}

TEST_CASE("large graphs use per-edge searches with the same result")
{
    const auto g = path(5000);
    const auto splits = edge_splits(g);
    REQUIRE(splits.size() == 4999);
    CHECK(splits[0].n_u == 1);
    CHECK(splits[0].n_v == 4999);
    CHECK(splits[2499].n_u == 2500);
    CHECK_THAT(ngg_index(g), WithinAbs(path_ngg(5000), 1e-12));
    CHECK_THAT(ngg_index(cycle(4500)), WithinAbs(2.0, 1e-10));
}

TEST_CASE("bipartite relation between GG and NGG")
{
    for (const auto& g : {path(7), cycle(10), complete_bipartite(3, 5), star(9), cycle_hook(11), theta(4, 2, 2)}) {
        const auto r = check_bipartite_relation(g);
        CHECK(r.bipartite);
        CHECK(r.relation_holds);
        CHECK(r.all_splits_complete);
        CHECK_FALSE(r.has_deficient_edge);
        CHECK_THAT(r.gg, WithinRel(r.scaled_ngg, 1e-12));
    }
    const auto odd = check_bipartite_relation(cycle(9));
    CHECK_FALSE(odd.bipartite);
    CHECK(odd.has_deficient_edge);
    CHECK_FALSE(odd.all_splits_complete);

    const auto single = check_bipartite_relation(path(2));
    CHECK(single.bipartite);
    CHECK(single.relation_holds);
}
