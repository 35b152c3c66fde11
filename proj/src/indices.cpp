#include "ggindex/indices.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "ggindex/numeric.hpp"

namespace ggindex {

namespace {

// Above this order the full distance matrix is not materialized; each edge
// runs its own pair of BFS passes instead.
constexpr int kMatrixOrderLimit = 4096;

EdgeSplit split_from_rows(const Edge& e, std::span<const std::uint32_t> du, std::span<const std::uint32_t> dv)
{
    EdgeSplit s{e, 0, 0};
    for (std::size_t w = 0; w < du.size(); ++w) {
        if (du[w] < dv[w]) {
            ++s.n_u;
        } else if (dv[w] < du[w]) {
            ++s.n_v;
        }
    }
    return s;
}

template <typename T>
T gg_term(int nu, int nv)
{
    return std::sqrt(static_cast<T>(nu + nv - 2) / (static_cast<T>(nu) * static_cast<T>(nv)));
}

template <typename T>
T ngg_term(int nu, int nv)
{
    return T{1} / std::sqrt(static_cast<T>(nu) * static_cast<T>(nv));
}

template <typename T>
T abc_term(int du, int dv)
{
    return std::sqrt(static_cast<T>(du + dv - 2) / (static_cast<T>(du) * static_cast<T>(dv)));
}

template <typename T>
T sum_gg(const std::vector<EdgeSplit>& splits)
{
    CompensatedSum<T> sum;
    for (const auto& s : splits) {
        sum.add(gg_term<T>(s.n_u, s.n_v));
    }
    return sum.value();
}

template <typename T>
T sum_ngg(const std::vector<EdgeSplit>& splits)
{
    CompensatedSum<T> sum;
    for (const auto& s : splits) {
        sum.add(ngg_term<T>(s.n_u, s.n_v));
    }
    return sum.value();
}

template <typename T>
T sum_abc(const Graph& g)
{
    CompensatedSum<T> sum;
    for (const auto& e : g.edges()) {
        sum.add(abc_term<T>(g.degree(e.u), g.degree(e.v)));
    }
    return sum.value();
}

}  // namespace

std::vector<EdgeSplit> edge_splits(const Graph& g, const DistanceMatrix& distances)
{
    std::vector<EdgeSplit> splits;
    splits.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        splits.push_back(split_from_rows(e, distances.row(e.u), distances.row(e.v)));
    }
    return splits;
}

std::vector<EdgeSplit> edge_splits(const Graph& g)
{
    if (g.order() <= kMatrixOrderLimit) {
        return edge_splits(g, all_pairs_distances(g));
    }
    std::vector<EdgeSplit> splits;
    splits.reserve(g.edges().size());
    int cached_source = -1;
    std::vector<std::uint32_t> du;
    for (const auto& e : g.edges()) {
        if (e.u != cached_source) {
            du = bfs_distances(g, e.u);
            cached_source = e.u;
        }
        const auto dv = bfs_distances(g, e.v);
        splits.push_back(split_from_rows(e, du, dv));
    }
    return splits;
}

double gg_index(const Graph& g) { return sum_gg<double>(edge_splits(g)); }

double ngg_index(const Graph& g) { return sum_ngg<double>(edge_splits(g)); }

double abc_index(const Graph& g) { return sum_abc<double>(g); }

IndexValues indices_from_splits(const Graph& g, const std::vector<EdgeSplit>& splits)
{
    return {sum_gg<double>(splits), sum_ngg<double>(splits), sum_abc<double>(g)};
}

IndexValues compute_indices(const Graph& g) { return indices_from_splits(g, edge_splits(g)); }

long double gg_index_extended(const std::vector<EdgeSplit>& splits) { return sum_gg<long double>(splits); }

long double ngg_index_extended(const std::vector<EdgeSplit>& splits) { return sum_ngg<long double>(splits); }

long double abc_index_extended(const Graph& g) { return sum_abc<long double>(g); }

BipartiteRelation check_bipartite_relation(const Graph& g, double rel_tol)
{
    BipartiteRelation r;
    r.bipartite = is_bipartite(g);
    const auto splits = edge_splits(g);
    r.all_splits_complete = true;
    for (const auto& s : splits) {
        if (s.n_u + s.n_v < g.order()) {
            r.has_deficient_edge = true;
            r.all_splits_complete = false;
        }
    }
    r.gg = sum_gg<double>(splits);
    r.scaled_ngg = sum_ngg<double>(splits) * std::sqrt(static_cast<double>(std::max(g.order() - 2, 0)));
    r.relation_holds = std::abs(r.gg - r.scaled_ngg) <= rel_tol * r.gg;
    return r;
}

}  // namespace ggindex
