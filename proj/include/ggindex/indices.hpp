#pragma once

#include <vector>

#include "ggindex/graph.hpp"

namespace ggindex {

/// Closer-vertex counts for one edge: n_u vertices strictly closer to u than
/// to v, n_v strictly closer to v. Equidistant vertices count for neither.
struct EdgeSplit {
    Edge edge;
    int n_u = 0;
    int n_v = 0;

    friend bool operator==(const EdgeSplit&, const EdgeSplit&) = default;
};

struct IndexValues {
    double gg = 0.0;
    double ngg = 0.0;
    double abc = 0.0;
};

/// One split per edge, in the graph's edge order.
std::vector<EdgeSplit> edge_splits(const Graph& g);
std::vector<EdgeSplit> edge_splits(const Graph& g, const DistanceMatrix& distances);

// Sums run over edges in (smaller, larger) endpoint order with Neumaier
// compensation, so results are deterministic for a given graph.

/// Graovac-Ghorbani index: sum of sqrt((n_u + n_v - 2) / (n_u n_v)).
double gg_index(const Graph& g);
/// Normalized index: sum of 1 / sqrt(n_u n_v).
double ngg_index(const Graph& g);
/// Atom-bond connectivity: sum of sqrt((d(u) + d(v) - 2) / (d(u) d(v))).
double abc_index(const Graph& g);

IndexValues compute_indices(const Graph& g);
IndexValues indices_from_splits(const Graph& g, const std::vector<EdgeSplit>& splits);

// Extended-precision variants used to re-check near ties.
long double gg_index_extended(const std::vector<EdgeSplit>& splits);
long double ngg_index_extended(const std::vector<EdgeSplit>& splits);
long double abc_index_extended(const Graph& g);

/// Outcome of comparing GG against NGG * sqrt(n - 2).
struct BipartiteRelation {
    bool bipartite = false;
    /// |gg - ngg sqrt(n-2)| <= rel_tol * gg. Meaningful for bipartite graphs.
    bool relation_holds = false;
    /// Some edge has n_u + n_v < n (an equidistant vertex exists).
    bool has_deficient_edge = false;
    /// Every edge has n_u + n_v = n.
    bool all_splits_complete = false;
    double gg = 0.0;
    double scaled_ngg = 0.0;
};

inline constexpr double kDefaultRelationTolerance = 1e-12;

BipartiteRelation check_bipartite_relation(const Graph& g, double rel_tol = kDefaultRelationTolerance);

}  // namespace ggindex
