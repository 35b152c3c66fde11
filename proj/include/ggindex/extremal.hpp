#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ggindex/enumerate.hpp"

namespace ggindex {

enum class IndexKind { GG, NGG, ABC };
enum class Direction { Min, Max };

struct Objective {
    Direction direction = Direction::Min;
    IndexKind index = IndexKind::NGG;

    /// "min-ngg", "max-gg", ...
    std::string name() const;
};

double index_value(const Graph& g, IndexKind index);

/// Absolute tie tolerance on index values.
inline constexpr double kDefaultTieTolerance = 1e-9;

/// Candidates inside the double-precision tie window are recomputed in
/// extended precision; they stay tied only if within this distance there.
inline constexpr long double kExtendedTieTolerance = 1e-15L;

struct TieCandidate {
    CanonicalForm form;
    double value = 0.0;
    long double extended_value = 0.0L;
    bool retained = false;
};

struct ExtremalResult {
    Objective objective;
    Constraints constraints;
    double value = 0.0;
    /// Sorted by canonical form.
    std::vector<EnumeratedGraph> witnesses;
    std::size_t total_classes = 0;
    /// Non-empty when more than one class fell inside the tie window.
    std::vector<TieCandidate> tie_candidates;

    bool unique() const noexcept { return witnesses.size() == 1; }
    std::vector<CanonicalForm> witness_forms() const;
};

/// Exact scan. Values are computed in parallel chunks and reduced in stream
/// order, so the result does not depend on the worker count. Throws
/// std::invalid_argument on an empty stream.
ExtremalResult find_extremal(const GraphStream& stream, Objective objective,
                             double epsilon = kDefaultTieTolerance, int workers = 1);

ExtremalResult find_extremal(std::span<const EnumeratedGraph> items, const Constraints& constraints,
                             Objective objective, double epsilon = kDefaultTieTolerance, int workers = 1);

/// All degrees equal delta, or all but one equal delta and that one delta - 1.
bool is_almost_regular(const Graph& g, int delta);

/// Names the graph when it is a member of a known family of its order
/// ("P_7", "C'_9", "K_{3,3}", "T_{10,3}", ...), else empty.
std::string family_name(const Graph& g);

struct VerificationRow {
    long long n = 0;
    bool pass = false;
    /// "pass" / "fail", or "consistent" / "counterexample found" for probes.
    std::string outcome;
    std::optional<double> value;
    std::optional<double> expected_value;
    std::vector<std::string> witnesses;
    std::vector<std::string> witness_names;
    std::vector<std::string> expected_witnesses;
    std::size_t total_classes = 0;
    bool tie = false;
    std::string note;
    std::vector<std::pair<std::string, double>> metrics;
    std::vector<std::pair<std::string, std::string>> labels;
};

struct VerificationReport {
    std::string claim;
    std::string statement;
    /// Conjecture probes: outcomes are evidence, not verification.
    bool evidence_only = false;
    std::string scope_note;
    std::vector<VerificationRow> rows;
    double runtime_seconds = 0.0;

    bool passed() const;
};

struct VerifyOptions {
    EnumerationOptions enumeration;
    double epsilon = kDefaultTieTolerance;
};

/// Maximum NGG over connected bipartite graphs is attained only by
/// K_{floor(n/2), ceil(n/2)}, value sqrt(floor(n/2) ceil(n/2)).
VerificationReport verify_max_bipartite(std::span<const int> ns, const VerifyOptions& options = {});

/// Expected minimizers of NGG over connected bipartite graphs.
std::vector<Graph> predicted_min_bipartite(int n);

/// Minimum NGG over connected bipartite graphs against the predicted
/// minimizers; also checks the closed-form minimum value for n >= 8.
/// Requires n >= 4.
VerificationReport verify_min_bipartite(std::span<const int> ns, const VerifyOptions& options = {});

/// Over all trees: minimum GG only at the path, maximum only at the star.
VerificationReport verify_tree_extremals(std::span<const int> ns, const VerifyOptions& options = {});

struct CrossoverRow {
    int n = 0;
    int k = 0;
    double pendant = 0.0;  // NGG(C'_n)
    double hook = 0.0;     // NGG(C''_n)
    /// Exact ordering of NGG(C'_n) relative to NGG(C''_n).
    std::strong_ordering order = std::strong_ordering::equal;
};

/// Odd n >= 5 only.
std::vector<CrossoverRow> crossover_scan(std::span<const int> odd_ns);
VerificationReport verify_crossover(std::span<const int> odd_ns);

struct AsymptoticRow {
    long long n = 0;
    double ngg = 0.0;
    double residual = 0.0;  // pi - NGG(P_n)
    double gg = 0.0;
    double gg_ratio = 0.0;  // GG(P_n) / (pi sqrt(n - 2))
};

std::vector<AsymptoticRow> asymptotic_check(std::span<const long long> ns);
/// Residuals must be positive and strictly decreasing along the list.
VerificationReport verify_asymptote(std::span<const long long> ns);

/// Conjecture probes over all feasible n in ns. delta = nullopt means
/// delta = n - 1 for each n.
///   1: maximum-GG graphs with max degree <= delta are (almost) delta-regular.
///   2: the minimum-GG graph with max degree <= delta is the cycle.
///   3: the maximum-GG tree with max degree <= delta is T_{n,delta}.
VerificationReport probe_conjecture(int which, std::span<const int> ns, std::optional<int> delta,
                                    const VerifyOptions& options = {});

}  // namespace ggindex
