#include "ggindex/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "ggindex/graph_io.hpp"

namespace ggindex {

namespace {

using Masks = std::array<std::uint64_t, kMaxBitsetOrder>;

inline std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

struct Node {
    int k = 0;
    int edges = 0;
    Masks adj{};
    /// Color class of vertex 0 (bipartite mode only).
    std::uint64_t side0 = 0;
    std::vector<std::vector<int>> generators;
};

struct Sink {
    bool materialize = false;
    std::size_t count = 0;
    std::vector<EnumeratedGraph> items;
};

class Augmenter {
public:
    explicit Augmenter(const Constraints& c) : c_(c) {}

    Node root() const
    {
        Node r;
        r.k = 1;
        r.side0 = 1;
        return r;
    }

    /// Accepted children of `parent`, each paired with its labeling.
    template <typename Visit>
    void children(const Node& parent, bool need_labeling, Visit&& visit) const
    {
        const int k = parent.k;
        const std::uint64_t all = bit(k) - 1;

        std::uint64_t allowed = all;
        if (c_.max_degree) {
            allowed = 0;
            for (int v = 0; v < k; ++v) {
                if (std::popcount(parent.adj[v]) < *c_.max_degree) {
                    allowed |= bit(v);
                }
            }
        }

        auto admissible = [&](std::uint64_t s) {
            if ((s & ~allowed) != 0) {
                return false;
            }
            const int size = std::popcount(s);
            if (c_.trees_only && size != 1) {
                return false;
            }
            if (c_.max_degree && size > *c_.max_degree) {
                return false;
            }
            if (c_.cyclomatic && parent.edges + size - k > *c_.cyclomatic) {
                return false;
            }
            if (c_.bipartite_only && (s & parent.side0) != 0 && (s & ~parent.side0) != 0) {
                return false;
            }
            return true;
        };

        // Neighbor sets are taken one per orbit of the parent's automorphism
        // group: the numerically smallest member.
        std::vector<char> seen;
        if (!parent.generators.empty()) {
            seen.assign(std::size_t{1} << k, 0);
        }
        std::vector<std::uint64_t> orbit_queue;

        for (std::uint64_t s = 1; s <= all; ++s) {
            if (!seen.empty()) {
                if (seen[s]) {
                    continue;
                }
                seen[s] = 1;
                orbit_queue.assign(1, s);
                for (std::size_t head = 0; head < orbit_queue.size(); ++head) {
                    const std::uint64_t cur = orbit_queue[head];
                    for (const auto& g : parent.generators) {
                        std::uint64_t image = 0;
                        for (std::uint64_t rest = cur; rest; rest &= rest - 1) {
                            image |= bit(g[std::countr_zero(rest)]);
                        }
                        if (!seen[image]) {
                            seen[image] = 1;
                            orbit_queue.push_back(image);
                        }
                    }
                }
            }
            if (!admissible(s)) {
                continue;
            }

            Node child;
            child.k = k + 1;
            child.edges = parent.edges + std::popcount(s);
            std::copy(parent.adj.begin(), parent.adj.begin() + k, child.adj.begin());
            child.adj[k] = s;
            for (std::uint64_t rest = s; rest; rest &= rest - 1) {
                child.adj[std::countr_zero(rest)] |= bit(k);
            }
            child.side0 = parent.side0 | ((s & parent.side0) != 0 ? 0 : bit(k));

            std::optional<CanonicalLabeling> labeling;
            if (!accept(child, labeling)) {
                continue;
            }
            if (need_labeling && !labeling) {
                labeling = canonical_labeling(std::span<const std::uint64_t>(child.adj.data(), child.k));
            }
            visit(std::move(child), labeling);
        }
    }

    bool final_ok(const Node& node) const
    {
        return !c_.cyclomatic || node.edges - node.k + 1 == *c_.cyclomatic;
    }

private:
    static bool non_cut(const Node& g, int v)
    {
        const int n = g.k;
        if (n <= 2) {
            return true;
        }
        const std::uint64_t all = (bit(n) - 1) & ~bit(v);
        const int start = v == 0 ? 1 : 0;
        std::uint64_t reached = bit(start);
        std::uint64_t frontier = reached;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t rest = frontier; rest; rest &= rest - 1) {
                next |= g.adj[std::countr_zero(rest)];
            }
            next &= all;
            frontier = next & ~reached;
            reached |= next;
        }
        return reached == all;
    }

    // The canonical deletion vertex is a non-cut vertex maximizing
    // (degree, neighbor degree sum); ties are broken by canonical position.
    static bool accept(const Node& child, std::optional<CanonicalLabeling>& labeling)
    {
        const int n = child.k;
        const int fresh = n - 1;
        std::array<int, kMaxBitsetOrder> degree{};
        for (int v = 0; v < n; ++v) {
            degree[v] = std::popcount(child.adj[v]);
        }
        auto invariant = [&](int v) {
            int sum = 0;
            for (std::uint64_t rest = child.adj[v]; rest; rest &= rest - 1) {
                sum += degree[std::countr_zero(rest)];
            }
            return degree[v] * 65536 + sum;
        };
        const int target = invariant(fresh);
        std::uint64_t ties = 0;
        for (int v = 0; v < fresh; ++v) {
            const int value = invariant(v);
            if (value < target) {
                continue;
            }
            if (!non_cut(child, v)) {
                continue;
            }
            if (value > target) {
                return false;
            }
            ties |= bit(v);
        }
        if (ties == 0) {
            return true;
        }
        labeling = canonical_labeling(std::span<const std::uint64_t>(child.adj.data(), n));
        int chosen = fresh;
        for (std::uint64_t rest = ties; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if (labeling->position[v] > labeling->position[chosen]) {
                chosen = v;
            }
        }
        return labeling->orbit[chosen] == labeling->orbit[fresh];
    }

    Constraints c_;
};

void emit(Sink& sink, const std::optional<CanonicalLabeling>& labeling)
{
    ++sink.count;
    if (!sink.materialize) {
        return;
    }
    std::span<const std::uint64_t> rows(labeling->rows);
    sink.items.push_back({CanonicalForm(masks_to_graph6(rows)), graph_from_masks(rows)});
}

void descend(const Augmenter& aug, const Node& node, int n, Sink& sink)
{
    const bool leaf_level = node.k + 1 == n;
    aug.children(node, !leaf_level || sink.materialize,
                 [&](Node child, const std::optional<CanonicalLabeling>& labeling) {
                     if (leaf_level) {
                         if (aug.final_ok(child)) {
                             emit(sink, labeling);
                         }
                         return;
                     }
                     child.generators = labeling->generators;
                     descend(aug, child, n, sink);
                 });
}

Sink run(const Constraints& c, const EnumerationOptions& options, bool materialize)
{
    c.validate();
    const int bound = options.limits.bound_for(c);
    if (c.n > bound || c.n > kMaxBitsetOrder) {
        throw EnumerationRefused(c.n, std::min(bound, kMaxBitsetOrder), c.describe());
    }
    if (options.workers < 1) {
        throw std::invalid_argument("worker count must be at least 1");
    }

    Augmenter aug(c);
    Sink result;
    result.materialize = materialize;

    if (c.n == 1) {
        if (!c.cyclomatic || *c.cyclomatic == 0) {
            Node single = aug.root();
            CanonicalLabeling labeling = canonical_labeling(std::span<const std::uint64_t>(single.adj.data(), 1));
            emit(result, labeling);
        }
        return result;
    }

    // Expand breadth-first until there is enough work to share, then run
    // depth-first per worker over a round-robin share of the frontier.
    std::vector<Node> frontier{aug.root()};
    const std::size_t wanted = options.workers > 1 ? static_cast<std::size_t>(8 * options.workers) : 1;
    while (frontier.size() < wanted && frontier.front().k + 1 < c.n) {
        std::vector<Node> next;
        for (const auto& node : frontier) {
            aug.children(node, true, [&](Node child, const std::optional<CanonicalLabeling>& labeling) {
                child.generators = labeling->generators;
                next.push_back(std::move(child));
            });
        }
        frontier = std::move(next);
        if (frontier.empty()) {
            return result;
        }
    }

    const int workers = std::min<int>(options.workers, static_cast<int>(frontier.size()));
    std::vector<Sink> sinks(workers);
    auto work = [&](int w) {
        sinks[w].materialize = materialize;
        for (std::size_t i = w; i < frontier.size(); i += workers) {
            descend(aug, frontier[i], c.n, sinks[w]);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back(work, w);
        }
    }

    for (auto& s : sinks) {
        result.count += s.count;
        std::move(s.items.begin(), s.items.end(), std::back_inserter(result.items));
    }
    if (materialize) {
        std::sort(result.items.begin(), result.items.end(),
                  [](const EnumeratedGraph& a, const EnumeratedGraph& b) { return a.form < b.form; });
        auto dup = std::adjacent_find(result.items.begin(), result.items.end(),
                                      [](const auto& a, const auto& b) { return a.form == b.form; });
        if (dup != result.items.end()) {
            throw std::logic_error("enumeration emitted isomorphic graphs: " + dup->form.key());
        }
    }
    return result;
}

}  // namespace

void Constraints::validate() const
{
    if (n < 1) {
        throw std::invalid_argument("constraints need n >= 1");
    }
    if (max_degree && *max_degree < 1) {
        throw std::invalid_argument("maximum degree bound must be at least 1");
    }
    if (cyclomatic && *cyclomatic < 0) {
        throw std::invalid_argument("cyclomatic number must be non-negative");
    }
    if (trees_only && cyclomatic && *cyclomatic != 0) {
        throw std::invalid_argument("trees have cyclomatic number 0");
    }
}

std::string Constraints::describe() const
{
    std::ostringstream out;
    out << "n=" << n;
    if (trees_only) {
        out << " trees";
    }
    if (bipartite_only) {
        out << " bipartite";
    }
    if (max_degree) {
        out << " max-degree<=" << *max_degree;
    }
    if (cyclomatic) {
        out << " cyclomatic=" << *cyclomatic;
    }
    return out.str();
}

bool Constraints::admits(const Graph& g) const
{
    if (g.order() != n) {
        return false;
    }
    if (bipartite_only && !is_bipartite(g)) {
        return false;
    }
    if (max_degree && g.max_degree() > *max_degree) {
        return false;
    }
    if (trees_only && !g.is_tree()) {
        return false;
    }
    return !cyclomatic || g.cyclomatic_number() == *cyclomatic;
}

EnumerationLimits EnumerationLimits::from_environment()
{
    EnumerationLimits limits;
    if (const char* value = std::getenv(kMaxOrderEnvironmentVariable); value != nullptr && *value != '\0') {
        char* end = nullptr;
        const long parsed = std::strtol(value, &end, 10);
        if (end != nullptr && *end == '\0' && parsed >= 1 && parsed <= kMaxBitsetOrder) {
            limits = limits.with_general(static_cast<int>(parsed));
        }
    }
    return limits;
}

EnumerationLimits EnumerationLimits::with_general(int bound) const
{
    EnumerationLimits out = *this;
    out.general = bound;
    out.bipartite = std::max(bipartite, bound);
    out.trees = std::max(trees, bound);
    return out;
}

int EnumerationLimits::bound_for(const Constraints& c) const
{
    if (c.trees_only) {
        return trees;
    }
    if (c.bipartite_only) {
        return bipartite;
    }
    return general;
}

EnumerationRefused::EnumerationRefused(int requested, int bound, const std::string& what_class)
    : std::runtime_error("refusing to enumerate " + what_class + ": n=" + std::to_string(requested) +
                         " exceeds the feasibility bound " + std::to_string(bound) +
                         " (raise it with --max-n or " + kMaxOrderEnvironmentVariable +
                         ", or restrict to --bipartite or --trees, which have higher bounds)"),
      requested_(requested),
      bound_(bound)
{
}

std::vector<Graph> GraphStream::graphs() const
{
    std::vector<Graph> out;
    out.reserve(items_.size());
    for (const auto& item : items_) {
        out.push_back(item.graph);
    }
    return out;
}

GraphStream enumerate_connected(const Constraints& c, const EnumerationOptions& options)
{
    auto sink = run(c, options, true);
    return GraphStream(c, std::move(sink.items));
}

GraphStream enumerate_trees(int n, const EnumerationOptions& options)
{
    Constraints c;
    c.n = n;
    c.trees_only = true;
    return enumerate_connected(c, options);
}

std::size_t count_classes(const Constraints& c, const EnumerationOptions& options)
{
    return run(c, options, false).count;
}

void write_graph6(std::ostream& out, const GraphStream& stream)
{
    for (const auto& item : stream) {
        out << item.form.graph6() << '\n';
    }
}

}  // namespace ggindex
