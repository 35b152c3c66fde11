#include "ggindex/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "ggindex/graph_io.hpp"

namespace ggindex {

namespace {

constexpr int kMax = kMaxBitsetOrder;

using Perm = std::array<std::uint8_t, kMax>;
using Rows = std::array<std::uint64_t, kMax>;

inline std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// Ordered partition of the vertex set. Cells are contiguous ranges of lab;
// a cell is identified by its start position and len[start] holds its size
// (len is 0 at non-start positions).
struct Partition {
    std::array<std::uint8_t, kMax> lab{};
    std::array<std::uint8_t, kMax> len{};
};

class Search {
public:
    Search(std::span<const std::uint64_t> masks) : n_(static_cast<int>(masks.size()))
    {
        std::copy(masks.begin(), masks.end(), adj_.begin());
    }

    void run(Partition start, std::uint64_t active)
    {
        path_.clear();
        descend(start, active, 0);
    }

    int order() const { return n_; }
    const Perm& best_lab() const { return best_lab_; }
    const Rows& best_rows() const { return best_rows_; }
    const std::vector<Perm>& generators() const { return generators_; }
    std::size_t leaves() const { return leaves_; }

private:
    // Splits every cell by neighbor counts into each splitter cell until the
    // partition is equitable. Only cell positions and counts steer the
    // process, so the result commutes with vertex relabeling.
    void refine(Partition& p, std::uint64_t active) const
    {
        std::array<std::uint8_t, kMax> count{};
        while (active) {
            const int s = std::countr_zero(active);
            active &= active - 1;
            std::uint64_t splitter = 0;
            for (int i = s; i < s + p.len[s]; ++i) {
                splitter |= bit(p.lab[i]);
            }
            for (int x = 0; x < n_;) {
                const int size = p.len[x];
                if (size > 1) {
                    bool uniform = true;
                    for (int i = x; i < x + size; ++i) {
                        count[p.lab[i]] = static_cast<std::uint8_t>(std::popcount(adj_[p.lab[i]] & splitter));
                        uniform = uniform && count[p.lab[i]] == count[p.lab[x]];
                    }
                    if (!uniform) {
                        std::sort(p.lab.begin() + x, p.lab.begin() + x + size, [&](int a, int b) {
                            return count[a] != count[b] ? count[a] < count[b] : a < b;
                        });
                        int run = x;
                        for (int i = x + 1; i <= x + size; ++i) {
                            if (i == x + size || count[p.lab[i]] != count[p.lab[run]]) {
                                p.len[run] = static_cast<std::uint8_t>(i - run);
                                active |= bit(run);
                                run = i;
                            } else {
                                p.len[i] = 0;
                            }
                        }
                    }
                }
                x += size;
            }
        }
    }

    void leaf(const Partition& p)
    {
        ++leaves_;
        std::array<std::uint8_t, kMax> pos{};
        for (int i = 0; i < n_; ++i) {
            pos[p.lab[i]] = static_cast<std::uint8_t>(i);
        }
        Rows rows{};
        for (int i = 0; i < n_; ++i) {
            std::uint64_t nb = adj_[p.lab[i]];
            std::uint64_t row = 0;
            while (nb) {
                row |= bit(pos[std::countr_zero(nb)]);
                nb &= nb - 1;
            }
            rows[i] = row;
        }

        if (!have_first_) {
            have_first_ = true;
            first_lab_ = best_lab_ = p.lab;
            first_rows_ = best_rows_ = rows;
            first_path_ = path_;
            return;
        }
        if (std::equal(rows.begin(), rows.begin() + n_, first_rows_.begin())) {
            record_automorphism(first_lab_, p.lab);
            std::size_t common = 0;
            while (common < path_.size() && common < first_path_.size() && path_[common] == first_path_[common]) {
                ++common;
            }
            jump_to_ = static_cast<int>(common);
            return;
        }
        const auto cmp = std::lexicographical_compare_three_way(rows.begin(), rows.begin() + n_,
                                                                best_rows_.begin(), best_rows_.begin() + n_);
        if (cmp > 0) {
            best_lab_ = p.lab;
            best_rows_ = rows;
        } else if (cmp == 0) {
            record_automorphism(best_lab_, p.lab);
        }
    }

    // gamma(from[i]) = to[i]
    void record_automorphism(const std::array<std::uint8_t, kMax>& from, const std::array<std::uint8_t, kMax>& to)
    {
        Perm gamma{};
        bool identity = true;
        for (int i = 0; i < n_; ++i) {
            gamma[from[i]] = to[i];
            identity = identity && from[i] == to[i];
        }
        if (!identity) {
            generators_.push_back(gamma);
        }
    }

    int find(std::array<std::uint8_t, kMax>& parent, int v) const
    {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    // Orbits of the group generated by the known automorphisms that fix the
    // current path pointwise.
    void stabilizer_orbits(std::array<std::uint8_t, kMax>& parent) const
    {
        for (int i = 0; i < n_; ++i) {
            parent[i] = static_cast<std::uint8_t>(i);
        }
        for (const auto& g : generators_) {
            bool fixes = std::all_of(path_.begin(), path_.end(), [&](int v) { return g[v] == v; });
            if (!fixes) {
                continue;
            }
            for (int i = 0; i < n_; ++i) {
                int a = find(parent, i);
                int b = find(parent, g[i]);
                if (a != b) {
                    parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
                }
            }
        }
    }

    void descend(Partition p, std::uint64_t active, int depth)
    {
        refine(p, active);

        int target = -1;
        for (int x = 0; x < n_; x += p.len[x]) {
            if (p.len[x] > 1 && (target < 0 || p.len[x] < p.len[target])) {
                target = x;
            }
        }
        if (target < 0) {
            leaf(p);
            return;
        }

        const int size = p.len[target];
        std::array<std::uint8_t, kMax> candidates{};
        std::copy(p.lab.begin() + target, p.lab.begin() + target + size, candidates.begin());
        std::sort(candidates.begin(), candidates.begin() + size);

        std::array<std::uint8_t, kMax> explored{};
        int explored_count = 0;
        std::array<std::uint8_t, kMax> orbit{};
        std::size_t orbit_generators = static_cast<std::size_t>(-1);

        for (int c = 0; c < size; ++c) {
            const int v = candidates[c];
            if (explored_count > 0) {
                if (orbit_generators != generators_.size()) {
                    stabilizer_orbits(orbit);
                    orbit_generators = generators_.size();
                }
                const int root = find(orbit, v);
                bool equivalent = false;
                for (int e = 0; e < explored_count && !equivalent; ++e) {
                    equivalent = find(orbit, explored[e]) == root;
                }
                if (equivalent) {
                    continue;
                }
            }

            Partition child = p;
            auto it = std::find(child.lab.begin() + target, child.lab.begin() + target + size, v);
            std::iter_swap(child.lab.begin() + target, it);
            std::sort(child.lab.begin() + target + 1, child.lab.begin() + target + size);
            child.len[target] = 1;
            child.len[target + 1] = static_cast<std::uint8_t>(size - 1);

            path_.push_back(v);
            descend(child, bit(target), depth + 1);
            path_.pop_back();
            explored[explored_count++] = static_cast<std::uint8_t>(v);

            if (jump_to_ >= 0) {
                if (depth > jump_to_) {
                    return;
                }
                jump_to_ = -1;
            }
        }
    }

    int n_;
    Rows adj_{};
    std::vector<int> path_;

    bool have_first_ = false;
    Perm first_lab_{};
    Rows first_rows_{};
    std::vector<int> first_path_;
    Perm best_lab_{};
    Rows best_rows_{};
    std::vector<Perm> generators_;
    int jump_to_ = -1;
    std::size_t leaves_ = 0;
};

}  // namespace

CanonicalLabeling canonical_labeling(std::span<const std::uint64_t> masks, std::span<const int> colors)
{
    const int n = static_cast<int>(masks.size());
    if (n > kMax) {
        throw GraphError("canonical labeling supports at most 64 vertices");
    }
    if (!colors.empty() && static_cast<int>(colors.size()) != n) {
        throw GraphError("vertex color count does not match graph order");
    }

    CanonicalLabeling result;
    if (n == 0) {
        return result;
    }

    Partition start;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (!colors.empty()) {
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colors[a] < colors[b]; });
    }
    std::uint64_t active = 0;
    for (int i = 0; i < n; ++i) {
        start.lab[i] = static_cast<std::uint8_t>(order[i]);
        const bool opens = i == 0 || (!colors.empty() && colors[order[i]] != colors[order[i - 1]]);
        if (opens) {
            active |= bit(i);
        }
    }
    for (int i = 0; i < n;) {
        int j = i + 1;
        while (j < n && !(active & bit(j))) {
            ++j;
        }
        start.len[i] = static_cast<std::uint8_t>(j - i);
        i = j;
    }

    Search search(masks);
    search.run(start, active);

    result.vertex_at.resize(n);
    result.position.resize(n);
    result.rows.resize(n);
    for (int i = 0; i < n; ++i) {
        result.vertex_at[i] = search.best_lab()[i];
        result.position[search.best_lab()[i]] = i;
        result.rows[i] = search.best_rows()[i];
    }

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& g : search.generators()) {
        std::vector<int> gamma(g.begin(), g.begin() + n);
        for (int i = 0; i < n; ++i) {
            int a = find(i);
            int b = find(gamma[i]);
            if (a != b) {
                parent[std::max(a, b)] = std::min(a, b);
            }
        }
        result.generators.push_back(std::move(gamma));
    }
    result.orbit.resize(n);
    for (int i = 0; i < n; ++i) {
        result.orbit[i] = find(i);
    }
    result.leaves_visited = search.leaves();
    return result;
}

CanonicalForm canonical_form_of_masks(std::span<const std::uint64_t> masks)
{
    auto labeling = canonical_labeling(masks);
    return CanonicalForm(masks_to_graph6(labeling.rows));
}

CanonicalForm canonical_form(const Graph& g)
{
    return canonical_form_of_masks(g.adjacency_masks());
}

Graph canonical_graph(const Graph& g)
{
    auto labeling = canonical_labeling(g.adjacency_masks());
    return g.relabeled(labeling.position);
}

bool are_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence()) {
        return false;
    }
    return canonical_form(a) == canonical_form(b);
}

}  // namespace ggindex
