#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ggindex/graph.hpp"

namespace ggindex {

/// Family constructor called with parameters outside its domain, or a family
/// spec string that does not parse.
class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    CyclePendant,
    CycleHook,
    Theta,
    AlmostDendrimer,
};

/// A parametric family instance. Text syntax: "P:n", "C:n", "K:n", "KB:a,b",
/// "S:n", "CP:n", "CH:n", "TH:a,b,c", "AD:n,d".
struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    std::vector<int> params;

    static FamilySpec parse(std::string_view text);
    std::string to_string() const;

    /// Vertex count of the constructed graph.
    int order() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);
/// Center 0.
Graph star(int n);

/// C'_n: even cycle on 0..n-2 with vertex n-1 pendant at 0. Odd n >= 5.
Graph cycle_pendant(int n);

/// C''_n, realized as theta(n-3, 2, 2). Odd n >= 5.
Graph cycle_hook(int n);

/// Hubs 0 and 1 joined by internally disjoint paths of lengths a >= b >= c.
/// Interior vertices are numbered path by path, a first.
Graph theta(int a, int b, int c);

/// Breadth-first filled tree T_{n,d}: the root takes min(d, remaining)
/// children, every later vertex in breadth-first order min(d-1, remaining).
Graph almost_dendrimer(int n, int d);

Graph construct(const FamilySpec& spec);

/// Closed-form NGG for Path, even Cycle, CompleteBipartite, Star,
/// CyclePendant and CycleHook. Throws FamilyError for other kinds.
double ngg_closed(const FamilySpec& spec);

bool has_ngg_closed_form(const FamilySpec& spec);

/// sum_{i=1}^{n-1} 1/sqrt(i (n-i)).
double path_ngg(long long n);

/// Limit of NGG(P_n) as n grows: pi.
double path_ngg_limit();

}  // namespace ggindex
