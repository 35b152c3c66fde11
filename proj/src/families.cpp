#include "ggindex/families.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <utility>

#include "ggindex/numeric.hpp"

namespace ggindex {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

Graph make(int n, const EdgeList& edges) { return Graph(n, std::span<const std::pair<int, int>>(edges)); }

void require(bool condition, const std::string& message)
{
    if (!condition) {
        throw FamilyError(message);
    }
}

struct KindName {
    FamilyKind kind;
    std::string_view tag;
    std::size_t arity;
};

constexpr KindName kKinds[] = {
    {FamilyKind::Path, "P", 1},
    {FamilyKind::Cycle, "C", 1},
    {FamilyKind::Complete, "K", 1},
    {FamilyKind::CompleteBipartite, "KB", 2},
    {FamilyKind::Star, "S", 1},
    {FamilyKind::CyclePendant, "CP", 1},
    {FamilyKind::CycleHook, "CH", 1},
    {FamilyKind::Theta, "TH", 3},
    {FamilyKind::AlmostDendrimer, "AD", 2},
};

const KindName& describe(FamilyKind kind)
{
    for (const auto& k : kKinds) {
        if (k.kind == kind) {
            return k;
        }
    }
    throw FamilyError("unknown family kind");
}

void require_odd_at_least_five(int n, const char* name)
{
    require(n >= 5 && n % 2 == 1, std::string(name) + " needs odd n >= 5, got " + std::to_string(n));
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text)
{
    const auto colon = text.find(':');
    require(colon != std::string_view::npos, "family spec \"" + std::string(text) + "\" lacks ':'");
    const auto tag = text.substr(0, colon);
    const KindName* match = nullptr;
    for (const auto& k : kKinds) {
        if (k.tag == tag) {
            match = &k;
        }
    }
    require(match != nullptr, "unknown family tag \"" + std::string(tag) + "\"");

    FamilySpec spec;
    spec.kind = match->kind;
    auto rest = text.substr(colon + 1);
    while (true) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
        require(ec == std::errc{} && ptr != rest.data(), "malformed parameters in \"" + std::string(text) + "\"");
        spec.params.push_back(value);
        rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
        if (rest.empty()) {
            break;
        }
        require(rest.front() == ',', "malformed parameters in \"" + std::string(text) + "\"");
        rest.remove_prefix(1);
    }
    require(spec.params.size() == match->arity, "family " + std::string(tag) + " takes " +
                                                    std::to_string(match->arity) + " parameter(s)");
    return spec;
}

std::string FamilySpec::to_string() const
{
    std::string out(describe(kind).tag);
    out += ':';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(params[i]);
    }
    return out;
}

int FamilySpec::order() const
{
    require(params.size() == describe(kind).arity, "wrong parameter count for " + to_string());
    switch (kind) {
    case FamilyKind::CompleteBipartite:
        return params[0] + params[1];
    case FamilyKind::Theta:
        return params[0] + params[1] + params[2] - 1;
    default:
        return params[0];
    }
}

Graph path(int n)
{
    require(n >= 2, "path needs n >= 2");
    EdgeList edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return make(n, edges);
}

Graph cycle(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    EdgeList edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return make(n, edges);
}

Graph complete(int n)
{
    require(n >= 2, "complete graph needs n >= 2");
    EdgeList edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return make(n, edges);
}

Graph complete_bipartite(int a, int b)
{
    require(a >= 1 && b >= 1, "complete bipartite graph needs a, b >= 1");
    EdgeList edges;
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) {
            edges.emplace_back(i, a + j);
        }
    }
    return make(a + b, edges);
}

Graph star(int n)
{
    require(n >= 2, "star needs n >= 2");
    EdgeList edges;
    for (int i = 1; i < n; ++i) {
        edges.emplace_back(0, i);
    }
    return make(n, edges);
}

Graph cycle_pendant(int n)
{
    require_odd_at_least_five(n, "cycle with a pendant edge");
    EdgeList edges;
    for (int i = 0; i < n - 1; ++i) {
        edges.emplace_back(i, (i + 1) % (n - 1));
    }
    edges.emplace_back(0, n - 1);
    return make(n, edges);
}

Graph cycle_hook(int n)
{
    require_odd_at_least_five(n, "cycle with a hook");
    return theta(n - 3, 2, 2);
}

Graph theta(int a, int b, int c)
{
    require(a >= b && b >= c && c >= 1, "theta needs a >= b >= c >= 1");
    require(b >= 2, "theta allows at most one path of length 1");
    require(a + b + c >= 5, "theta needs a + b + c >= 5");

    EdgeList edges;
    int next = 2;
    for (int length : {a, b, c}) {
        int previous = 0;
        for (int step = 1; step < length; ++step) {
            edges.emplace_back(previous, next);
            previous = next++;
        }
        edges.emplace_back(previous, 1);
    }
    return make(a + b + c - 1, edges);
}

Graph almost_dendrimer(int n, int d)
{
    require(n >= 2 && d >= 2, "almost dendrimer needs n >= 2 and d >= 2");
    EdgeList edges;
    int created = 1;
    for (int parent = 0; created < n; ++parent) {
        const int capacity = parent == 0 ? d : d - 1;
        for (int c = 0; c < capacity && created < n; ++c) {
            edges.emplace_back(parent, created++);
        }
    }
    return make(n, edges);
}

Graph construct(const FamilySpec& spec)
{
    require(spec.params.size() == describe(spec.kind).arity, "wrong parameter count for " + spec.to_string());
    const auto& p = spec.params;
    switch (spec.kind) {
    case FamilyKind::Path:
        return path(p[0]);
    case FamilyKind::Cycle:
        return cycle(p[0]);
    case FamilyKind::Complete:
        return complete(p[0]);
    case FamilyKind::CompleteBipartite:
        return complete_bipartite(p[0], p[1]);
    case FamilyKind::Star:
        return star(p[0]);
    case FamilyKind::CyclePendant:
        return cycle_pendant(p[0]);
    case FamilyKind::CycleHook:
        return cycle_hook(p[0]);
    case FamilyKind::Theta:
        return theta(p[0], p[1], p[2]);
    case FamilyKind::AlmostDendrimer:
        return almost_dendrimer(p[0], p[1]);
    }
    throw FamilyError("unknown family kind");
}

bool has_ngg_closed_form(const FamilySpec& spec)
{
    switch (spec.kind) {
    case FamilyKind::Path:
    case FamilyKind::CompleteBipartite:
    case FamilyKind::Star:
    case FamilyKind::CyclePendant:
    case FamilyKind::CycleHook:
        return true;
    case FamilyKind::Cycle:
        return !spec.params.empty() && spec.params[0] % 2 == 0;
    default:
        return false;
    }
}

double path_ngg(long long n)
{
    require(n >= 2, "path needs n >= 2");
    CompensatedSum<double> sum;
    const double total = static_cast<double>(n);
    for (long long i = 1; i < n; ++i) {
        const double x = static_cast<double>(i);
        sum.add(1.0 / std::sqrt(x * (total - x)));
    }
    return sum.value();
}

double path_ngg_limit() { return std::numbers::pi; }

double ngg_closed(const FamilySpec& spec)
{
    require(has_ngg_closed_form(spec), "no closed-form NGG for " + spec.to_string());
    // Validate the parameters exactly as the constructors would.
    require(spec.params.size() == describe(spec.kind).arity, "wrong parameter count for " + spec.to_string());
    const auto& p = spec.params;
    switch (spec.kind) {
    case FamilyKind::Path:
        return path_ngg(p[0]);
    case FamilyKind::Cycle:
        require(p[0] >= 4, "even cycle needs n >= 4");
        return 2.0;
    case FamilyKind::CompleteBipartite:
        require(p[0] >= 1 && p[1] >= 1, "complete bipartite graph needs a, b >= 1");
        return std::sqrt(static_cast<double>(p[0]) * p[1]);
    case FamilyKind::Star:
        require(p[0] >= 2, "star needs n >= 2");
        return std::sqrt(static_cast<double>(p[0] - 1));
    case FamilyKind::CyclePendant: {
        require_odd_at_least_five(p[0], "cycle with a pendant edge");
        const double k = (p[0] - 1) / 2;
        return 1.0 / std::sqrt(2.0 * k) + 2.0 * k / std::sqrt(k * (k + 1.0));
    }
    case FamilyKind::CycleHook: {
        require_odd_at_least_five(p[0], "cycle with a hook");
        const double k = (p[0] - 1) / 2;
        return (2.0 * k + 2.0) / std::sqrt(k * (k + 1.0));
    }
    default:
        break;
    }
    throw FamilyError("no closed-form NGG for " + spec.to_string());
}

}  // namespace ggindex
