// Acceptance suite: one PASS/FAIL line per criterion. Exit status is zero
// only when every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ggindex/enumerate.hpp"
#include "ggindex/extremal.hpp"
#include "ggindex/families.hpp"
#include "ggindex/indices.hpp"
#include "oracles.hpp"

using namespace ggindex;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void require(bool condition, const std::string& what)
    {
        if (!condition) {
            pass = false;
            details.push_back(what);
        }
    }
    void note(const std::string& what) { details.push_back(what); }
};

std::string fmt(const char* format, double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, format, value);
    return buffer;
}

EnumerationOptions options()
{
    EnumerationOptions o;
    o.limits = EnumerationLimits{};
    const unsigned hw = std::thread::hardware_concurrency();
    o.workers = hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
    return o;
}

VerifyOptions verify_options()
{
    VerifyOptions v;
    v.enumeration = options();
    v.epsilon = 1e-9;
    return v;
}

std::vector<int> range(int lo, int hi, int step = 1)
{
    std::vector<int> out;
    for (int n = lo; n <= hi; n += step) {
        out.push_back(n);
    }
    return out;
}

std::string names(const VerificationRow& row)
{
    std::string out;
    for (std::size_t i = 0; i < row.witnesses.size(); ++i) {
        const auto& name = i < row.witness_names.size() && !row.witness_names[i].empty() ? row.witness_names[i]
                                                                                          : row.witnesses[i];
        out += (out.empty() ? "" : ", ") + name;
    }
    return out;
}

Outcome table_values()
{
    Outcome o;
    const std::pair<int, double> table[] = {{4, 1.6547},  {6, 1.9349},  {8, 2.0997},  {10, 2.2114}, {12, 2.2934},
                                            {14, 2.3570}, {16, 2.4081}, {18, 2.4504}, {20, 2.4862}, {22, 2.5169},
                                            {24, 2.5436}, {26, 2.5672}, {28, 2.5882}, {30, 2.6071}};
    for (const auto& [n, expected] : table) {
        const double computed = std::round(ngg_index(path(n)) * 1e4) / 1e4;
        const double closed = std::round(ngg_closed({FamilyKind::Path, {n}}) * 1e4) / 1e4;
        o.require(std::abs(computed - expected) <= 1e-4 + 1e-12,
                  "n=" + std::to_string(n) + " computed " + fmt("%.4f", computed));
        o.require(std::abs(closed - expected) <= 1e-4 + 1e-12,
                  "n=" + std::to_string(n) + " closed form " + fmt("%.4f", closed));
    }
    o.note("14 values checked");
    return o;
}

Outcome bipartite_relation()
{
    Outcome o;
    std::size_t graphs = 0;
    for (int n = 1; n <= 9; ++n) {
        Constraints c;
        c.n = n;
        c.bipartite_only = true;
        for (const auto& item : enumerate_connected(c, options())) {
            ++graphs;
            const auto& g = item.graph;
            if (n <= 9 && !oracle::bipartite_by_colorings(g)) {
                o.require(false, "non-bipartite graph in bipartite stream: " + item.form.graph6());
            }
            for (const auto& s : edge_splits(g)) {
                if (s.n_u + s.n_v != n) {
                    o.require(false, "split sum " + std::to_string(s.n_u + s.n_v) + " in " + item.form.graph6());
                }
            }
            const double gg = gg_index(g);
            const double scaled = ngg_index(g) * std::sqrt(static_cast<double>(std::max(n - 2, 0)));
            if (std::abs(gg - scaled) > 1e-12 * std::abs(gg)) {
                o.require(false, "GG relation off for " + item.form.graph6());
            }
        }
    }
    o.note(std::to_string(graphs) + " bipartite graphs, n <= 9");
    return o;
}

Outcome max_bipartite()
{
    Outcome o;
    const auto report = verify_max_bipartite(range(4, 10), verify_options());
    for (const auto& row : report.rows) {
        const long long a = row.n / 2;
        const long long b = row.n - a;
        const double expected = std::sqrt(static_cast<double>(a * b));
        o.require(row.pass && row.witnesses.size() == 1 && row.value && std::abs(*row.value - expected) <= 1e-9,
                  "n=" + std::to_string(row.n) + ": " + names(row));
    }
    o.note("n=4..10, " + fmt("%.2f s enumeration and scan", report.runtime_seconds));
    return o;
}

Outcome min_bipartite()
{
    Outcome o;
    const auto report = verify_min_bipartite(range(4, 10), verify_options());
    for (const auto& row : report.rows) {
        o.require(row.pass && row.witnesses.size() == 1,
                  "n=" + std::to_string(row.n) + ": got " + names(row) + " (" + row.outcome + ")");
    }
    std::string summary;
    for (const auto& row : report.rows) {
        summary += (summary.empty() ? "" : " ") + std::to_string(row.n) + ":" + names(row);
    }
    o.note(summary);
    return o;
}

Outcome tree_extremals()
{
    Outcome o;
    const auto report = verify_tree_extremals(range(4, 12), verify_options());
    for (const auto& row : report.rows) {
        o.require(row.pass, "n=" + std::to_string(row.n) + ": " + names(row));
    }
    o.note("n=4..12 min P_n, max S_n");
    return o;
}

Outcome crossover()
{
    Outcome o;
    const auto rows = crossover_scan(range(5, 99, 2));
    for (const auto& r : rows) {
        const char* got = r.order < 0 ? "C' < C''" : (r.order > 0 ? "C'' < C'" : "equal");
        const char* want = r.k <= 6 ? "C' < C''" : (r.k == 7 ? "equal" : "C'' < C'");
        o.require(std::string(got) == want, "n=" + std::to_string(r.n) + ": " + got);
        if (r.k == 7) {
            const double target = 8.0 / std::sqrt(14.0);
            o.require(std::abs(r.pendant - target) <= 1e-12 && std::abs(r.hook - target) <= 1e-12,
                      "n=15 values " + fmt("%.15f", r.pendant) + " / " + fmt("%.15f", r.hook));
            o.note("tie at n=15: both " + fmt("%.5f", r.pendant));
        }
    }
    return o;
}

Outcome asymptote()
{
    Outcome o;
    const std::vector<long long> ns{100, 1000, 10000, 100000, 1000000};
    const auto rows = asymptotic_check(ns);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        o.require(rows[i].residual > 0.0, "residual not positive at n=" + std::to_string(rows[i].n));
        if (i > 0) {
            o.require(rows[i].residual < rows[i - 1].residual,
                      "residual not decreasing at n=" + std::to_string(rows[i].n));
        }
    }
    o.require(rows.back().residual < 0.01, "residual at 10^6 is " + fmt("%.6f", rows.back().residual));
    o.note("residual at 10^6: " + fmt("%.6f", rows.back().residual));
    return o;
}

Outcome complete_graphs()
{
    Outcome o;
    for (int n = 2; n <= 12; ++n) {
        const double gg = gg_index(complete(n));
        o.require(gg == 0.0, "GG(K_" + std::to_string(n) + ") = " + fmt("%.3g", gg));
    }
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    const std::vector<oracle::BruteForceFilter> filters{{}, {true, false, -1}, {false, true, -1}, {false, false, 3}};
    const char* labels[] = {"unconstrained", "bipartite", "trees", "max degree 3"};
    for (int n = 1; n <= 7; ++n) {
        const auto expected = oracle::brute_force_classes(n, filters);
        for (std::size_t f = 0; f < filters.size(); ++f) {
            Constraints c;
            c.n = n;
            c.bipartite_only = filters[f].bipartite;
            c.trees_only = filters[f].trees;
            if (filters[f].max_degree >= 0) {
                c.max_degree = filters[f].max_degree;
            }
            std::set<std::string> got;
            for (const auto& item : enumerate_connected(c, options())) {
                got.insert(item.form.key());
            }
            o.require(got == expected[f], "n=" + std::to_string(n) + " " + labels[f] + ": " +
                                              std::to_string(got.size()) + " vs oracle " +
                                              std::to_string(expected[f].size()));
        }
        if (n == 7) {
            o.note("n=7 classes: " + std::to_string(expected[0].size()) + " / " + std::to_string(expected[1].size()) +
                   " / " + std::to_string(expected[2].size()) + " / " + std::to_string(expected[3].size()));
        }
    }
    // Trees also against the Prufer oracle.
    for (int n = 1; n <= 7; ++n) {
        std::set<std::string> got;
        for (const auto& item : enumerate_trees(n, options())) {
            got.insert(item.form.key());
        }
        o.require(got == oracle::prufer_tree_classes(n), "trees n=" + std::to_string(n) + " vs Prufer oracle");
    }
    return o;
}

Outcome conjectures()
{
    Outcome o;
    const auto v = verify_options();

    const auto c2 = probe_conjecture(2, range(6, 10), 3, v);
    std::string c2_line = "conjecture 2, delta=3, n=6..10:";
    for (const auto& row : c2.rows) {
        c2_line += " " + std::to_string(row.n) + ":" + (row.pass ? "consistent" : "counterexample(" + names(row) + ")");
    }
    o.require(c2.passed(), c2_line);
    if (c2.passed()) {
        o.note(c2_line);
    }

    for (int delta : {3, 4}) {
        const auto c3 = probe_conjecture(3, range(6, 12), delta, v);
        std::string line = "conjecture 3, delta=" + std::to_string(delta) + ", trees n=6..12:";
        for (const auto& row : c3.rows) {
            line += " " + std::to_string(row.n) + ":" + (row.pass ? "consistent" : "counterexample(" + names(row) + ")");
        }
        o.require(c3.passed(), line);
        if (c3.passed()) {
            o.note(line);
        }
    }

    const auto anchor = probe_conjecture(3, range(6, 12), std::nullopt, v);
    bool stars = anchor.passed();
    for (const auto& row : anchor.rows) {
        stars = stars && row.witness_names == std::vector<std::string>{"S_" + std::to_string(row.n)};
    }
    o.require(stars, "delta = n-1 anchor does not yield the star");
    if (stars) {
        o.note("delta = n-1 anchor: star at every n=6..12");
    }
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<Outcome()> check;
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "NGG(P_n) reference values to 4 decimals", 1.0, table_values},
        {2, "bipartite split sums and GG = NGG sqrt(n-2), n <= 9", 120.0, bipartite_relation},
        {3, "maximum NGG over bipartite graphs, n = 4..10", 600.0, max_bipartite},
        {4, "minimum NGG over bipartite graphs, n = 4..10", 600.0, min_bipartite},
        {5, "tree extremes: path minimum, star maximum, n = 4..12", 60.0, tree_extremals},
        {6, "C'_n versus C''_n crossover, odd n = 5..99", 1.0, crossover},
        {7, "pi - NGG(P_n) positive, decreasing, < 0.01 at 10^6", 10.0, asymptote},
        {8, "GG(K_n) = 0 for n = 2..12", 1.0, complete_graphs},
        {9, "generator equals brute-force oracle, n <= 7", 120.0, oracle_equivalence},
        {10, "conjecture probes", 900.0, conjectures},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.details.push_back(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.budget_seconds) {
            outcome.pass = false;
            outcome.details.push_back("runtime " + fmt("%.2f", seconds) + " s exceeds " +
                                      fmt("%.0f", c.budget_seconds) + " s");
        }
        failures += outcome.pass ? 0 : 1;
        std::printf("AC%-2d %s  %s (%.3f s)\n", c.id, outcome.pass ? "PASS" : "FAIL", c.title, seconds);
        for (const auto& d : outcome.details) {
            std::printf("       %s\n", d.c_str());
        }
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
