#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ggindex/enumerate.hpp"
#include "ggindex/extremal.hpp"
#include "ggindex/families.hpp"
#include "ggindex/graph_io.hpp"
#include "ggindex/report.hpp"

namespace {

using namespace ggindex;

constexpr int kExitFailure = 1;
constexpr int kExitError = 2;

struct Global {
    std::string format = "json";
    double epsilon = kDefaultTieTolerance;
    int workers = 1;
    std::optional<int> max_n;
    std::string out;
    bool timing = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

long long parse_integer(const std::string& text)
{
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == text.size() && !text.empty()) {
        return value;
    }
    // Accept scientific notation for whole numbers, e.g. 1e6.
    try {
        const double d = std::stod(text, &used);
        if (used == text.size() && d == std::floor(d) && std::abs(d) < 9e15) {
            return static_cast<long long>(d);
        }
    } catch (const std::exception&) {
    }
    throw UsageError("not an integer: \"" + text + "\"");
}

/// "a..b", "a,b,c" or a mix such as "4..6,9".
std::vector<long long> parse_range(const std::string& text)
{
    std::vector<long long> out;
    std::stringstream pieces(text);
    std::string piece;
    while (std::getline(pieces, piece, ',')) {
        const auto dots = piece.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_integer(piece));
            continue;
        }
        const long long lo = parse_integer(piece.substr(0, dots));
        const long long hi = parse_integer(piece.substr(dots + 2));
        if (hi < lo) {
            throw UsageError("empty range \"" + piece + "\"");
        }
        if (hi - lo > 1000000) {
            throw UsageError("range \"" + piece + "\" is too long");
        }
        for (long long n = lo; n <= hi; ++n) {
            out.push_back(n);
        }
    }
    if (out.empty()) {
        throw UsageError("empty range");
    }
    return out;
}

std::vector<int> as_ints(const std::vector<long long>& values)
{
    std::vector<int> out;
    for (long long v : values) {
        if (v < 0 || v > 1000000) {
            throw UsageError("n out of range: " + std::to_string(v));
        }
        out.push_back(static_cast<int>(v));
    }
    return out;
}

OutputFormat format_of(const Global& g) { return parse_output_format(g.format); }

EnumerationOptions enumeration_options(const Global& g)
{
    EnumerationOptions options;
    if (g.max_n) {
        options.limits = options.limits.with_general(*g.max_n);
    }
    options.workers = g.workers;
    return options;
}

/// Runs body with an output stream: --out file, or stdout.
template <typename Body>
void with_output(const std::string& path, Body&& body)
{
    if (path.empty() || path == "-") {
        body(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    body(file);
    if (!file) {
        throw std::runtime_error("write to " + path + " failed");
    }
}

int run_index(const Global& g, const std::string& input, const std::string& which, bool splits,
              const std::string& input_format)
{
    auto selection = IndexSelection::parse(which);
    selection.splits = splits;
    InputFormat fmt = InputFormat::Auto;
    if (input_format == "graph6") {
        fmt = InputFormat::Graph6;
    } else if (input_format == "edgelist") {
        fmt = InputFormat::EdgeList;
    }

    std::vector<Graph> graphs;
    if (input == "-") {
        graphs = read_graphs(std::cin, fmt);
    } else {
        std::ifstream file(input);
        if (!file) {
            throw std::runtime_error("cannot open " + input);
        }
        graphs = read_graphs(file, fmt);
    }
    std::vector<IndexRecord> records;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        records.push_back(make_index_record(graphs[i], i + 1, selection));
    }
    with_output(g.out, [&](std::ostream& out) { write_index_records(out, records, selection, format_of(g)); });
    return 0;
}

int run_family(const Global& g, const std::string& spec_text, const std::string& graph_out)
{
    const auto spec = FamilySpec::parse(spec_text);
    const auto record = make_family_record(spec);
    if (!graph_out.empty()) {
        const Graph graph = construct(spec);
        with_output(graph_out, [&](std::ostream& out) { out << to_graph6(graph) << '\n'; });
    }
    with_output(g.out, [&](std::ostream& out) { write_family_record(out, record, format_of(g)); });
    return 0;
}

struct EnumerateArgs {
    int n = 0;
    bool bipartite = false;
    bool trees = false;
    std::optional<int> max_degree;
    std::optional<int> cyclomatic;
    bool count_only = false;
    std::string graphs_out;
};

int run_enumerate(const Global& g, const EnumerateArgs& args, bool format_given)
{
    Constraints c;
    c.n = args.n;
    c.bipartite_only = args.bipartite;
    c.trees_only = args.trees;
    c.max_degree = args.max_degree;
    c.cyclomatic = args.cyclomatic;
    const auto options = enumeration_options(g);
    const auto format = format_given ? format_of(g) : OutputFormat::Text;

    EnumerationSummary summary;
    summary.constraints = c;
    if (args.count_only) {
        summary.count = count_classes(c, options);
    } else {
        const auto stream = enumerate_connected(c, options);
        summary.count = stream.size();
        if (!args.graphs_out.empty()) {
            with_output(args.graphs_out, [&](std::ostream& out) { write_graph6(out, stream); });
            summary.written_to = args.graphs_out;
        } else {
            for (const auto& item : stream) {
                summary.graph6.push_back(item.form.graph6());
            }
        }
    }
    with_output(g.out, [&](std::ostream& out) { write_enumeration_summary(out, summary, format); });
    if (format == OutputFormat::Text && !summary.graph6.empty()) {
        std::cerr << summary.count << " graphs (" << c.describe() << ")\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string claim;
    std::string range;
    std::string delta;
};

int run_verify(const Global& g, const VerifyArgs& args, bool format_given)
{
    VerifyOptions options;
    options.enumeration = enumeration_options(g);
    options.epsilon = g.epsilon;

    auto range_or = [&](const char* fallback) { return parse_range(args.range.empty() ? fallback : args.range); };

    VerificationReport report;
    const auto& claim = args.claim;
    if (claim == "max-bipartite") {
        report = verify_max_bipartite(as_ints(range_or("4..10")), options);
    } else if (claim == "min-bipartite") {
        report = verify_min_bipartite(as_ints(range_or("4..10")), options);
    } else if (claim == "trees") {
        report = verify_tree_extremals(as_ints(range_or("4..12")), options);
    } else if (claim == "crossover") {
        std::vector<int> odd;
        const bool explicit_list = args.range.find("..") == std::string::npos && !args.range.empty();
        for (int n : as_ints(range_or("5..99"))) {
            if (n % 2 == 1) {
                odd.push_back(n);
            } else if (explicit_list) {
                throw UsageError("crossover takes odd n only, got " + std::to_string(n));
            }
        }
        report = verify_crossover(odd);
    } else if (claim == "asymptote") {
        report = verify_asymptote(range_or("100,1000,10000,100000,1000000"));
    } else if (claim == "conjecture1" || claim == "conjecture2" || claim == "conjecture3") {
        const int which = claim.back() - '0';
        std::optional<int> delta = 3;
        if (args.delta == "n-1") {
            delta.reset();
        } else if (!args.delta.empty()) {
            delta = static_cast<int>(parse_integer(args.delta));
        }
        report = probe_conjecture(which, as_ints(range_or(which == 3 ? "6..12" : "6..10")), delta, options);
    } else {
        throw UsageError("unknown claim \"" + claim +
                         "\" (expected max-bipartite, min-bipartite, trees, crossover, asymptote, conjecture1, "
                         "conjecture2 or conjecture3)");
    }

    ReportOptions ro;
    ro.format = format_given ? format_of(g) : OutputFormat::Json;
    ro.include_runtime = g.timing;
    with_output(g.out, [&](std::ostream& out) { write_verification(out, report, ro); });
    return report.passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Graovac-Ghorbani index toolkit: compute indices, build graph families, enumerate small graphs "
                 "and check extremal results."};
    app.require_subcommand(1);

    Global global;
    const unsigned hw = std::thread::hardware_concurrency();
    global.workers = hw == 0 ? 1 : static_cast<int>(hw);

    auto* format_opt = app.add_option("--format", global.format, "Output format: json, csv or text")
                           ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--epsilon", global.epsilon, "Absolute tie tolerance on index values")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--workers", global.workers, "Worker threads for enumeration and scans")
        ->check(CLI::Range(1, 1024))
        ->capture_default_str();
    app.add_option("--max-n", global.max_n,
                   std::string("Feasibility bound for general enumeration (default 10, or $") +
                       kMaxOrderEnvironmentVariable + ")")
        ->check(CLI::Range(1, kMaxBitsetOrder));
    app.add_option("--out", global.out, "Write the report to this file instead of stdout");
    app.add_flag("--timing", global.timing, "Include runtime in JSON and CSV reports");
    app.fallthrough();

    std::string index_input;
    std::string which = "gg,ngg,abc";
    bool splits = false;
    std::string input_format = "auto";
    auto* index_cmd = app.add_subcommand("index", "Compute GG, NGG and ABC for every graph in a file");
    index_cmd->add_option("input", index_input, "graph6 or edge-list file, '-' for stdin")->required();
    index_cmd->add_option("--which", which, "Comma-separated subset of gg, ngg, abc")->capture_default_str();
    index_cmd->add_flag("--splits", splits, "Include per-edge n_u, n_v");
    index_cmd->add_option("--input-format", input_format, "auto, graph6 or edgelist")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}))
        ->capture_default_str();

    std::string spec_text;
    std::string graph_out;
    auto* family_cmd = app.add_subcommand("family", "Construct a family member, e.g. P:10, KB:3,4, AD:41,3");
    family_cmd->add_option("spec", spec_text, "Family spec")->required();
    family_cmd->add_option("--graph-out", graph_out, "Also write the graph as graph6 to this file");

    EnumerateArgs enum_args;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List connected graphs up to isomorphism");
    enumerate_cmd->add_option("--n", enum_args.n, "Number of vertices")->required()->check(CLI::Range(1, 64));
    enumerate_cmd->add_flag("--bipartite", enum_args.bipartite, "Bipartite graphs only");
    enumerate_cmd->add_flag("--trees", enum_args.trees, "Trees only");
    enumerate_cmd->add_option("--max-degree", enum_args.max_degree, "Maximum vertex degree")
        ->check(CLI::NonNegativeNumber);
    enumerate_cmd->add_option("--cyclomatic", enum_args.cyclomatic, "Exact cyclomatic number m - n + 1")
        ->check(CLI::NonNegativeNumber);
    enumerate_cmd->add_flag("--count-only", enum_args.count_only, "Report the count without listing graphs");
    enumerate_cmd->add_option("--graphs-out", enum_args.graphs_out, "Write graph6 lines to this file");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Check an extremal claim exhaustively over a range of n");
    verify_cmd
        ->add_option("claim", verify_args.claim,
                     "max-bipartite, min-bipartite, trees, crossover, asymptote, conjecture1, conjecture2 or "
                     "conjecture3")
        ->required();
    verify_cmd->add_option("--n", verify_args.range, "Range 'a..b' or list 'a,b,c'");
    verify_cmd->add_option("--delta", verify_args.delta, "Degree bound for conjecture probes (default 3, or n-1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    const bool format_given = format_opt->count() > 0;
    try {
        if (*index_cmd) {
            return run_index(global, index_input, which, splits, input_format);
        }
        if (*family_cmd) {
            return run_family(global, spec_text, graph_out);
        }
        if (*enumerate_cmd) {
            return run_enumerate(global, enum_args, format_given);
        }
        if (*verify_cmd) {
            return run_verify(global, verify_args, format_given);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const EnumerationRefused& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
