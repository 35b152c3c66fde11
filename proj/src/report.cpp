#include "ggindex/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ggindex/graph_io.hpp"

namespace ggindex {

namespace {

using Json = nlohmann::ordered_json;

Json number(double value) { return round_significant(value); }

std::string csv_field(const std::string& text)
{
    if (text.find_first_of(",\"\n\r") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << csv_field(fields[i]);
    }
    out << '\n';
}

std::string join(const std::vector<std::string>& items, std::string_view separator)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) {
            out += separator;
        }
        out += items[i];
    }
    return out;
}

std::string optional_number(const std::optional<double>& value)
{
    return value ? format_significant(*value) : std::string();
}

Json constraints_json(const Constraints& c)
{
    Json out;
    out["n"] = c.n;
    out["bipartite"] = c.bipartite_only;
    out["trees"] = c.trees_only;
    out["max_degree"] = c.max_degree ? Json(*c.max_degree) : Json(nullptr);
    out["cyclomatic"] = c.cyclomatic ? Json(*c.cyclomatic) : Json(nullptr);
    return out;
}

Json row_json(const VerificationRow& row)
{
    Json out;
    out["n"] = row.n;
    out["outcome"] = row.outcome;
    out["pass"] = row.pass;
    out["value"] = row.value ? number(*row.value) : Json(nullptr);
    out["expected_value"] = row.expected_value ? number(*row.expected_value) : Json(nullptr);
    out["total_classes"] = row.total_classes;
    out["tie"] = row.tie;
    Json witnesses = Json::array();
    for (std::size_t i = 0; i < row.witnesses.size(); ++i) {
        Json w;
        w["graph6"] = row.witnesses[i];
        const bool named = i < row.witness_names.size() && !row.witness_names[i].empty();
        w["name"] = named ? Json(row.witness_names[i]) : Json(nullptr);
        witnesses.push_back(std::move(w));
    }
    out["witnesses"] = std::move(witnesses);
    out["expected_witnesses"] = row.expected_witnesses;
    Json metrics = Json::object();
    for (const auto& [name, value] : row.metrics) {
        metrics[name] = number(value);
    }
    out["metrics"] = std::move(metrics);
    Json labels = Json::object();
    for (const auto& [name, value] : row.labels) {
        labels[name] = value;
    }
    out["labels"] = std::move(labels);
    out["note"] = row.note;
    return out;
}

std::vector<std::string> metric_columns(const VerificationReport& report)
{
    std::vector<std::string> names;
    auto add = [&](const std::string& name) {
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            names.push_back(name);
        }
    };
    for (const auto& row : report.rows) {
        for (const auto& m : row.metrics) {
            add(m.first);
        }
        for (const auto& l : row.labels) {
            add(l.first);
        }
    }
    return names;
}

std::string lookup(const VerificationRow& row, const std::string& name, bool fixed)
{
    for (const auto& [key, value] : row.metrics) {
        if (key == name) {
            return fixed ? format_fixed(value) : format_significant(value);
        }
    }
    for (const auto& [key, value] : row.labels) {
        if (key == name) {
            return value;
        }
    }
    return {};
}

void write_verification_csv(std::ostream& out, const VerificationReport& report, bool include_runtime)
{
    const auto extra = metric_columns(report);
    std::vector<std::string> header = {"claim",     "n",          "outcome",        "pass", "value", "expected_value",
                                       "total_classes", "tie", "witnesses", "witness_names", "expected_witnesses"};
    header.insert(header.end(), extra.begin(), extra.end());
    header.push_back("note");
    write_csv_row(out, header);
    for (const auto& row : report.rows) {
        std::vector<std::string> fields = {report.claim,
                                           std::to_string(row.n),
                                           row.outcome,
                                           row.pass ? "true" : "false",
                                           optional_number(row.value),
                                           optional_number(row.expected_value),
                                           std::to_string(row.total_classes),
                                           row.tie ? "true" : "false",
                                           join(row.witnesses, ";"),
                                           join(row.witness_names, ";"),
                                           join(row.expected_witnesses, ";")};
        for (const auto& name : extra) {
            fields.push_back(lookup(row, name, false));
        }
        fields.push_back(row.note);
        write_csv_row(out, fields);
    }
    if (include_runtime) {
        out << "# runtime_seconds," << format_significant(report.runtime_seconds) << '\n';
    }
}

void write_verification_text(std::ostream& out, const VerificationReport& report)
{
    out << "claim: " << report.claim << (report.evidence_only ? " (evidence only)" : "") << '\n';
    out << "statement: " << report.statement << '\n';
    if (!report.scope_note.empty()) {
        out << "scope: " << report.scope_note << '\n';
    }
    const auto extra = metric_columns(report);
    for (const auto& row : report.rows) {
        out << "  n=" << std::setw(7) << std::left << row.n << std::right << ' ' << std::setw(20) << std::left
            << row.outcome << std::right;
        if (row.value) {
            out << " value " << format_fixed(*row.value);
        }
        if (row.expected_value) {
            out << " expected " << format_fixed(*row.expected_value);
        }
        if (row.total_classes > 0) {
            out << " classes " << row.total_classes;
        }
        if (!row.witnesses.empty()) {
            std::vector<std::string> shown;
            for (std::size_t i = 0; i < row.witnesses.size(); ++i) {
                const bool named = i < row.witness_names.size() && !row.witness_names[i].empty();
                shown.push_back(named ? row.witness_names[i] : row.witnesses[i]);
            }
            out << " witnesses " << join(shown, ", ");
        }
        for (const auto& name : extra) {
            const auto value = lookup(row, name, true);
            if (!value.empty()) {
                out << ' ' << name << ' ' << value;
            }
        }
        if (!row.note.empty()) {
            out << " [" << row.note << ']';
        }
        out << '\n';
    }
    std::size_t ok = 0;
    for (const auto& row : report.rows) {
        ok += row.pass ? 1 : 0;
    }
    const char* verdict = report.evidence_only ? (report.passed() ? "CONSISTENT" : "COUNTEREXAMPLE FOUND")
                                               : (report.passed() ? "PASS" : "FAIL");
    out << verdict << ": " << ok << "/" << report.rows.size() << " rows, runtime "
        << format_fixed(report.runtime_seconds) << " s\n";
}

Json values_json(const IndexValues& values, const IndexSelection& selection)
{
    Json out = Json::object();
    if (selection.gg) {
        out["gg"] = number(values.gg);
    }
    if (selection.ngg) {
        out["ngg"] = number(values.ngg);
    }
    if (selection.abc) {
        out["abc"] = number(values.abc);
    }
    return out;
}

}  // namespace

OutputFormat parse_output_format(std::string_view text)
{
    if (text == "json") {
        return OutputFormat::Json;
    }
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    if (text == "text") {
        return OutputFormat::Text;
    }
    throw std::invalid_argument("unknown output format \"" + std::string(text) + "\" (expected json, csv or text)");
}

std::string format_significant(double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.10g", value);
    return buffer;
}

std::string format_fixed(double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.4f", value);
    return buffer;
}

double round_significant(double value) { return std::strtod(format_significant(value).c_str(), nullptr); }

std::string verification_json(const VerificationReport& report, bool include_runtime)
{
    Json out;
    out["schema"] = "ggindex.verification/1";
    out["claim"] = report.claim;
    out["statement"] = report.statement;
    out["evidence_only"] = report.evidence_only;
    out["scope_note"] = report.scope_note;
    out["passed"] = report.passed();
    Json ns = Json::array();
    for (const auto& row : report.rows) {
        ns.push_back(row.n);
    }
    out["n"] = std::move(ns);
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        rows.push_back(row_json(row));
    }
    out["rows"] = std::move(rows);
    if (include_runtime) {
        out["runtime_seconds"] = number(report.runtime_seconds);
    }
    return out.dump(2) + "\n";
}

void write_verification(std::ostream& out, const VerificationReport& report, const ReportOptions& options)
{
    switch (options.format) {
    case OutputFormat::Json:
        out << verification_json(report, options.include_runtime);
        break;
    case OutputFormat::Csv:
        write_verification_csv(out, report, options.include_runtime);
        break;
    case OutputFormat::Text:
        write_verification_text(out, report);
        break;
    }
}

IndexSelection IndexSelection::parse(std::string_view text)
{
    IndexSelection s{false, false, false, false};
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (item == "gg") {
            s.gg = true;
        } else if (item == "ngg") {
            s.ngg = true;
        } else if (item == "abc") {
            s.abc = true;
        } else {
            throw std::invalid_argument("unknown index \"" + std::string(item) + "\" (expected gg, ngg or abc)");
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return s;
}

IndexRecord make_index_record(const Graph& g, std::size_t position, const IndexSelection& selection)
{
    IndexRecord record;
    record.position = position;
    record.graph6 = to_graph6(g);
    record.order = g.order();
    record.size = g.size();
    record.bipartite = is_bipartite(g);
    auto splits = edge_splits(g);
    record.values = indices_from_splits(g, splits);
    if (selection.splits) {
        record.splits = std::move(splits);
    }
    return record;
}

void write_index_records(std::ostream& out, const std::vector<IndexRecord>& records,
                         const IndexSelection& selection, OutputFormat format)
{
    switch (format) {
    case OutputFormat::Json: {
        Json doc;
        doc["schema"] = "ggindex.index/1";
        Json graphs = Json::array();
        for (const auto& r : records) {
            Json item;
            item["position"] = r.position;
            item["graph6"] = r.graph6;
            item["n"] = r.order;
            item["m"] = r.size;
            item["bipartite"] = r.bipartite;
            item.update(values_json(r.values, selection));
            if (selection.splits) {
                Json splits = Json::array();
                for (const auto& s : r.splits) {
                    splits.push_back(Json{{"u", s.edge.u}, {"v", s.edge.v}, {"n_u", s.n_u}, {"n_v", s.n_v}});
                }
                item["splits"] = std::move(splits);
            }
            graphs.push_back(std::move(item));
        }
        doc["graphs"] = std::move(graphs);
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv: {
        std::vector<std::string> header = {"position", "graph6", "n", "m", "bipartite"};
        if (selection.gg) {
            header.push_back("gg");
        }
        if (selection.ngg) {
            header.push_back("ngg");
        }
        if (selection.abc) {
            header.push_back("abc");
        }
        if (selection.splits) {
            header.insert(header.end(), {"u", "v", "n_u", "n_v"});
        }
        write_csv_row(out, header);
        for (const auto& r : records) {
            std::vector<std::string> base = {std::to_string(r.position), r.graph6, std::to_string(r.order),
                                             std::to_string(r.size), r.bipartite ? "true" : "false"};
            if (selection.gg) {
                base.push_back(format_significant(r.values.gg));
            }
            if (selection.ngg) {
                base.push_back(format_significant(r.values.ngg));
            }
            if (selection.abc) {
                base.push_back(format_significant(r.values.abc));
            }
            if (!selection.splits) {
                write_csv_row(out, base);
                continue;
            }
            for (const auto& s : r.splits) {
                auto row = base;
                row.insert(row.end(), {std::to_string(s.edge.u), std::to_string(s.edge.v), std::to_string(s.n_u),
                                       std::to_string(s.n_v)});
                write_csv_row(out, row);
            }
        }
        break;
    }
    case OutputFormat::Text:
        for (const auto& r : records) {
            out << "graph " << r.position << " (n=" << r.order << ", m=" << r.size
                << (r.bipartite ? ", bipartite" : "") << ") " << r.graph6 << '\n';
            if (selection.gg) {
                out << "  GG  " << format_fixed(r.values.gg) << '\n';
            }
            if (selection.ngg) {
                out << "  NGG " << format_fixed(r.values.ngg) << '\n';
            }
            if (selection.abc) {
                out << "  ABC " << format_fixed(r.values.abc) << '\n';
            }
            for (const auto& s : r.splits) {
                out << "  edge " << s.edge.u << '-' << s.edge.v << ": n_u=" << s.n_u << " n_v=" << s.n_v << '\n';
            }
        }
        break;
    }
}

FamilyRecord make_family_record(const FamilySpec& spec)
{
    const Graph g = construct(spec);
    FamilyRecord record;
    record.spec = spec;
    record.graph6 = to_graph6(g);
    record.order = g.order();
    record.size = g.size();
    if (has_ngg_closed_form(spec)) {
        record.ngg_closed = ngg_closed(spec);
    }
    record.values = compute_indices(g);
    return record;
}

void write_family_record(std::ostream& out, const FamilyRecord& record, OutputFormat format)
{
    switch (format) {
    case OutputFormat::Json: {
        Json doc;
        doc["schema"] = "ggindex.family/1";
        doc["spec"] = record.spec.to_string();
        doc["graph6"] = record.graph6;
        doc["n"] = record.order;
        doc["m"] = record.size;
        doc["ngg_closed_form"] = record.ngg_closed ? number(*record.ngg_closed) : Json(nullptr);
        doc["gg"] = number(record.values.gg);
        doc["ngg"] = number(record.values.ngg);
        doc["abc"] = number(record.values.abc);
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        write_csv_row(out, {"spec", "graph6", "n", "m", "ngg_closed_form", "gg", "ngg", "abc"});
        write_csv_row(out, {record.spec.to_string(), record.graph6, std::to_string(record.order),
                            std::to_string(record.size), optional_number(record.ngg_closed),
                            format_significant(record.values.gg), format_significant(record.values.ngg),
                            format_significant(record.values.abc)});
        break;
    case OutputFormat::Text:
        out << record.spec.to_string() << " (n=" << record.order << ", m=" << record.size << ") " << record.graph6
            << '\n';
        if (record.ngg_closed) {
            out << "  NGG closed form " << format_fixed(*record.ngg_closed) << '\n';
        }
        out << "  GG  " << format_fixed(record.values.gg) << '\n';
        out << "  NGG " << format_fixed(record.values.ngg) << '\n';
        out << "  ABC " << format_fixed(record.values.abc) << '\n';
        break;
    }
}

void write_enumeration_summary(std::ostream& out, const EnumerationSummary& summary, OutputFormat format)
{
    switch (format) {
    case OutputFormat::Json: {
        Json doc;
        doc["schema"] = "ggindex.enumeration/1";
        doc["constraints"] = constraints_json(summary.constraints);
        doc["count"] = summary.count;
        doc["output"] = summary.written_to ? Json(*summary.written_to) : Json(nullptr);
        if (!summary.written_to && !summary.graph6.empty()) {
            doc["graphs"] = summary.graph6;
        }
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        write_csv_row(out, {"index", "graph6"});
        for (std::size_t i = 0; i < summary.graph6.size(); ++i) {
            write_csv_row(out, {std::to_string(i + 1), summary.graph6[i]});
        }
        break;
    case OutputFormat::Text:
        for (const auto& line : summary.graph6) {
            out << line << '\n';
        }
        if (summary.graph6.empty()) {
            out << summary.count << " graphs (" << summary.constraints.describe() << ")";
            if (summary.written_to) {
                out << " written to " << *summary.written_to;
            }
            out << '\n';
        }
        break;
    }
}

}  // namespace ggindex
