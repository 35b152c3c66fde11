#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ggindex/extremal.hpp"
#include "ggindex/families.hpp"
#include "ggindex/indices.hpp"

namespace ggindex {

enum class OutputFormat { Json, Csv, Text };

/// "json", "csv" or "text"; throws std::invalid_argument otherwise.
OutputFormat parse_output_format(std::string_view text);

/// 10 significant digits, shortest form ("%.10g").
std::string format_significant(double value);
/// 4 decimals ("%.4f").
std::string format_fixed(double value);
/// The double nearest to format_significant(value).
double round_significant(double value);

struct ReportOptions {
    OutputFormat format = OutputFormat::Json;
    /// Runtime is always shown in text; in JSON and CSV only on request so
    /// that repeated runs produce identical bytes.
    bool include_runtime = false;
};

void write_verification(std::ostream& out, const VerificationReport& report, const ReportOptions& options);
std::string verification_json(const VerificationReport& report, bool include_runtime = false);

struct IndexSelection {
    bool gg = true;
    bool ngg = true;
    bool abc = true;
    bool splits = false;

    /// Comma-separated subset of gg, ngg, abc.
    static IndexSelection parse(std::string_view text);
};

struct IndexRecord {
    /// 1-based position in the input.
    std::size_t position = 0;
    std::string graph6;
    int order = 0;
    int size = 0;
    bool bipartite = false;
    IndexValues values;
    std::vector<EdgeSplit> splits;
};

IndexRecord make_index_record(const Graph& g, std::size_t position, const IndexSelection& selection);
void write_index_records(std::ostream& out, const std::vector<IndexRecord>& records,
                         const IndexSelection& selection, OutputFormat format);

struct FamilyRecord {
    FamilySpec spec;
    std::string graph6;
    int order = 0;
    int size = 0;
    std::optional<double> ngg_closed;
    IndexValues values;
};

FamilyRecord make_family_record(const FamilySpec& spec);
void write_family_record(std::ostream& out, const FamilyRecord& record, OutputFormat format);

struct EnumerationSummary {
    Constraints constraints;
    std::size_t count = 0;
    /// Empty when only counting.
    std::vector<std::string> graph6;
    std::optional<std::string> written_to;
};

void write_enumeration_summary(std::ostream& out, const EnumerationSummary& summary, OutputFormat format);

}  // namespace ggindex
