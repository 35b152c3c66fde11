#include "ggindex/graph_io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace ggindex {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxPrintable = 126;
constexpr std::uint64_t kShortLimit = 62;
constexpr std::uint64_t kMediumLimit = 258047;
constexpr std::uint64_t kLongLimit = 68719476735ULL;
// Keeps n(n-1)/2 far from overflow; such bodies could not fit in memory anyway.
constexpr std::uint64_t kMaxDecodableOrder = std::uint64_t{1} << 24;

void append_size(std::string& out, std::uint64_t n)
{
    if (n <= kShortLimit) {
        out.push_back(static_cast<char>(n + kOffset));
    } else if (n <= kMediumLimit) {
        out.push_back(static_cast<char>(kMaxPrintable));
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kOffset));
        }
    } else {
        out.push_back(static_cast<char>(kMaxPrintable));
        out.push_back(static_cast<char>(kMaxPrintable));
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kOffset));
        }
    }
}

// Packs the column-ordered upper-triangle bit vector.
template <typename BitAt>
std::string encode(int n, BitAt&& bit_at)
{
    std::string out;
    append_size(out, static_cast<std::uint64_t>(n));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (bit_at(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
    }
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    return s;
}

std::string_view strip_comment(std::string_view s)
{
    if (auto hash = s.find('#'); hash != std::string_view::npos) {
        s = s.substr(0, hash);
    }
    return trim(s);
}

// Parses whitespace separated integers; false on any non-integer token.
bool parse_ints(std::string_view s, std::vector<long long>& out)
{
    out.clear();
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
            ++i;
        }
        if (i == s.size()) {
            break;
        }
        long long value = 0;
        auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
        if (ec != std::errc{}) {
            return false;
        }
        i = static_cast<std::size_t>(ptr - s.data());
        if (i < s.size() && s[i] != ' ' && s[i] != '\t') {
            return false;
        }
        out.push_back(value);
    }
    return true;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line)
{
}

std::string to_graph6(const Graph& g)
{
    if (g.has_bitset_adjacency()) {
        return masks_to_graph6(g.adjacency_masks());
    }
    return encode(g.order(), [&](int i, int j) { return g.has_edge(i, j); });
}

std::string masks_to_graph6(std::span<const std::uint64_t> masks)
{
    return encode(static_cast<int>(masks.size()),
                  [&](int i, int j) { return (masks[j] >> i) & 1U; });
}

RawGraph decode_graph6(std::string_view text)
{
    text = trim(text);
    if (text.empty()) {
        throw ParseError(0, "empty graph6 string");
    }
    for (char c : text) {
        if (static_cast<unsigned char>(c) < kOffset || static_cast<unsigned char>(c) > kMaxPrintable) {
            throw ParseError(0, "graph6 byte out of range 63..126");
        }
    }
    std::uint64_t n = 0;
    std::size_t pos = 0;
    auto take = [&](int count) {
        if (pos + count > text.size()) {
            throw ParseError(0, "truncated graph6 size header");
        }
        std::uint64_t value = 0;
        for (int k = 0; k < count; ++k) {
            value = (value << 6) | static_cast<std::uint64_t>(text[pos++] - kOffset);
        }
        return value;
    };
    if (static_cast<unsigned char>(text[0]) < kMaxPrintable) {
        n = take(1);
    } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) == kMaxPrintable) {
        pos = 2;
        n = take(6);
        if (n > kLongLimit) {
            throw ParseError(0, "graph6 order too large");
        }
    } else {
        pos = 1;
        n = take(3);
    }
    if (n > kMaxDecodableOrder) {
        throw ParseError(0, "graph6 order " + std::to_string(n) + " is too large to decode");
    }
    const std::uint64_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    const std::uint64_t body = (bits + 5) / 6;
    if (text.size() - pos != body) {
        throw ParseError(0, "graph6 body has " + std::to_string(text.size() - pos) +
                                " bytes, expected " + std::to_string(body) + " for n=" + std::to_string(n));
    }
    RawGraph raw;
    raw.order = static_cast<int>(n);
    std::uint64_t k = 0;
    for (int j = 1; j < raw.order; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + k / 6] - kOffset;
            if ((byte >> (5 - k % 6)) & 1) {
                raw.edges.push_back({i, j});
            }
        }
    }
    if (bits % 6 != 0) {
        const int last = text.back() - kOffset;
        const int pad = static_cast<int>(6 - bits % 6);
        if (last & ((1 << pad) - 1)) {
            throw ParseError(0, "nonzero graph6 padding bits");
        }
    }
    std::sort(raw.edges.begin(), raw.edges.end());
    return raw;
}

Graph from_graph6(std::string_view text)
{
    auto raw = decode_graph6(text);
    return Graph(raw.order, std::span<const Edge>(raw.edges));
}

std::vector<Graph> read_graph6(std::istream& in)
{
    std::vector<Graph> graphs;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view text = trim(line);
        if (text.empty()) {
            continue;
        }
        if (text.starts_with(">>graph6<<")) {
            text.remove_prefix(10);
            if (text.empty()) {
                continue;
            }
        }
        try {
            graphs.push_back(from_graph6(text));
        } catch (const ParseError& e) {
            throw ParseError(number, e.what());
        } catch (const GraphError& e) {
            throw ParseError(number, e.what());
        }
    }
    return graphs;
}

void write_graph6(std::ostream& out, std::span<const Graph> graphs)
{
    for (const auto& g : graphs) {
        out << to_graph6(g) << '\n';
    }
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

std::vector<Graph> read_edge_lists(std::istream& in)
{
    std::vector<Graph> graphs;
    std::string line;
    std::size_t number = 0;
    std::vector<long long> ints;

    while (true) {
        // Header.
        std::size_t header_line = 0;
        long long n = 0;
        long long m = 0;
        while (std::getline(in, line)) {
            ++number;
            auto text = strip_comment(line);
            if (text.empty()) {
                continue;
            }
            if (!parse_ints(text, ints) || ints.size() != 2) {
                throw ParseError(number, "expected header \"n m\"");
            }
            n = ints[0];
            m = ints[1];
            header_line = number;
            break;
        }
        if (header_line == 0) {
            break;
        }
        if (n < 1 || m < 0) {
            throw ParseError(header_line, "invalid header values");
        }
        std::vector<std::pair<int, int>> edges;
        edges.reserve(static_cast<std::size_t>(m));
        while (static_cast<long long>(edges.size()) < m) {
            if (!std::getline(in, line)) {
                throw ParseError(number, "expected " + std::to_string(m) + " edges, found " +
                                             std::to_string(edges.size()));
            }
            ++number;
            auto text = strip_comment(line);
            if (text.empty()) {
                throw ParseError(number, "blank line inside edge block");
            }
            if (!parse_ints(text, ints) || ints.size() != 2) {
                throw ParseError(number, "expected edge \"u v\"");
            }
            edges.emplace_back(static_cast<int>(ints[0]), static_cast<int>(ints[1]));
        }
        try {
            graphs.emplace_back(static_cast<int>(n), std::span<const std::pair<int, int>>(edges));
        } catch (const GraphError& e) {
            throw ParseError(header_line, e.what());
        }
    }
    return graphs;
}

void write_edge_lists(std::ostream& out, std::span<const Graph> graphs)
{
    bool first = true;
    for (const auto& g : graphs) {
        if (!first) {
            out << '\n';
        }
        first = false;
        out << to_edge_list(g);
    }
}

std::vector<Graph> read_graphs(std::istream& in, InputFormat format)
{
    if (format == InputFormat::Graph6) {
        return read_graph6(in);
    }
    if (format == InputFormat::EdgeList) {
        return read_edge_lists(in);
    }
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream probe(content);
    std::string line;
    std::vector<long long> ints;
    bool edge_list = false;
    while (std::getline(probe, line)) {
        auto text = strip_comment(line);
        if (text.empty()) {
            continue;
        }
        edge_list = parse_ints(text, ints) && ints.size() == 2;
        break;
    }
    std::istringstream body(content);
    return edge_list ? read_edge_lists(body) : read_graph6(body);
}

}  // namespace ggindex
