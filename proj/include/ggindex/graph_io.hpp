#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ggindex/graph.hpp"

namespace ggindex {

/// Malformed input. line() is 1-based; 0 when the input was a bare string.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// graph6: N(n) size header followed by the upper triangle of the adjacency
// matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six
// bits per byte, big-endian, each byte offset by 63.

std::string to_graph6(const Graph& g);
std::string masks_to_graph6(std::span<const std::uint64_t> masks);

/// Decoded graph6 content without the connectivity requirement.
struct RawGraph {
    int order = 0;
    std::vector<Edge> edges;
};

/// Strict decoding: rejects bytes outside 63..126, truncated or oversized
/// bodies and nonzero padding bits. Throws ParseError with line 0.
RawGraph decode_graph6(std::string_view text);

/// Decodes and validates (connectivity included).
Graph from_graph6(std::string_view text);

/// One graph per line. Blank lines and a leading ">>graph6<<" header are
/// ignored. Errors carry the offending line number.
std::vector<Graph> read_graph6(std::istream& in);
void write_graph6(std::ostream& out, std::span<const Graph> graphs);

// Edge list: a header line "n m" followed by m lines "u v". Several graphs
// in one stream are separated by blank lines. '#' starts a comment.

std::string to_edge_list(const Graph& g);
std::vector<Graph> read_edge_lists(std::istream& in);
void write_edge_lists(std::ostream& out, std::span<const Graph> graphs);

enum class InputFormat { Auto, Graph6, EdgeList };

/// Auto picks edge-list when the first meaningful line holds two integers.
std::vector<Graph> read_graphs(std::istream& in, InputFormat format = InputFormat::Auto);

}  // namespace ggindex
