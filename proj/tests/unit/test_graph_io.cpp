#include <catch_amalgamated.hpp>

#include <sstream>

#include "ggindex/families.hpp"
#include "ggindex/graph_io.hpp"
#include "oracles.hpp"

using namespace ggindex;

namespace {

// Straightforward graph6 writer kept separate from the library's.
std::string reference_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else if (n <= 258047) {
        out += static_cast<char>(126);
        for (int shift = 12; shift >= 0; shift -= 6) {
            out += static_cast<char>(63 + ((n >> shift) & 63));
        }
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(126);
        for (int shift = 30; shift >= 0; shift -= 6) {
            out += static_cast<char>(63 + ((static_cast<long long>(n) >> shift) & 63));
        }
    }
    std::vector<int> bits;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            bits.push_back(g.has_edge(i, j) ? 1 : 0);
        }
    }
    while (bits.size() % 6 != 0) {
        bits.push_back(0);
    }
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b) {
            value = value * 2 + bits[k + b];
        }
        out += static_cast<char>(63 + value);
    }
    return out;
}

}  // namespace

TEST_CASE("graph6 of well-known graphs")
{
    CHECK(to_graph6(path(2)) == "A_");
    CHECK(to_graph6(complete(3)) == "Bw");
    CHECK(to_graph6(path(4)) == "Ch");
    CHECK(to_graph6(complete(4)) == "C~");
    CHECK(to_graph6(cycle(5)) == "Dhc");
}

TEST_CASE("graph6 writer matches the reference writer bit for bit")
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const int n = 1 + static_cast<int>(seed * 7 % 80);
        const auto g = oracle::random_connected(n, 0.08, seed);
        const auto text = to_graph6(g);
        CHECK(text == reference_graph6(g));
        CHECK(from_graph6(text) == g);
    }
}

TEST_CASE("graph6 long header for n >= 63")
{
    const auto g = path(63);
    const auto text = to_graph6(g);
    REQUIRE(text.size() > 4);
    CHECK(text[0] == '~');
    CHECK(text.substr(1, 3) == std::string{static_cast<char>(63), static_cast<char>(63 + 0), static_cast<char>(63 + 63)});
    CHECK(from_graph6(text) == g);
    const auto big = path(300);
    CHECK(from_graph6(to_graph6(big)) == big);
}

TEST_CASE("graph6 decoding is strict")
{
    CHECK_THROWS_AS(decode_graph6(""), ParseError);
    CHECK_THROWS_AS(decode_graph6("C"), ParseError);        // truncated body
    CHECK_THROWS_AS(decode_graph6("Chh"), ParseError);      // trailing bytes
    CHECK_THROWS_AS(decode_graph6("C i"), ParseError);      // byte below 63
    CHECK_THROWS_AS(decode_graph6("A`"), ParseError);       // nonzero padding
    CHECK_THROWS_AS(decode_graph6("~??"), ParseError);      // truncated long header
    CHECK_NOTHROW(decode_graph6("@"));
    CHECK(decode_graph6("@").order == 1);
    const auto raw = decode_graph6("Ch");
    CHECK(raw.order == 4);
    CHECK(raw.edges.size() == 3);
}

TEST_CASE("from_graph6 rejects disconnected graphs")
{
    CHECK_THROWS_AS(from_graph6("A?"), GraphError);
    CHECK_THROWS_AS(from_graph6("?"), GraphError);
}

TEST_CASE("read_graph6 reports the offending line")
{
    std::istringstream in(">>graph6<<Ch\n\nDhc\nbad!\n");
    try {
        read_graph6(in);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
    std::istringstream ok(">>graph6<<Ch\n\nDhc\n");
    const auto graphs = read_graph6(ok);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[1] == cycle(5));
}

TEST_CASE("read_graph6 reports disconnected graphs with their line")
{
    std::istringstream in("Ch\nA?\n");
    try {
        read_graph6(in);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("edge list round trip")
{
    const std::vector<Graph> graphs{path(5), cycle(6), complete_bipartite(2, 3)};
    std::ostringstream out;
    write_edge_lists(out, graphs);
    std::istringstream in("# header comment\n" + out.str());
    const auto back = read_edge_lists(in);
    REQUIRE(back.size() == graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        CHECK(back[i] == graphs[i]);
    }
}

TEST_CASE("edge list errors carry line numbers")
{
    std::istringstream missing("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_lists(missing), ParseError);
    std::istringstream bad("3 2\n0 1\n1 x\n");
    try {
        read_edge_lists(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("format detection")
{
    std::istringstream g6("Ch\nDhc\n");
    CHECK(read_graphs(g6).size() == 2);
    std::istringstream el("4 3\n0 1\n1 2\n2 3\n");
    const auto graphs = read_graphs(el);
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0] == path(4));
    std::ostringstream out;
    write_graph6(out, std::vector<Graph>{path(4), cycle(5)});
    CHECK(out.str() == "Ch\nDhc\n");
}
