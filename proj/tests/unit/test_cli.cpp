#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ggindex/families.hpp"
#include "ggindex/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
    int status = -1;
    std::string out;
};

Result run(const std::string& args, const std::string& env = {})
{
    const std::string command = env + (env.empty() ? "" : " ") + GGINDEX_CLI_PATH + " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = ::popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        r.out.append(buffer, got);
    }
    const int raw = ::pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

fs::path scratch(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / "ggindex_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

void write_file(const fs::path& path, const std::string& content)
{
    std::ofstream(path) << content;
}

std::size_t count_lines(const std::string& text)
{
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("index on a graph6 file")
{
    const auto file = scratch("p4_k5.g6");
    write_file(file, "Ch\nD~{\n");
    const auto r = run("index " + file.string());
    REQUIRE(r.status == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["graphs"][0]["ngg"].get<double>() == 1.654700538);
    CHECK(doc["graphs"][1]["gg"].get<double>() == 0.0);

    const auto text = run("index " + file.string() + " --format text --which ngg");
    CHECK(text.out.find("NGG 1.6547") != std::string::npos);
    CHECK(text.out.find("GG  ") == std::string::npos);
}

TEST_CASE("index on an edge-list file with splits")
{
    const auto file = scratch("c4.txt");
    write_file(file, "# a square\n4 4\n0 1\n1 2\n2 3\n3 0\n");
    const auto r = run("index " + file.string() + " --splits --format csv");
    REQUIRE(r.status == 0);
    CHECK(count_lines(r.out) == 5);
    CHECK(r.out.find(",2,2\n") != std::string::npos);
}

TEST_CASE("index errors exit nonzero")
{
    const auto bad = scratch("bad.g6");
    write_file(bad, "Ch\nbad!\n");
    CHECK(run("index " + bad.string()).status == 2);
    const auto disconnected = scratch("disconnected.g6");
    write_file(disconnected, "A?\n");
    CHECK(run("index " + disconnected.string()).status == 2);
    CHECK(run("index " + scratch("missing.g6").string()).status == 2);
    CHECK(run("index").status == 2);
    CHECK(run("nonsense").status == 2);
}

TEST_CASE("family output and closed forms")
{
    const auto r = run("family CH:9");
    REQUIRE(r.status == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["ngg_closed_form"].get<double>() == 2.236067977);
    CHECK(doc["graph6"].get<std::string>().size() > 1);
    CHECK(run("family CP:4").status == 2);
    CHECK(run("family X:4").status == 2);

    const auto out = scratch("ad.g6");
    const auto ad = run("family AD:41,3 --graph-out " + out.string());
    REQUIRE(ad.status == 0);
    CHECK(json::parse(ad.out)["n"] == 41);
    std::ifstream in(out);
    std::string line;
    std::getline(in, line);
    CHECK(line == json::parse(ad.out)["graph6"].get<std::string>());
}

TEST_CASE("family to index round trip reproduces closed forms")
{
    for (const char* spec : {"P:400", "C:398", "KB:7,9", "S:300", "CP:399", "CH:399"}) {
        const auto out = scratch("roundtrip.g6");
        REQUIRE(run(std::string("family ") + spec + " --graph-out " + out.string()).status == 0);
        const auto idx = run("index " + out.string() + " --which ngg");
        REQUIRE(idx.status == 0);
        const double computed = json::parse(idx.out)["graphs"][0]["ngg"].get<double>();
        // The report carries 10 significant digits, so compare at that precision.
        const double closed = ggindex::ngg_closed(ggindex::FamilySpec::parse(spec));
        CHECK(std::abs(computed - ggindex::round_significant(closed)) <= 1e-10);
    }
}

TEST_CASE("enumerate listings and refusals")
{
    CHECK(count_lines(run("enumerate --n 6").out) == 112);
    CHECK(count_lines(run("enumerate --n 7 --trees").out) == 11);
    const auto counted = run("enumerate --n 6 --bipartite --count-only --format json");
    CHECK(json::parse(counted.out)["count"] == 17);
    CHECK(run("enumerate --n 11").status == 2);
    CHECK(run("enumerate --n 11 --max-n 11 --count-only --max-degree 2").status == 0);
    CHECK(run("enumerate --n 11 --count-only --max-degree 2", "GGINDEX_MAX_N=11").status == 0);

    const auto out = scratch("five.g6");
    const auto written = run("enumerate --n 5 --graphs-out " + out.string() + " --format json");
    REQUIRE(written.status == 0);
    CHECK(json::parse(written.out)["count"] == 21);
    std::ifstream in(out);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(count_lines(content.str()) == 21);
}

TEST_CASE("verify subcommand outcomes and exit status")
{
    const auto max = run("verify max-bipartite --n 4..8");
    REQUIRE(max.status == 0);
    CHECK(json::parse(max.out)["passed"] == true);

    const auto cross = run("verify crossover --n 5..31");
    REQUIRE(cross.status == 0);
    const auto doc = json::parse(cross.out);
    bool flagged = false;
    for (const auto& row : doc["rows"]) {
        if (row["n"] == 15) {
            flagged = row["tie"] == true && row["labels"]["comparison"] == "equal";
        }
    }
    CHECK(flagged);

    const auto asym = run("verify asymptote --n 1000,10000,100000");
    REQUIRE(asym.status == 0);
    const auto rows = json::parse(asym.out)["rows"];
    CHECK(rows[0]["metrics"]["residual"].get<double>() > rows[1]["metrics"]["residual"].get<double>());

    // Counterexamples are failures for the exit status.
    CHECK(run("verify conjecture2 --n 6 --delta 3").status == 1);
    CHECK(run("verify conjecture2 --n 8 --delta 3").status == 0);
    CHECK(run("verify conjecture3 --n 6..9 --delta n-1").status == 0);
    CHECK(run("verify bogus").status == 2);
    CHECK(run("verify crossover --n 8").status == 2);
    CHECK(run("verify max-bipartite --n 12").status == 2);
    CHECK(run("verify max-bipartite --epsilon 0").status == 2);
}

TEST_CASE("JSON output is byte-identical across runs and worker counts")
{
    const auto a = run("verify min-bipartite --n 4..9 --workers 1");
    const auto b = run("verify min-bipartite --n 4..9 --workers 4");
    const auto c = run("verify min-bipartite --n 4..9 --workers 1");
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("report goes to --out")
{
    const auto out = scratch("report.json");
    const auto r = run("verify trees --n 4..6 --out " + out.string());
    REQUIRE(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(out);
    const auto doc = json::parse(in);
    CHECK(doc["claim"] == "trees");
}
