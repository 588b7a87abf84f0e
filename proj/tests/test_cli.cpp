#include "cli.hpp"

#include "hsilab/families.hpp"
#include "hsilab/graph_io.hpp"
#include "hsilab/patterns.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hsilab;
using nlohmann::json;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("hsilab_test_" + name);
}

} // namespace

TEST_CASE("sha256") {
    CHECK(cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(cli::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("analyze") {
    const auto h6c = format_edge_list(complement(build_family(FamilySpec::make(FamilyKind::H, 6)).graph));
    const auto r = invoke({"analyze", h6c, "--pattern"});
    REQUIRE(r.code == cli::kOk);
    const auto j = json::parse(r.out);
    CHECK(j["pattern"] == "TF");
    CHECK(j["pd"] == 2);
    CHECK(j["cochordal"] == true);
    CHECK(j["predictable"] == true);
    REQUIRE(j["shifts"].size() == 3);
    CHECK(j["shifts"][1]["lq"] == true);
    CHECK(j["shifts"][2]["lq"] == false);
    CHECK(j["shifts"][2]["generators"] == 2);

    CHECK(invoke({"analyze", "5; 1-2,2-3,3-4,4-5,1-5", "--pattern"}).code == cli::kPrecondition);
    CHECK(invoke({"analyze", "5; 1-2,2-3,3-4,4-5,1-5"}).code == cli::kOk);
    CHECK(invoke({"analyze", "E??"}).code == cli::kUsage);
    CHECK(invoke({"analyze", "3; 1-7"}).code == cli::kUsage);

    const auto edge = invoke({"analyze", "2; 1-2", "--pattern"});
    REQUIRE(edge.code == cli::kOk);
    const auto e = json::parse(edge.out);
    CHECK(e["pattern"] == "");
    CHECK(e["pd"] == 0);
    // graph6 and edge-list inputs describe the same graph.
    const auto g6 = encode_graph6(parse_graph(h6c));
    CHECK(json::parse(invoke({"analyze", g6, "--pattern"}).out) == j);
}

TEST_CASE("family") {
    const auto lh = invoke({"family", "LH", "7", "1", "--check"});
    REQUIRE(lh.code == cli::kOk);
    const auto j = json::parse(lh.out);
    CHECK(j["pattern"] == "TFFT");
    CHECK(j["expected_pattern"] == "TFFT");
    CHECK(j["conformance"] == true);

    const auto bad = invoke({"family", "LH", "6", "0", "--check"});
    CHECK(bad.code == cli::kUsage);
    CHECK(bad.err.find("not covered") != std::string::npos);

    const auto ch = invoke({"family", "CH", "7", "2", "--check"});
    REQUIRE(ch.code == cli::kOk);
    CHECK(json::parse(ch.out)["pattern"] == "TTFTT");
    CHECK(invoke({"family", "XX", "7", "1"}).code == cli::kUsage);
    CHECK(invoke({"family", "H", "5"}).code == cli::kUsage);
}

TEST_CASE("census") {
    const auto r = invoke({"census", "8"});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out == "pattern,count\npredictable,1726\n");
    CHECK(r.err.find("census: 1726 graphs") != std::string::npos);
    CHECK(invoke({"census", "abc"}).code == cli::kUsage);
    CHECK(invoke({"census", "0"}).code == cli::kUsage);
    CHECK(invoke({"census", std::to_string(scale_guard() + 1)}).code == cli::kUsage);

    const auto raw = invoke({"census", "7", "--raw", "--jobs", "2"});
    REQUIRE(raw.code == cli::kOk);
    long total = 0;
    std::istringstream lines(raw.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "pattern,count");
    while (std::getline(lines, line))
        total += std::stol(line.substr(line.find(',') + 1));
    CHECK(total == static_cast<long>(census_population(7).size()));
}

TEST_CASE("census from a graph6 stream") {
    const auto path = temp_path("pop7.g6");
    {
        std::ofstream out(path);
        for (const auto& g : census_population(7))
            out << encode_graph6(g) << "\n";
        out << encode_graph6(SimpleGraph(3, {{1, 2}})) << "\n";  // one edge, filtered
    }
    const auto streamed = invoke({"census", "--graph6-in", path.string(), "--raw"});
    const auto built = invoke({"census", "7", "--raw"});
    REQUIRE(streamed.code == cli::kOk);
    CHECK(streamed.out == built.out);
    std::filesystem::remove(path);
    CHECK(invoke({"census", "--graph6-in", "/nonexistent/file.g6"}).code == cli::kUsage);
}

TEST_CASE("manifests are reproducible") {
    const auto a = temp_path("m1.json");
    const auto b = temp_path("m2.json");
    const auto report = temp_path("report.json");
    REQUIRE(invoke({"--manifest", a.string(), "census", "7", "--report", report.string()}).code == cli::kOk);
    REQUIRE(invoke({"--manifest", b.string(), "census", "7", "--report", report.string(), "--jobs", "3"}).code ==
            cli::kOk);
    const auto ja = json::parse(slurp(a));
    const auto jb = json::parse(slurp(b));
    CHECK(ja["command"] == "census");
    CHECK(ja["version"] == std::string(cli::kVersion));
    CHECK(ja["outputs"] == jb["outputs"]);
    CHECK(ja["inputs"] == jb["inputs"]);
    CHECK(ja["exit_code"] == 0);
    const auto rep = json::parse(slurp(report));
    CHECK(rep["n"] == 7);
    for (const auto& p : {a, b, report})
        std::filesystem::remove(p);

    const auto out = temp_path("out.csv");
    const auto written = invoke({"--out", out.string(), "census", "6"});
    REQUIRE(written.code == cli::kOk);
    CHECK(slurp(out) == invoke({"census", "6"}).out);
    std::filesystem::remove(out);
}

TEST_CASE("scan, conjecture and oracle") {
    const auto scan = invoke({"scan", "--pattern", "TFTF", "--vertices", "8"});
    CHECK(scan.code == cli::kOk);
    CHECK(json::parse(scan.out)["count"] == 0);
    CHECK(invoke({"scan", "--pattern", "TF", "--vertices", "6"}).code == cli::kCounterexample);
    CHECK(invoke({"scan", "--pattern", "TF", "--vertices", "6", "--expect-count", "2"}).code == cli::kConformance);

    const auto conj = invoke({"conjecture", "--max-vertices", "7"});
    CHECK(conj.code == cli::kOk);
    CHECK(json::parse(conj.out)["discrepancies"].empty());

    const auto orc = invoke({"oracle", "--max-vertices", "5"});
    CHECK(orc.code == cli::kOk);
    CHECK(json::parse(orc.out)["mismatches"].empty());
}

TEST_CASE("usage") {
    CHECK(invoke({}).code == cli::kUsage);
    CHECK(invoke({"frobnicate"}).code == cli::kUsage);
    const auto v = invoke({"--version"});
    CHECK(v.code == cli::kOk);
    CHECK(v.out.find(std::string(cli::kVersion)) != std::string::npos);
}
