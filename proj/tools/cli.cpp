#include "cli.hpp"

#include "hsilab/betti.hpp"
#include "hsilab/errors.hpp"
#include "hsilab/families.hpp"
#include "hsilab/graph_io.hpp"
#include "hsilab/linear_quotients.hpp"
#include "hsilab/parallel.hpp"
#include "hsilab/patterns.hpp"
#include "hsilab/shifts.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace hsilab::cli {
namespace {

// Family reports enumerate every subset of the vertex set.
constexpr int kFamilyVertexLimit = 16;

struct Outcome {
    int code = kOk;
    std::string payload;  // primary output
};

// Thrown for command-level usage problems that CLI11 cannot see.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string read_file_or_stdin(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw UsageError("cannot open " + path);
        buffer << in.rdbuf();
    }
    return buffer.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write " + path);
    out << bytes;
}

nlohmann::json verdict_letter(const LqVerdict& v) {
    if (!v.decided())
        return "undecided";
    return v.has_lq();
}

// ---- analyze ----

struct AnalyzeArgs {
    std::string graph;
    bool pattern = false;
    bool generators = false;
};

Outcome cmd_analyze(const AnalyzeArgs& a, RunManifest& manifest) {
    manifest.input_hashes.emplace_back("graph", sha256_hex(a.graph));
    const SimpleGraph g = parse_graph(a.graph);
    nlohmann::json r;
    r["graph6"] = encode_graph6(g);
    r["vertices"] = g.vertex_count();
    r["edges"] = g.edge_count();
    r["chordal"] = is_chordal(g);
    const bool cochordal = is_cochordal(g);
    r["cochordal"] = cochordal;
    if (!cochordal) {
        if (a.pattern)
            throw PreconditionError("graph is not co-chordal; the LQ pattern is defined for co-chordal graphs only");
        return {kOk, dump(r)};
    }
    const SimpleGraph h = complement(g);
    const auto peo = *find_peo(h);
    r["peo"] = peo.order;
    const auto shifts = shift_ideals(h, peo);
    if (shifts.empty())
        r["pd"] = "undefined";
    else
        r["pd"] = static_cast<int>(shifts.size()) - 1;
    LqOptions options = pattern_lq_options();
    options.order = VariableOrder::from_vertex_ordering(peo);
    const VariableOrder order = *options.order;
    auto per_k = nlohmann::json::array();
    std::string word;
    for (std::size_t k = 0; k < shifts.size(); ++k) {
        const auto verdict = has_linear_quotients(shifts[k], options);
        nlohmann::json row;
        row["k"] = k;
        row["generators"] = shifts[k].size();
        if (a.generators)
            row["gens"] = supports_json(shifts[k].generators());
        row["lex_lq"] = lex_quotients_check(shifts[k], order);
        row["lq"] = verdict_letter(verdict);
        row["method"] = to_string(verdict.method);
        per_k.push_back(std::move(row));
        if (k >= 1) {
            if (!verdict.decided())
                throw PreconditionError("undecided linear quotients at k = " + std::to_string(k));
            word.push_back(verdict.has_lq() ? 'T' : 'F');
        }
    }
    r["shifts"] = std::move(per_k);
    r["pattern"] = word;
    r["predictable"] = is_predictable(word);
    return {kOk, dump(r)};
}

// ---- family ----

struct FamilyArgs {
    std::string kind;
    int n = 6;
    int r = 0;
    bool check = false;
};

Outcome cmd_family(const FamilyArgs& a) {
    FamilySpec spec;
    std::string expected;
    try {
        spec = FamilySpec::make(parse_family_kind(a.kind), a.n, a.r);
        expected = expected_pattern(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (spec.vertex_count() > kFamilyVertexLimit)
        throw UsageError("family reports are limited to " + std::to_string(kFamilyVertexLimit) + " vertices");
    const auto fg = build_family(spec);
    const auto shifts = shift_ideals(fg.graph, fg.peo);
    nlohmann::json r;
    r["kind"] = to_string(spec.kind);
    r["n"] = spec.n;
    r["r"] = spec.r;
    r["vertices"] = spec.vertex_count();
    r["edges"] = format_edge_list(fg.graph);
    r["peo"] = fg.peo.order;
    const int pd = static_cast<int>(shifts.size()) - 1;
    r["pd"] = pd;

    LqOptions options = pattern_lq_options();
    options.order = VariableOrder::from_vertex_ordering(fg.peo);
    auto mismatches = nlohmann::json::array();
    auto per_k = nlohmann::json::array();
    std::string word;
    for (int k = 0; k <= pd; ++k) {
        const auto& ideal = shifts[static_cast<std::size_t>(k)];
        nlohmann::json row;
        row["k"] = k;
        row["generators"] = ideal.size();
        if (k >= 2) {
            std::map<std::string, int> tags;
            for (Monomial m : ideal.generators()) {
                const auto t = classify(spec, m);
                ++tags[t ? to_string(*t) : std::string("none")];
            }
            row["tags"] = tags;
            if (a.check && !(generators_via_types(spec, k) == ideal))
                mismatches.push_back("type description differs from the PEO formula at k = " + std::to_string(k));
        }
        if (k >= 1) {
            const auto verdict = has_linear_quotients(ideal, options);
            if (!verdict.decided())
                throw PreconditionError("undecided linear quotients at k = " + std::to_string(k));
            row["lq"] = verdict.has_lq();
            word.push_back(verdict.has_lq() ? 'T' : 'F');
        }
        per_k.push_back(std::move(row));
    }
    r["shifts"] = std::move(per_k);
    r["pattern"] = word;
    r["expected_pattern"] = expected;
    r["conformance"] = word == expected && pd == spec.top_index();
    if (a.check) {
        if (pd != spec.top_index())
            mismatches.push_back("projective dimension " + std::to_string(pd) + " differs from n + r - 4 = " +
                                 std::to_string(spec.top_index()));
        if (word != expected)
            mismatches.push_back("pattern " + word + " differs from expected " + expected);
        r["mismatches"] = mismatches;
    }
    return {a.check && !mismatches.empty() ? kConformance : kOk, dump(r)};
}

// ---- census ----

struct CensusArgs {
    int n = 0;
    unsigned jobs = 1;
    std::string out_path;
    std::string report_path;
    std::string graph6_in;
    bool raw = false;
};

Outcome cmd_census(const CensusArgs& a, RunManifest& manifest, std::ostream& err) {
    CensusOptions options;
    options.jobs = a.jobs;
    CensusReport report;
    if (!a.graph6_in.empty()) {
        const std::string text = read_file_or_stdin(a.graph6_in);
        manifest.input_hashes.emplace_back(a.graph6_in, sha256_hex(text));
        std::istringstream in(text);
        const auto graphs = read_graph6_stream(in);
        for (const auto& g : graphs)
            check_scale(g.vertex_count(), "census input");
        report = census_of(graphs, options);
    } else {
        if (a.n < 1)
            throw UsageError("census needs a vertex count of at least 1");
        check_scale(a.n, "census");
        report = census(a.n, options);
    }
    std::string csv = "pattern,count\n";
    for (const auto& [pattern, count] : sorted_rows(a.raw ? report.patterns : report.table))
        csv += pattern + "," + std::to_string(count) + "\n";
    if (!a.report_path.empty()) {
        nlohmann::json j;
        j["n"] = report.n;
        j["filters"] = {{"exclude_isolated", report.filters.exclude_isolated}, {"min_edges", report.filters.min_edges}};
        j["total"] = report.total;
        j["skipped"] = report.skipped;
        j["patterns"] = report.patterns;
        j["table"] = report.table;
        // Timing and worker count stay out of the hashed content.
        const auto content_hash = sha256_hex(dump(j));
        j["runtime_seconds"] = report.seconds;
        j["jobs"] = a.jobs;
        write_file(a.report_path, dump(j));
        manifest.output_hashes.emplace_back(a.report_path, content_hash);
    }
    err << "census: " << report.total << " graphs, " << report.table.size() << " rows, " << std::fixed
        << std::setprecision(1) << report.seconds << " s\n";
    return {kOk, csv};
}

// ---- scan ----

struct ScanArgs {
    std::string pattern;
    int vertices = 0;
    int from = 0;
    std::optional<long> expect;
    unsigned jobs = 1;
};

Outcome cmd_scan(const ScanArgs& a) {
    if (a.pattern.find_first_not_of("TF") != std::string::npos)
        throw UsageError("pattern must be a word over T and F");
    const int from = a.from > 0 ? a.from : a.vertices;
    if (a.vertices < 1 || from > a.vertices)
        throw UsageError("scan needs 1 <= --from <= --vertices");
    check_scale(a.vertices, "scan");
    CensusOptions options;
    options.jobs = a.jobs;
    nlohmann::json r;
    r["pattern"] = a.pattern;
    r["vertices"] = {from, a.vertices};
    auto matches = nlohmann::json::array();
    for (int n = from; n <= a.vertices; ++n)
        for (const auto& g : scan_pattern(n, a.pattern, options))
            matches.push_back({{"graph6", encode_graph6(g)}, {"vertices", n}, {"edges", format_edge_list(g)}});
    const long count = static_cast<long>(matches.size());
    r["count"] = count;
    r["matches"] = std::move(matches);
    int code = kOk;
    if (a.expect) {
        r["expected_count"] = *a.expect;
        code = count == *a.expect ? kOk : kConformance;
    } else if (count > 0) {
        code = kCounterexample;
    }
    return {code, dump(r)};
}

// ---- conjecture ----

struct ConjectureArgs {
    int max_vertices = 0;
    unsigned jobs = 1;
};

Outcome cmd_conjecture(const ConjectureArgs& a) {
    if (a.max_vertices < 1)
        throw UsageError("--max-vertices must be positive");
    CensusOptions options;
    options.jobs = a.jobs;
    const auto report = conjecture_check(a.max_vertices, options);
    nlohmann::json r;
    r["max_vertices"] = report.max_n;
    r["checked"] = report.checked;
    auto rows = nlohmann::json::array();
    for (const auto& d : report.discrepancies)
        rows.push_back({{"graph6", encode_graph6(d.graph)},
                        {"pattern", d.pattern},
                        {"homological_lq", d.homological_lq},
                        {"h_free", d.h_free}});
    r["discrepancies"] = std::move(rows);
    return {report.discrepancies.empty() ? kOk : kCounterexample, dump(r)};
}

// ---- oracle ----

struct OracleArgs {
    int max_vertices = 0;
    bool strict = false;
    unsigned jobs = 1;
};

Outcome cmd_oracle(const OracleArgs& a) {
    if (a.max_vertices < 1)
        throw UsageError("--max-vertices must be positive");
    check_scale(a.max_vertices, "oracle sweep");
    BettiOptions betti;
    betti.strict = a.strict;
    betti.jobs = a.jobs;
    long graphs = 0;
    long checks = 0;
    auto mismatches = nlohmann::json::array();
    for (int n = 1; n <= a.max_vertices; ++n)
        for (const auto& h : enumerate_chordal(n)) {
            const SimpleGraph g = complement(h);
            if (g.edge_count() == 0)
                continue;
            ++graphs;
            const auto shifts = shift_ideals(h, *find_peo(h));
            const auto ideal = edge_ideal(g);
            for (std::size_t k = 0; k <= shifts.size(); ++k) {
                ++checks;
                std::vector<Monomial> formula;
                if (k < shifts.size())
                    formula = shifts[k].generators();
                const auto oracle = betti_oracle(ideal, static_cast<int>(k), betti);
                if (formula != oracle)
                    mismatches.push_back({{"graph6", encode_graph6(g)},
                                          {"k", k},
                                          {"formula", supports_json(formula)},
                                          {"oracle", supports_json(oracle)}});
            }
        }
    nlohmann::json r;
    r["max_vertices"] = a.max_vertices;
    r["strict"] = a.strict;
    r["graphs"] = graphs;
    r["checks"] = checks;
    r["mismatches"] = std::move(mismatches);
    return {r["mismatches"].empty() ? kOk : kConformance, dump(r)};
}

std::string command_name(const CLI::App& app) {
    for (const auto* sub : app.get_subcommands())
        return sub->get_name();
    return "";
}

} // namespace

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned int i = 0; i < length; ++i)
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return hex.str();
}

void to_json(nlohmann::json& j, const RunManifest& m) {
    auto hashes = [](const auto& list) {
        auto out = nlohmann::json::array();
        for (const auto& [name, digest] : list)
            out.push_back({{"name", name}, {"sha256", digest}});
        return out;
    };
    j = {{"command", m.command},   {"arguments", m.arguments},          {"version", m.version},
         {"wall_seconds", m.wall_seconds}, {"inputs", hashes(m.input_hashes)}, {"outputs", hashes(m.output_hashes)},
         {"exit_code", m.exit_code}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    CLI::App app{"Homological shift ideals of co-chordal edge ideals: linear quotients and LQ patterns", "hsilab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kVersion));
    std::string manifest_path;
    std::string out_path;
    app.add_option("--manifest", manifest_path, "Write a run manifest (JSON with SHA-256 hashes) to this file");
    app.add_option("--out", out_path, "Write the primary output to this file instead of standard output");

    AnalyzeArgs analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "Report chordality, shift ideals and the LQ pattern of a graph");
    analyze_cmd->add_option("graph", analyze.graph, "graph6 string or edge list \"n; 1-2,2-3\"")->required();
    analyze_cmd->add_flag("--pattern", analyze.pattern, "Require a co-chordal input (exit 3 otherwise)");
    analyze_cmd->add_flag("--generators", analyze.generators, "List the generators of every shift ideal");

    FamilyArgs family;
    auto* family_cmd = app.add_subcommand("family", "Build H, LH, ACH or CH and compare with the predicted pattern");
    family_cmd->add_option("kind,--kind", family.kind, "H, LH, ACH or CH")->required();
    family_cmd->add_option("n,--n", family.n, "Size of the H_n core (>= 6)")->required();
    family_cmd->add_option("r,--r", family.r, "Number of added vertices (>= 0)");
    family_cmd->add_flag("--check", family.check, "Exit 4 unless types, pd and pattern all match the predictions");

    CensusArgs census_args;
    census_args.jobs = default_jobs();
    auto* census_cmd = app.add_subcommand("census", "Count LQ patterns over co-chordal graphs on n vertices (CSV)");
    census_cmd->add_option("n,--n,--vertices", census_args.n, "Number of vertices");
    census_cmd->add_option("--jobs", census_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
    census_cmd->add_option("--report", census_args.report_path, "Also write a JSON report to this file");
    census_cmd->add_option("--graph6-in", census_args.graph6_in, "Read graphs from a graph6 file ('-' for stdin)");
    census_cmd->add_flag("--raw", census_args.raw, "List predictable patterns individually");

    ScanArgs scan;
    scan.jobs = default_jobs();
    long expect = -1;
    auto* scan_cmd = app.add_subcommand("scan", "Find co-chordal graphs with a given LQ pattern");
    scan_cmd->add_option("--pattern", scan.pattern, "Target word over T and F")->required();
    scan_cmd->add_option("--vertices", scan.vertices, "Largest vertex count")->required();
    scan_cmd->add_option("--from", scan.from, "Smallest vertex count (default: --vertices)");
    scan_cmd->add_option("--expect-count", expect, "Exit 4 unless exactly this many graphs match");
    scan_cmd->add_option("--jobs", scan.jobs, "Worker threads")->check(CLI::PositiveNumber);

    ConjectureArgs conjecture;
    conjecture.jobs = default_jobs();
    auto* conjecture_cmd = app.add_subcommand("conjecture", "Compare homological linear quotients with H-freeness");
    conjecture_cmd->add_option("--max-vertices", conjecture.max_vertices, "Check graphs up to this size")->required();
    conjecture_cmd->add_option("--jobs", conjecture.jobs, "Worker threads")->check(CLI::PositiveNumber);

    OracleArgs oracle;
    oracle.jobs = default_jobs();
    auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check the PEO formula against GF(2) Betti multidegrees");
    oracle_cmd->add_option("--max-vertices", oracle.max_vertices, "Check graphs up to this size")->required();
    oracle_cmd->add_flag("--strict", oracle.strict, "Also scan one degree higher for non-linear shifts");
    oracle_cmd->add_option("--jobs", oracle.jobs, "Worker threads")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    if (expect >= 0)
        scan.expect = expect;

    RunManifest manifest;
    manifest.command = command_name(app);
    manifest.arguments = args;
    Outcome outcome;
    try {
        if (analyze_cmd->parsed())
            outcome = cmd_analyze(analyze, manifest);
        else if (family_cmd->parsed())
            outcome = cmd_family(family);
        else if (census_cmd->parsed())
            outcome = cmd_census(census_args, manifest, err);
        else if (scan_cmd->parsed())
            outcome = cmd_scan(scan);
        else if (conjecture_cmd->parsed())
            outcome = cmd_conjecture(conjecture);
        else if (oracle_cmd->parsed())
            outcome = cmd_oracle(oracle);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ScaleGuardError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const UndecidedError& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (out_path.empty())
            out << outcome.payload;
        else
            write_file(out_path, outcome.payload);
        manifest.output_hashes.emplace_back(out_path.empty() ? "stdout" : out_path, sha256_hex(outcome.payload));
        manifest.exit_code = outcome.code;
        manifest.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!manifest_path.empty())
            write_file(manifest_path, nlohmann::json(manifest).dump(2) + "\n");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return outcome.code;
}

} // namespace hsilab::cli
