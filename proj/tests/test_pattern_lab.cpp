#include "oracles.hpp"

#include "hsilab/errors.hpp"
#include "hsilab/families.hpp"
#include "hsilab/patterns.hpp"
#include "hsilab/shifts.hpp"

#include <doctest.h>

#include <map>

using namespace hsilab;

namespace {

SimpleGraph family_complement(FamilyKind kind, int n, int r = 0) {
    return complement(build_family(FamilySpec::make(kind, n, r)).graph);
}

bool has_isolated(const SimpleGraph& g) {
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (neighbors(g, v) == 0)
            return true;
    return false;
}

} // namespace

TEST_CASE("lq_pattern examples") {
    CHECK(lq_pattern(family_complement(FamilyKind::H, 6)) == "TF");
    CHECK(lq_pattern(family_complement(FamilyKind::LH, 6, 1)) == "TFT");
    CHECK(lq_pattern(family_complement(FamilyKind::ACH, 6, 1)) == "TFF");
    CHECK_THROWS(lq_pattern(SimpleGraph(2, {{1, 2}})));
    CHECK_THROWS(lq_pattern(cycle_graph(5)));
}

TEST_CASE("is_predictable") {
    for (const char* p : {"TTTTT", "TFFFF", "TTFTT", "TF", "T", "TFFT", "TTTF", "TFT", ""})
        if (*p != '\0')
            CHECK(is_predictable(p));
    // The seventeen patterns listed individually in the two tables.
    for (const char* p : {"TTFFTT", "TTFFT", "TTFFTTT", "TFTFF", "TTFFFTT", "TTFFFT", "TTFFTTTT", "TTFFFTTT",
                          "TTTFFTT", "TTTFFT", "TFTFFF", "TTTFFTTT", "TFTFFTT", "TFTFFT", "TFTFFTTT", "TTFTFF",
                          "TFTTFF"})
        CHECK_FALSE(is_predictable(p));
    CHECK_FALSE(is_predictable("FT"));
    CHECK_FALSE(is_predictable("TFTF"));
    CHECK_FALSE(is_predictable("TXT"));

    // Against the three displayed shapes, for all words of length at most 9.
    for (int len = 1; len <= 9; ++len)
        for (int bits = 0; bits < (1 << len); ++bits) {
            std::string w;
            for (int i = 0; i < len; ++i)
                w += (bits >> i) & 1 ? 'T' : 'F';
            bool shape = false;
            for (int s = 0; s <= len - 1 && !shape; ++s) {
                const int t = len - 1 - s;
                shape = w == "T" + std::string(s, 'T') + std::string(t, 'F') ||
                        w == "T" + std::string(s, 'F') + std::string(t, 'T');
                if (t >= 1)
                    shape = shape || w == "T" + std::string(s, 'T') + "F" + std::string(t - 1, 'T');
            }
            CHECK(is_predictable(w) == shape);
        }
}

TEST_CASE("enumerate_chordal") {
    CHECK(enumerate_chordal(1).size() == 1);
    CHECK(enumerate_chordal(3).size() == 4);
    CHECK(enumerate_chordal(4).size() == 10);
    const auto six = enumerate_chordal(6);
    const auto h6 = canonical_certificate(build_family(FamilySpec::make(FamilyKind::H, 6)).graph);
    CHECK(std::any_of(six.begin(), six.end(), [&](const SimpleGraph& g) { return canonical_certificate(g) == h6; }));
    CHECK_THROWS(enumerate_chordal(0));

    // Filter all isomorphism classes by the induced-cycle criterion.
    for (int n = 1; n <= 6; ++n) {
        std::set<std::uint64_t> expected;
        for (std::uint64_t code : oracle::all_classes(n))
            if (oracle::is_chordal(oracle::graph_from_code(n, code)))
                expected.insert(code);
        std::set<std::uint64_t> got;
        for (const auto& g : enumerate_chordal(n)) {
            CHECK(g.vertex_count() == n);
            CHECK(oracle::is_chordal(g));
            got.insert(oracle::min_code(g));
        }
        CHECK(got == expected);
        CHECK(enumerate_chordal(n).size() == expected.size());
    }
    // At seven vertices, count classes of chordal labeled graphs by certificate.
    std::set<CanonicalCertificate> seven;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << oracle::pair_count(7)); ++code) {
        const auto g = oracle::graph_from_code(7, code);
        if (oracle::is_chordal(g))
            seven.insert(canonical_certificate(g));
    }
    std::set<CanonicalCertificate> enumerated;
    for (const auto& g : enumerate_chordal(7))
        enumerated.insert(canonical_certificate(g));
    CHECK(enumerated == seven);
    CHECK(enumerate_chordal(7).size() == seven.size());
}

TEST_CASE("census population") {
    for (int n = 2; n <= 7; ++n) {
        const auto pop = census_population(n);
        std::set<CanonicalCertificate> seen;
        for (const auto& g : pop) {
            CHECK(is_cochordal(g));
            CHECK(g.edge_count() >= 2);
            CHECK_FALSE(has_isolated(g));
            CHECK(seen.insert(canonical_certificate(g)).second);
        }
        long expected = 0;
        for (const auto& h : enumerate_chordal(n)) {
            const auto g = complement(h);
            if (g.edge_count() >= 2 && !has_isolated(g))
                ++expected;
        }
        CHECK(static_cast<long>(pop.size()) == expected);
    }
}

TEST_CASE("census up to eight vertices is predictable") {
    for (int n = 4; n <= 8; ++n) {
        const auto report = census(n);
        long sum = 0;
        for (const auto& [p, c] : report.patterns) {
            CHECK(c >= 1);
            REQUIRE_FALSE(p.empty());
            CHECK(p.front() == 'T');
            sum += c;
        }
        CHECK(sum == report.total);
        CHECK(static_cast<long>(census_population(n).size()) == report.total);
        if (report.total > 0) {
            CHECK(report.table.size() == 1);
            CHECK(report.table.count("predictable") == 1);
        }
    }
}

TEST_CASE("census rows and job independence") {
    const auto one = census(7);
    CensusOptions many;
    many.jobs = 3;
    const auto three = census(7, many);
    CHECK(one.patterns == three.patterns);
    CHECK(one.table == three.table);
    const auto rows = sorted_rows({{"b", 2}, {"a", 2}, {"c", 5}});
    CHECK(rows == std::vector<std::pair<std::string, long>>{{"c", 5}, {"a", 2}, {"b", 2}});
}

TEST_CASE("scan agrees with census") {
    for (int n = 6; n <= 8; ++n) {
        CHECK(scan_pattern(n, "TFTF").empty());
        const auto report = census(n);
        for (const auto& [p, c] : report.patterns) {
            const auto found = scan_pattern(n, p);
            CHECK(static_cast<long>(found.size()) == c);
            for (const auto& g : found)
                CHECK(lq_pattern(g) == p);
        }
    }
}

TEST_CASE("one-vertex extensions") {
    const auto all = [](const SimpleGraph&) { return true; };
    const auto k1 = one_vertex_extensions(SimpleGraph(1), all);
    REQUIRE(k1.size() == 2);
    std::set<int> edges;
    for (const auto& g : k1) {
        CHECK(g.vertex_count() == 2);
        edges.insert(g.edge_count());
    }
    CHECK(edges == std::set<int>{0, 1});

    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const auto g = oracle::random_graph(n, 0.5, rng);
        const auto ext = one_vertex_extensions(g, all);
        CHECK(ext.size() <= (std::size_t{1} << n));
        // Classes of every extension, by brute force.
        std::set<std::uint64_t> expected;
        for (VertexSet nb = 0; nb <= full_set(n); ++nb) {
            SimpleGraph big(n + 1);
            for (auto [u, v] : g.edges())
                big.add_edge(u, v);
            for (int v : set_members(nb))
                big.add_edge(v, n + 1);
            expected.insert(oracle::min_code(big));
        }
        std::set<std::uint64_t> got;
        for (const auto& e : ext) {
            CHECK(contains_induced(e, g));
            got.insert(oracle::min_code(e));
        }
        CHECK(got == expected);
        CHECK(ext.size() == expected.size());
    }
    const auto co = one_vertex_extensions(cycle_graph(4), [](const SimpleGraph& g) { return is_cochordal(g); });
    for (const auto& g : co)
        CHECK(is_cochordal(g));
}

TEST_CASE("conjecture check") {
    CHECK(is_h_free(family_complement(FamilyKind::LH, 6, 1)) == false);
    for (int n = 6; n <= 8; ++n) {
        const auto g = family_complement(FamilyKind::H, n);
        CHECK_FALSE(is_h_free(g));
        CHECK(lq_pattern(g).find('F') != std::string::npos);
    }
    const auto report = conjecture_check(8);
    CHECK(report.max_n == 8);
    CHECK(report.checked > 1000);
    CHECK(report.discrepancies.empty());
    // H-freeness against a direct induced-subgraph search over the census at seven vertices.
    for (const auto& g : census_population(7)) {
        bool contains = false;
        for (int m = 6; m <= 7; ++m)
            contains = contains || oracle::contains_induced(g, family_complement(FamilyKind::H, m));
        CHECK(is_h_free(g) == !contains);
    }
}

TEST_CASE("scale guard") {
    CHECK(scale_guard() >= kDefaultScaleGuard);
    CHECK_THROWS_AS(check_scale(scale_guard() + 1, "test"), ScaleGuardError);
    CHECK_NOTHROW(check_scale(scale_guard(), "test"));
}
