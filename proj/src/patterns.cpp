#include "hsilab/patterns.hpp"

#include "hsilab/errors.hpp"
#include "hsilab/families.hpp"
#include "hsilab/graph_io.hpp"
#include "hsilab/parallel.hpp"
#include "hsilab/shifts.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace hsilab {
namespace {

// Calls f on every clique of g inside `allowed` (including the empty clique).
template <typename F>
void for_each_clique(const SimpleGraph& g, VertexSet current, VertexSet candidates, F& f) {
    f(current);
    while (candidates != 0) {
        const int v = std::countr_zero(candidates) + 1;
        candidates &= candidates - 1;
        for_each_clique(g, current | vertex_bit(v), candidates & g.adjacency(v), f);
    }
}

// Adds isomorphism classes to `out`, keyed by certificate.
void add_class(std::map<CanonicalCertificate, SimpleGraph>& out, const SimpleGraph& g) {
    auto form = canonical_form(g);
    if (out.find(form.certificate) != out.end())
        return;
    out.emplace(std::move(form.certificate), relabel(g, form.perm));
}

bool passes_filters(const SimpleGraph& g, const CensusFilters& filters) {
    if (filters.exclude_isolated && has_isolated_vertex(g))
        return false;
    return g.edge_count() >= filters.min_edges;
}

std::string describe(const SimpleGraph& g) { return encode_graph6(g); }

} // namespace

int scale_guard() {
    if (const char* env = std::getenv("HSILAB_SCALE_GUARD"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != nullptr && *end == '\0' && v > 0 && v <= kMaxVertices)
            return static_cast<int>(v);
        throw std::invalid_argument("HSILAB_SCALE_GUARD must be an integer in [1, 64]");
    }
    return kDefaultScaleGuard;
}

void check_scale(int n, std::string_view what) {
    const int guard = scale_guard();
    if (n > guard)
        throw ScaleGuardError(std::string(what) + " on " + std::to_string(n) + " vertices exceeds the scale guard of " +
                              std::to_string(guard) + " (set HSILAB_SCALE_GUARD to raise it)");
}

LqOptions pattern_lq_options() {
    LqOptions o;
    o.max_generators = 1U << 12;
    return o;
}

PatternString lq_pattern_from_complement(const SimpleGraph& h, const VertexOrdering& peo, const LqOptions& options) {
    const auto shifts = shift_ideals(h, peo);
    LqOptions local = options;
    local.order = VariableOrder::from_vertex_ordering(peo);
    PatternString word;
    for (std::size_t k = 1; k < shifts.size(); ++k) {
        const auto verdict = has_linear_quotients(shifts[k], local);
        if (!verdict.decided())
            throw UndecidedError("undecided linear quotients for HS_" + std::to_string(k) + " of the complement of " +
                                 describe(h) + ": " + verdict.reason);
        word.push_back(verdict.has_lq() ? 'T' : 'F');
    }
    return word;
}

PatternString lq_pattern(const SimpleGraph& g, const LqOptions& options) {
    if (g.edge_count() < 2)
        throw std::invalid_argument("LQ pattern needs at least two edges");
    const SimpleGraph h = complement(g);
    const auto peo = find_peo(h);
    if (!peo)
        throw std::invalid_argument("graph is not co-chordal");
    return lq_pattern_from_complement(h, *peo, options);
}

bool is_predictable(std::string_view p) {
    std::size_t i = 0;
    const auto run = [&](char c) {
        const std::size_t start = i;
        while (i < p.size() && p[i] == c)
            ++i;
        return i - start;
    };
    const std::size_t a = run('T');
    const std::size_t b = run('F');
    const std::size_t c = run('T');
    if (i != p.size() || a == 0)
        return false;
    return b == 0 || c == 0 || a == 1 || b == 1;
}

std::vector<SimpleGraph> enumerate_chordal(int n) {
    if (n < 1)
        throw std::invalid_argument("enumeration needs n >= 1");
    check_scale(n, "chordal enumeration");
    std::map<CanonicalCertificate, SimpleGraph> level;
    add_class(level, SimpleGraph(1));
    for (int m = 2; m <= n; ++m) {
        std::map<CanonicalCertificate, SimpleGraph> next;
        for (const auto& [cert, g] : level) {
            auto grow = [&](VertexSet clique) {
                SimpleGraph bigger(m);
                for (auto [u, v] : g.edges())
                    bigger.add_edge(u, v);
                for (int v : set_members(clique))
                    bigger.add_edge(v, m);
                add_class(next, bigger);
            };
            for_each_clique(g, 0, g.vertices(), grow);
        }
        level = std::move(next);
    }
    std::vector<SimpleGraph> out;
    out.reserve(level.size());
    for (auto& [cert, g] : level)
        out.push_back(std::move(g));
    return out;
}

std::vector<SimpleGraph> census_population(int n, const CensusFilters& filters) {
    std::vector<SimpleGraph> out;
    for (const auto& h : enumerate_chordal(n)) {
        if (filters.exclude_isolated && has_universal_vertex(h))
            continue;
        SimpleGraph g = complement(h);
        if (passes_filters(g, filters))
            out.push_back(std::move(g));
    }
    return out;
}

CensusReport census_of(const std::vector<SimpleGraph>& graphs, const CensusOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    CensusReport report;
    report.filters = options.filters;
    std::vector<std::optional<PatternString>> words(graphs.size());
    parallel_for(graphs.size(), options.jobs, [&](std::size_t i) {
        const SimpleGraph& g = graphs[i];
        if (!passes_filters(g, options.filters))
            return;
        const SimpleGraph h = complement(g);
        const auto peo = find_peo(h);
        if (!peo)
            return;
        words[i] = lq_pattern_from_complement(h, *peo, options.lq);
    });
    std::set<int> sizes;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (!words[i]) {
            ++report.skipped;
            continue;
        }
        const auto& w = *words[i];
        if (w.empty() || w.front() != 'T')
            throw std::logic_error("pattern '" + w + "' of " + describe(graphs[i]) + " does not start with T");
        sizes.insert(graphs[i].vertex_count());
        ++report.patterns[w];
        ++report.table[is_predictable(w) ? std::string("predictable") : w];
        ++report.total;
    }
    report.n = sizes.size() == 1 ? *sizes.begin() : 0;
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

CensusReport census(int n, const CensusOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    auto report = census_of(census_population(n, options.filters), options);
    report.n = n;
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<std::pair<std::string, long>> sorted_rows(const std::map<std::string, long>& table) {
    std::vector<std::pair<std::string, long>> rows(table.begin(), table.end());
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    return rows;
}

std::vector<SimpleGraph> scan_pattern(int n, std::string_view target, const CensusOptions& options) {
    const auto population = census_population(n, options.filters);
    std::vector<char> hit(population.size(), 0);
    parallel_for(population.size(), options.jobs, [&](std::size_t i) {
        const SimpleGraph h = complement(population[i]);
        hit[i] = lq_pattern_from_complement(h, *find_peo(h), options.lq) == target ? 1 : 0;
    });
    std::vector<SimpleGraph> out;
    for (std::size_t i = 0; i < population.size(); ++i)
        if (hit[i] != 0)
            out.push_back(population[i]);
    return out;
}

std::vector<SimpleGraph> one_vertex_extensions(const SimpleGraph& g,
                                               const std::function<bool(const SimpleGraph&)>& keep) {
    const int n = g.vertex_count();
    if (n + 1 > kMaxVertices)
        throw std::invalid_argument("extension exceeds the vertex capacity");
    std::map<CanonicalCertificate, SimpleGraph> classes;
    const auto edges = g.edges();
    for (VertexSet nbhd = 0;; ++nbhd) {
        SimpleGraph bigger(n + 1, edges);
        for (int v : set_members(nbhd))
            bigger.add_edge(v, n + 1);
        if (keep(bigger))
            add_class(classes, bigger);
        if (nbhd == full_set(n))
            break;
    }
    std::vector<SimpleGraph> out;
    out.reserve(classes.size());
    for (auto& [cert, h] : classes)
        out.push_back(std::move(h));
    return out;
}

bool is_h_free(const SimpleGraph& g) {
    for (int m = 6; m <= g.vertex_count(); ++m)
        if (contains_induced(g, complement(h_graph(m))))
            return false;
    return true;
}

ConjectureReport conjecture_check(int max_n, const CensusOptions& options) {
    check_scale(max_n, "conjecture check");
    ConjectureReport report;
    report.max_n = max_n;
    for (int n = 2; n <= max_n; ++n) {
        const auto population = census_population(n, options.filters);
        std::vector<ConjectureDiscrepancy> rows(population.size());
        std::vector<char> bad(population.size(), 0);
        parallel_for(population.size(), options.jobs, [&](std::size_t i) {
            auto& row = rows[i];
            row.graph = population[i];
            const SimpleGraph h = complement(row.graph);
            row.pattern = lq_pattern_from_complement(h, *find_peo(h), options.lq);
            row.homological_lq = row.pattern.find('F') == std::string::npos;
            row.h_free = is_h_free(row.graph);
            bad[i] = row.homological_lq != row.h_free ? 1 : 0;
        });
        report.checked += static_cast<long>(population.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (bad[i] != 0)
                report.discrepancies.push_back(std::move(rows[i]));
    }
    return report;
}

} // namespace hsilab
