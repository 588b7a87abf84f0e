#pragma once

#include "hsilab/graph.hpp"
#include "hsilab/linear_quotients.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hsilab {

/// Word over {T, F}; letter k-1 records whether HS_k has linear quotients, k = 1..pd.
using PatternString = std::string;

/// Vertex bound for enumeration-based commands; HSILAB_SCALE_GUARD overrides the default.
inline constexpr int kDefaultScaleGuard = 9;
[[nodiscard]] int scale_guard();
/// Throws ScaleGuardError when n exceeds the guard.
void check_scale(int n, std::string_view what);

/// LQ options used for pattern computations: large generator bound, no node budget.
[[nodiscard]] LqOptions pattern_lq_options();

/// LQ pattern of the co-chordal graph h^c, given chordal h and a PEO of it.
/// Throws UndecidedError if any verdict is undecided.
[[nodiscard]] PatternString lq_pattern_from_complement(const SimpleGraph& h, const VertexOrdering& peo,
                                                       const LqOptions& options = pattern_lq_options());

/// Throws std::invalid_argument for non-co-chordal graphs or graphs with fewer than two edges.
[[nodiscard]] PatternString lq_pattern(const SimpleGraph& g, const LqOptions& options = pattern_lq_options());

/// T^a F^b T^c with a >= 1 and (b = 0 or c = 0 or a = 1 or b = 1).
[[nodiscard]] bool is_predictable(std::string_view p);

/// Chordal graphs on exactly n vertices up to isomorphism, as canonical representatives sorted by
/// certificate. Built by adding a simplicial vertex (adjacent to any clique) level by level.
[[nodiscard]] std::vector<SimpleGraph> enumerate_chordal(int n);

struct CensusFilters {
    bool exclude_isolated = true;
    int min_edges = 2;

    friend bool operator==(const CensusFilters&, const CensusFilters&) = default;
};

/// The co-chordal graphs on n vertices passing the filters, one per isomorphism class.
[[nodiscard]] std::vector<SimpleGraph> census_population(int n, const CensusFilters& filters = {});

struct CensusOptions {
    CensusFilters filters;
    unsigned jobs = 1;
    LqOptions lq = pattern_lq_options();
};

struct CensusReport {
    int n = 0;  // 0 when graphs came from an external stream of mixed sizes
    CensusFilters filters;
    /// Every observed pattern with its count.
    std::map<PatternString, long> patterns;
    /// Non-predictable patterns individually plus the aggregated "predictable" row.
    std::map<std::string, long> table;
    long total = 0;
    long skipped = 0;  // stream inputs rejected by the filters
    double seconds = 0;
};

/// Census over the given co-chordal graphs (filters are re-applied; failures are counted as skipped).
[[nodiscard]] CensusReport census_of(const std::vector<SimpleGraph>& graphs, const CensusOptions& options = {});
[[nodiscard]] CensusReport census(int n, const CensusOptions& options = {});

/// Table rows sorted by count descending, then by pattern.
[[nodiscard]] std::vector<std::pair<std::string, long>> sorted_rows(const std::map<std::string, long>& table);

/// Graphs of the census population on n vertices with the given pattern, in certificate order.
[[nodiscard]] std::vector<SimpleGraph> scan_pattern(int n, std::string_view target, const CensusOptions& options = {});

/// All graphs g + v for every neighbourhood of the new vertex v, kept when `keep` holds,
/// deduplicated up to isomorphism and sorted by certificate.
[[nodiscard]] std::vector<SimpleGraph> one_vertex_extensions(const SimpleGraph& g,
                                                             const std::function<bool(const SimpleGraph&)>& keep);

/// No induced subgraph isomorphic to H_m^c for any 6 <= m <= |V(g)|.
[[nodiscard]] bool is_h_free(const SimpleGraph& g);

struct ConjectureDiscrepancy {
    SimpleGraph graph;
    PatternString pattern;
    bool homological_lq = false;
    bool h_free = false;
};

struct ConjectureReport {
    int max_n = 0;
    long checked = 0;
    std::vector<ConjectureDiscrepancy> discrepancies;
};

/// Compares "every letter is T" with H-freeness over the census populations for 2..max_n vertices.
[[nodiscard]] ConjectureReport conjecture_check(int max_n, const CensusOptions& options = {});

} // namespace hsilab
