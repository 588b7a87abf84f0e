#pragma once

#include "hsilab/graph.hpp"
#include "hsilab/ideal.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hsilab {

enum class FamilyKind { H, LH, ACH, CH };

[[nodiscard]] std::string to_string(FamilyKind kind);
/// Accepts "H", "LH", "ACH", "CH" (case-insensitive).
[[nodiscard]] FamilyKind parse_family_kind(std::string_view text);

struct FamilySpec {
    FamilyKind kind = FamilyKind::H;
    int n = 6;
    int r = 0;

    /// Throws std::invalid_argument for n < 6, r < 0, or a total above 64 vertices. Forces r = 0 for H.
    static FamilySpec make(FamilyKind kind, int n, int r = 0);

    [[nodiscard]] int vertex_count() const noexcept { return n + r; }
    /// Largest k with HS_k nonzero.
    [[nodiscard]] int top_index() const noexcept { return n + r - 4; }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

struct FamilyGraph {
    SimpleGraph graph;
    VertexOrdering peo;
};

/// The chordal graph (not its complement) with the natural ordering as its PEO.
[[nodiscard]] FamilyGraph build_family(const FamilySpec& spec);

/// The graph H_n on n vertices with every label shifted up by `offset`, inside `total` vertices.
[[nodiscard]] SimpleGraph h_graph(int n, int offset = 0, int total = -1);

enum class GeneratorType { I, II, III, IV, V, VI, T1, T2, T3A, T3B, T3C, T4, T5 };

[[nodiscard]] std::string to_string(GeneratorType t);

/// Type of h among I..VI for H_n / LH_{n,r}; nullopt when none applies.
[[nodiscard]] std::optional<GeneratorType> classify_type_LH(Monomial h, int n, int r);

/// Raw cone-type predicate (1..5 with 3A/3B/3C) for monomials over r cones and H_n on r+1..r+n.
/// Several predicates may hold for the same monomial (3C overlaps 3A and 3B).
[[nodiscard]] bool has_cone_type(Monomial h, int n, int r, GeneratorType t);

/// Unique cone tag: the first raw predicate among 1, 2, 3A, 3B, 3C, 4, 5, so 3C only labels
/// monomials that are neither 3A nor 3B. For ACH the 3C tag is reported but not admitted.
[[nodiscard]] std::optional<GeneratorType> classify_type_cone(Monomial h, int n, int r);

/// Tag under the family's own classification (H/LH or cone types).
[[nodiscard]] std::optional<GeneratorType> classify(const FamilySpec& spec, Monomial h);

/// Whether the tag belongs to the family's admitted set.
[[nodiscard]] bool is_admitted(const FamilySpec& spec, GeneratorType t);

/// Whether h is a generator of HS_k according to the type description (degree |h| = k+2).
[[nodiscard]] bool admitted_by_types(const FamilySpec& spec, Monomial h);

/// All (k+2)-subsets admitted by the type description; k >= 2.
[[nodiscard]] EquigeneratedIdeal generators_via_types(const FamilySpec& spec, int k);

/// Predicted LQ word for k = 1..n+r-4. LH with r = 0 is rejected.
[[nodiscard]] std::string expected_pattern(const FamilySpec& spec);

/// The restriction monomial x_1 (x_3 ... x_k)(x_{n-3} ... x_{n+1}) used to show that
/// HS_k(LH_{n,1}^c) lacks linear quotients for 2 <= k <= n-4.
[[nodiscard]] Monomial lh_obstruction_monomial(int n, int k);

/// The two generators of HS_k(ACH_{n,r}^c) when r = k-n+4.
[[nodiscard]] std::pair<Monomial, Monomial> ach_top_pair(int n, int r);

/// Type class promised by an exchange lemma. For LH with k > n-4 the class is type VI with
/// secondmax >= n.
struct ExchangeTarget {
    std::vector<GeneratorType> types;
    bool high_secondmax = false;
};

/// The class an exchange lemma promises for the pair (f, g), or nullopt when no lemma applies.
/// Cone classes are matched with the raw predicates, so a 3A target accepts a monomial that is
/// also 3C.
[[nodiscard]] std::optional<ExchangeTarget> exchange_target(const FamilySpec& spec, int k, Monomial f, Monomial g);

/// Exchange pair (i, j): i in supp(f), j in supp(g)\supp(f), j < i, with x_j f / x_i an admitted
/// generator in the class from exchange_target (any admitted generator when no lemma applies).
/// When |supp(g)\supp(f)| = 1 this is the swap producing g. nullopt when no pair exists.
[[nodiscard]] std::optional<std::pair<int, int>> exchange_witness(const FamilySpec& spec, int k, Monomial f,
                                                                  Monomial g);

} // namespace hsilab
