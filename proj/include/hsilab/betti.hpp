#pragma once

#include "hsilab/graph.hpp"
#include "hsilab/ideal.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace hsilab {

/// Rank over the two-element field of the matrix whose rows are given as dense bit rows.
/// Each row holds `columns` bits packed into 64-bit words; rows are consumed.
[[nodiscard]] int gf2_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t columns);

/// Abstract simplicial complex on a ground set, stored as its faces (subsets of the ground set).
struct SimplicialComplex {
    VertexSet ground = 0;
    std::vector<VertexSet> faces;  // sorted by size, then by value

    [[nodiscard]] bool is_void() const noexcept { return faces.empty(); }
    [[nodiscard]] bool contains(VertexSet face) const;
    /// Faces with exactly `size` members (dimension size-1).
    [[nodiscard]] std::vector<VertexSet> faces_of_size(int size) const;
};

/// K^a(I) = { S subset of a : x^a / x_S in I }. Void when x^a is not in I.
[[nodiscard]] SimplicialComplex upper_koszul_complex(const EquigeneratedIdeal& ideal, Monomial a);

/// dim over GF(2) of the reduced homology in dimension d (d >= -1).
/// {emptyset} has one-dimensional H_{-1}; the void complex has no homology at all.
[[nodiscard]] int reduced_homology_dim(const SimplicialComplex& k, int d);

/// beta_{k,a}(I) = dim H_{k-1}(K^a(I)).
[[nodiscard]] int betti_number(const EquigeneratedIdeal& ideal, int k, Monomial a);

struct BettiOptions {
    /// Also scan multidegrees of size degree+k+1.
    bool strict = false;
    int max_vars = 20;
    unsigned jobs = 1;
};

struct BettiEntry {
    Monomial multidegree;
    int dimension = 0;

    friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

/// Nonzero beta_{k,a} for squarefree a of size degree+k (and degree+k+1 in strict mode), sorted
/// lex-descending by multidegree. Throws ScaleGuardError above max_vars variables.
[[nodiscard]] std::vector<BettiEntry> betti_entries(const EquigeneratedIdeal& ideal, int k,
                                                    const BettiOptions& options = {});

/// Supports of the nonzero entries of betti_entries.
[[nodiscard]] std::vector<Monomial> betti_oracle(const EquigeneratedIdeal& ideal, int k,
                                                 const BettiOptions& options = {});

using BettiMultidegreeTable = std::map<int, std::vector<BettiEntry>>;

/// All homological indices k with some nonzero entry, up to n_vars - degree.
[[nodiscard]] BettiMultidegreeTable betti_table(const EquigeneratedIdeal& ideal, const BettiOptions& options = {});

} // namespace hsilab
