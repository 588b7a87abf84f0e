#include "hsilab/betti.hpp"

#include "hsilab/errors.hpp"
#include "hsilab/parallel.hpp"
#include "hsilab/subsets.hpp"

#include <algorithm>
#include <string>

namespace hsilab {
namespace {

bool face_order(VertexSet a, VertexSet b) {
    const int sa = set_size(a);
    const int sb = set_size(b);
    return sa != sb ? sa < sb : a < b;
}

std::vector<VertexSet> koszul_faces_of_size(const EquigeneratedIdeal& ideal, VertexSet a, int size) {
    std::vector<VertexSet> out;
    for_each_subset_of_size(a, size, [&](VertexSet s) {
        if (ideal.contains(Monomial(a & ~s)))
            out.push_back(s);
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Rank of the boundary map from `upper` (faces of size s) to `lower` (faces of size s-1).
int boundary_rank(const std::vector<VertexSet>& upper, const std::vector<VertexSet>& lower) {
    if (upper.empty() || lower.empty())
        return 0;
    const std::size_t words = (lower.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(upper.size());
    for (VertexSet face : upper) {
        std::vector<std::uint64_t> row(words, 0);
        if (face == 0)
            continue;
        for (VertexSet rest = face; rest != 0; rest &= rest - 1) {
            const VertexSet sub = face & ~(rest & (~rest + 1));
            const auto it = std::lower_bound(lower.begin(), lower.end(), sub);
            if (it != lower.end() && *it == sub) {
                const auto col = static_cast<std::size_t>(it - lower.begin());
                row[col / 64] |= std::uint64_t{1} << (col % 64);
            }
        }
        rows.push_back(std::move(row));
    }
    return gf2_rank(std::move(rows), lower.size());
}

// dim H_{d} from the face lists of sizes d, d+1, d+2.
int homology_from_faces(const std::vector<VertexSet>& below, const std::vector<VertexSet>& at,
                        const std::vector<VertexSet>& above) {
    return static_cast<int>(at.size()) - boundary_rank(at, below) - boundary_rank(above, at);
}

} // namespace

int gf2_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t columns) {
    int rank = 0;
    std::size_t next = 0;
    for (std::size_t col = 0; col < columns && next < rows.size(); ++col) {
        const std::size_t w = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t pivot = next;
        while (pivot < rows.size() && (rows[pivot][w] & bit) == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[next]);
        const auto& p = rows[next];
        for (std::size_t r = next + 1; r < rows.size(); ++r) {
            if ((rows[r][w] & bit) == 0)
                continue;
            for (std::size_t i = w; i < p.size(); ++i)
                rows[r][i] ^= p[i];
        }
        ++next;
        ++rank;
    }
    return rank;
}

bool SimplicialComplex::contains(VertexSet face) const {
    return std::binary_search(faces.begin(), faces.end(), face, face_order);
}

std::vector<VertexSet> SimplicialComplex::faces_of_size(int size) const {
    std::vector<VertexSet> out;
    for (VertexSet f : faces)
        if (set_size(f) == size)
            out.push_back(f);
    return out;
}

SimplicialComplex upper_koszul_complex(const EquigeneratedIdeal& ideal, Monomial a) {
    SimplicialComplex k{a.bits(), {}};
    for (int size = 0; size <= a.degree(); ++size) {
        auto layer = koszul_faces_of_size(ideal, a.bits(), size);
        if (layer.empty())
            break;
        k.faces.insert(k.faces.end(), layer.begin(), layer.end());
    }
    return k;
}

int reduced_homology_dim(const SimplicialComplex& k, int d) {
    if (d < -1)
        return 0;
    const auto below = d >= 0 ? k.faces_of_size(d) : std::vector<VertexSet>{};
    return homology_from_faces(below, k.faces_of_size(d + 1), k.faces_of_size(d + 2));
}

int betti_number(const EquigeneratedIdeal& ideal, int k, Monomial a) {
    if (k < 0)
        return 0;
    // H_{k-1} needs faces of sizes k-1, k and k+1.
    const auto below = k >= 1 ? koszul_faces_of_size(ideal, a.bits(), k - 1) : std::vector<VertexSet>{};
    const auto at = koszul_faces_of_size(ideal, a.bits(), k);
    if (at.empty())
        return 0;
    return homology_from_faces(below, at, koszul_faces_of_size(ideal, a.bits(), k + 1));
}

std::vector<BettiEntry> betti_entries(const EquigeneratedIdeal& ideal, int k, const BettiOptions& options) {
    if (ideal.n_vars() > options.max_vars)
        throw ScaleGuardError("betti oracle limited to " + std::to_string(options.max_vars) + " variables, got " +
                              std::to_string(ideal.n_vars()));
    std::vector<VertexSet> candidates;
    const VertexSet all = full_set(ideal.n_vars());
    for (int size = ideal.degree() + k; size <= ideal.degree() + k + (options.strict ? 1 : 0); ++size)
        for_each_subset_of_size(all, size, [&](VertexSet a) { candidates.push_back(a); });

    std::vector<int> dims(candidates.size(), 0);
    parallel_for(candidates.size(), options.jobs,
                 [&](std::size_t i) { dims[i] = betti_number(ideal, k, Monomial(candidates[i])); });

    std::vector<BettiEntry> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (dims[i] != 0)
            out.push_back({Monomial(candidates[i]), dims[i]});
    std::sort(out.begin(), out.end(), [](const BettiEntry& x, const BettiEntry& y) {
        if (x.multidegree.degree() != y.multidegree.degree())
            return x.multidegree.degree() < y.multidegree.degree();
        return lex_greater(x.multidegree, y.multidegree);
    });
    return out;
}

std::vector<Monomial> betti_oracle(const EquigeneratedIdeal& ideal, int k, const BettiOptions& options) {
    std::vector<Monomial> out;
    for (const auto& e : betti_entries(ideal, k, options))
        out.push_back(e.multidegree);
    return out;
}

BettiMultidegreeTable betti_table(const EquigeneratedIdeal& ideal, const BettiOptions& options) {
    BettiMultidegreeTable table;
    for (int k = 0; ideal.degree() + k <= ideal.n_vars(); ++k) {
        auto entries = betti_entries(ideal, k, options);
        if (!entries.empty())
            table.emplace(k, std::move(entries));
    }
    return table;
}

} // namespace hsilab
