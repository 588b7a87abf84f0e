#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hsilab {

/// Bit v-1 set <=> vertex v is a member. Shared by adjacency rows and monomial supports.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

[[nodiscard]] constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << (v - 1); }

[[nodiscard]] constexpr VertexSet full_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

[[nodiscard]] constexpr int set_size(VertexSet s) { return std::popcount(s); }

[[nodiscard]] std::vector<int> set_members(VertexSet s);
[[nodiscard]] VertexSet make_set(std::span<const int> members);

using Edge = std::pair<int, int>;

/// Finite simple graph on the vertices 1..n.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int vertex_count);
    SimpleGraph(int vertex_count, std::span<const Edge> edges);
    SimpleGraph(int vertex_count, std::initializer_list<Edge> edges);

    [[nodiscard]] int vertex_count() const noexcept { return n_; }
    [[nodiscard]] int edge_count() const noexcept;
    [[nodiscard]] VertexSet vertices() const noexcept { return full_set(n_); }

    [[nodiscard]] bool has_edge(int u, int v) const;
    /// Adjacency row of v as a vertex set; v must be in range.
    [[nodiscard]] VertexSet adjacency(int v) const { return rows_[static_cast<std::size_t>(v - 1)]; }
    [[nodiscard]] std::vector<Edge> edges() const;
    [[nodiscard]] int degree(int v) const { return set_size(adjacency(v)); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<VertexSet> rows_;
};

/// z_1 > z_2 > ... > z_n; order[0] is z_1.
struct VertexOrdering {
    std::vector<int> order;

    [[nodiscard]] std::size_t size() const noexcept { return order.size(); }
    [[nodiscard]] bool is_permutation_of(int n) const;
    [[nodiscard]] static VertexOrdering natural(int n);

    friend bool operator==(const VertexOrdering&, const VertexOrdering&) = default;
};

struct InducedSubgraph {
    SimpleGraph graph;
    /// labels[i] is the original label of relabeled vertex i+1.
    std::vector<int> labels;
};

[[nodiscard]] SimpleGraph complement(const SimpleGraph& g);
[[nodiscard]] InducedSubgraph induced_subgraph(const SimpleGraph& g, VertexSet s);
[[nodiscard]] VertexSet neighbors(const SimpleGraph& g, int v);
[[nodiscard]] SimpleGraph complete_graph(int n);
[[nodiscard]] SimpleGraph cycle_graph(int n);
[[nodiscard]] SimpleGraph path_graph(int n);
/// g with vertices renamed: vertex v becomes perm[v-1].
[[nodiscard]] SimpleGraph relabel(const SimpleGraph& g, std::span<const int> perm);

/// Maximum-cardinality search with lowest-label tie-breaking; the reversed visit order
/// is returned when it is a perfect elimination ordering.
[[nodiscard]] std::optional<VertexOrdering> find_peo(const SimpleGraph& g);
[[nodiscard]] bool verify_peo(const SimpleGraph& g, const VertexOrdering& o);
[[nodiscard]] bool is_chordal(const SimpleGraph& g);
[[nodiscard]] bool is_cochordal(const SimpleGraph& g);

[[nodiscard]] bool has_isolated_vertex(const SimpleGraph& g);
[[nodiscard]] bool has_universal_vertex(const SimpleGraph& g);

/// Byte string equal for two graphs iff they are isomorphic.
struct CanonicalCertificate {
    std::string bytes;

    friend auto operator<=>(const CanonicalCertificate&, const CanonicalCertificate&) = default;
};

struct CanonicalForm {
    CanonicalCertificate certificate;
    /// Relabeling taking g to its canonical form: vertex v goes to perm[v-1].
    std::vector<int> perm;
};

[[nodiscard]] CanonicalForm canonical_form(const SimpleGraph& g);
[[nodiscard]] CanonicalCertificate canonical_certificate(const SimpleGraph& g);
/// The canonical representative of g's isomorphism class.
[[nodiscard]] SimpleGraph canonical_graph(const SimpleGraph& g);

[[nodiscard]] bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);
[[nodiscard]] bool contains_induced(const SimpleGraph& g, const SimpleGraph& h);

} // namespace hsilab
