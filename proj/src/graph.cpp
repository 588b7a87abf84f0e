#include "hsilab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hsilab {

std::vector<int> set_members(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    while (s != 0) {
        out.push_back(std::countr_zero(s) + 1);
        s &= s - 1;
    }
    return out;
}

VertexSet make_set(std::span<const int> members) {
    VertexSet s = 0;
    for (int v : members) {
        if (v < 1 || v > kMaxVertices)
            throw std::invalid_argument("vertex label out of range: " + std::to_string(v));
        s |= vertex_bit(v);
    }
    return s;
}

SimpleGraph::SimpleGraph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0 || vertex_count > kMaxVertices)
        throw std::invalid_argument("vertex count must lie in [0, 64], got " + std::to_string(vertex_count));
    rows_.assign(static_cast<std::size_t>(vertex_count), 0);
}

SimpleGraph::SimpleGraph(int vertex_count, std::span<const Edge> edges) : SimpleGraph(vertex_count) {
    for (auto [u, v] : edges)
        add_edge(u, v);
}

SimpleGraph::SimpleGraph(int vertex_count, std::initializer_list<Edge> edges)
    : SimpleGraph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

void SimpleGraph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n_) + "]");
}

int SimpleGraph::edge_count() const noexcept {
    int twice = 0;
    for (VertexSet row : rows_)
        twice += set_size(row);
    return twice / 2;
}

bool SimpleGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adjacency(u) & vertex_bit(v)) != 0;
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u)
        for (int v : set_members(adjacency(u) & ~full_set(u)))
            out.emplace_back(u, v);
    return out;
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("loops are not allowed (vertex " + std::to_string(u) + ")");
    rows_[static_cast<std::size_t>(u - 1)] |= vertex_bit(v);
    rows_[static_cast<std::size_t>(v - 1)] |= vertex_bit(u);
}

void SimpleGraph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    rows_[static_cast<std::size_t>(u - 1)] &= ~vertex_bit(v);
    rows_[static_cast<std::size_t>(v - 1)] &= ~vertex_bit(u);
}

bool VertexOrdering::is_permutation_of(int n) const {
    if (order.size() != static_cast<std::size_t>(n))
        return false;
    VertexSet seen = 0;
    for (int v : order) {
        if (v < 1 || v > n || (seen & vertex_bit(v)) != 0)
            return false;
        seen |= vertex_bit(v);
    }
    return true;
}

VertexOrdering VertexOrdering::natural(int n) {
    VertexOrdering o;
    o.order.resize(static_cast<std::size_t>(n));
    std::iota(o.order.begin(), o.order.end(), 1);
    return o;
}

SimpleGraph complement(const SimpleGraph& g) {
    const int n = g.vertex_count();
    SimpleGraph out(n);
    for (int u = 1; u <= n; ++u)
        for (int v : set_members(~g.adjacency(u) & full_set(n) & ~full_set(u)))
            out.add_edge(u, v);
    return out;
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, VertexSet s) {
    if (s == 0)
        throw std::invalid_argument("induced subgraph needs a nonempty vertex set");
    if ((s & ~g.vertices()) != 0)
        throw std::out_of_range("induced subgraph vertex set exceeds the graph's vertices");
    InducedSubgraph out{SimpleGraph(set_size(s)), set_members(s)};
    const auto& labels = out.labels;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if ((g.adjacency(labels[i]) & vertex_bit(labels[j])) != 0)
                out.graph.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return out;
}

VertexSet neighbors(const SimpleGraph& g, int v) {
    if (v < 1 || v > g.vertex_count())
        throw std::out_of_range("vertex " + std::to_string(v) + " outside the graph");
    return g.adjacency(v);
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            g.add_edge(u, v);
    return g;
}

SimpleGraph cycle_graph(int n) {
    SimpleGraph g = path_graph(n);
    if (n >= 3)
        g.add_edge(n, 1);
    return g;
}

SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

SimpleGraph relabel(const SimpleGraph& g, std::span<const int> perm) {
    const int n = g.vertex_count();
    if (perm.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("relabeling has the wrong length");
    SimpleGraph out(n);
    for (auto [u, v] : g.edges())
        out.add_edge(perm[static_cast<std::size_t>(u - 1)], perm[static_cast<std::size_t>(v - 1)]);
    return out;
}

std::optional<VertexOrdering> find_peo(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    VertexSet unvisited = g.vertices();
    std::vector<int> visit;
    visit.reserve(static_cast<std::size_t>(n));
    while (unvisited != 0) {
        int best = -1;
        for (int v : set_members(unvisited))
            if (best < 0 || weight[static_cast<std::size_t>(v - 1)] > weight[static_cast<std::size_t>(best - 1)])
                best = v;
        visit.push_back(best);
        unvisited &= ~vertex_bit(best);
        for (int u : set_members(g.adjacency(best) & unvisited))
            ++weight[static_cast<std::size_t>(u - 1)];
    }
    VertexOrdering o{std::vector<int>(visit.rbegin(), visit.rend())};
    if (!verify_peo(g, o))
        return std::nullopt;
    return o;
}

bool verify_peo(const SimpleGraph& g, const VertexOrdering& o) {
    if (!o.is_permutation_of(g.vertex_count()))
        throw std::invalid_argument("ordering is not a permutation of the graph's vertices");
    VertexSet later = g.vertices();
    for (int z : o.order) {
        later &= ~vertex_bit(z);
        const VertexSet tail_nbrs = g.adjacency(z) & later;
        for (int u : set_members(tail_nbrs))
            if ((tail_nbrs & ~vertex_bit(u) & ~g.adjacency(u)) != 0)
                return false;
    }
    return true;
}

bool is_chordal(const SimpleGraph& g) { return find_peo(g).has_value(); }

bool is_cochordal(const SimpleGraph& g) { return is_chordal(complement(g)); }

bool has_isolated_vertex(const SimpleGraph& g) {
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.adjacency(v) == 0)
            return true;
    return false;
}

bool has_universal_vertex(const SimpleGraph& g) {
    const VertexSet all = g.vertices();
    for (int v = 1; v <= g.vertex_count(); ++v)
        if ((g.adjacency(v) | vertex_bit(v)) == all)
            return true;
    return false;
}

} // namespace hsilab
