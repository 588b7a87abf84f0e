// Canonical labeling by individualization-refinement.
//
// Colorings are refined to the coarsest equitable partition, the first non-singleton cell is
// individualized vertex by vertex, and the lexicographically largest adjacency code over all
// leaves is the certificate. Automorphisms discovered at leaves prune equivalent children and
// trigger backjumps to the divergence node, which keeps highly symmetric graphs cheap.

#include "hsilab/graph.hpp"

#include <algorithm>
#include <numeric>

namespace hsilab {
namespace {

using Coloring = std::vector<int>;
using Code = std::vector<std::uint64_t>;

int color_count(const Coloring& color) {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
}

// Coarsest equitable refinement; colors stay ordered so the map is isomorphism-equivariant.
void refine(const SimpleGraph& g, Coloring& color) {
    const int n = g.vertex_count();
    int colors = color_count(color);
    std::vector<int> counts;
    std::vector<int> idx(static_cast<std::size_t>(n));
    while (true) {
        const auto width = static_cast<std::size_t>(colors + 1);
        counts.assign(static_cast<std::size_t>(n) * width, 0);
        for (int v = 0; v < n; ++v) {
            auto* row = &counts[static_cast<std::size_t>(v) * width];
            row[0] = color[static_cast<std::size_t>(v)];
            for (int u : set_members(g.adjacency(v + 1)))
                ++row[1 + color[static_cast<std::size_t>(u - 1)]];
        }
        auto sig_less = [&](int a, int b) {
            const auto* ra = &counts[static_cast<std::size_t>(a) * width];
            const auto* rb = &counts[static_cast<std::size_t>(b) * width];
            return std::lexicographical_compare(ra, ra + width, rb, rb + width);
        };
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), sig_less);
        Coloring next(static_cast<std::size_t>(n));
        int c = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i > 0 && sig_less(idx[i - 1], idx[i]))
                ++c;
            next[static_cast<std::size_t>(idx[i])] = c;
        }
        const int next_colors = n == 0 ? 0 : c + 1;
        color = std::move(next);
        if (next_colors == colors)
            return;
        colors = next_colors;
    }
}

Coloring individualize(const Coloring& color, int w) {
    const int c = color[static_cast<std::size_t>(w)];
    Coloring out(color.size());
    for (std::size_t v = 0; v < color.size(); ++v) {
        const int cv = color[v];
        if (cv < c)
            out[v] = cv;
        else if (static_cast<int>(v) == w)
            out[v] = c;
        else
            out[v] = cv + 1;
    }
    return out;
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const SimpleGraph& g) : g_(g), n_(g.vertex_count()) {}

    CanonicalForm run() {
        Coloring color(static_cast<std::size_t>(n_), 0);
        refine(g_, color);
        descend(color);
        CanonicalForm out;
        out.perm.resize(static_cast<std::size_t>(n_));
        for (int pos = 0; pos < n_; ++pos)
            out.perm[static_cast<std::size_t>(best_lab_[static_cast<std::size_t>(pos)])] = pos + 1;
        out.certificate.bytes.push_back(static_cast<char>(n_));
        for (std::uint64_t word : best_code_)
            for (int b = 0; b < 8; ++b)
                out.certificate.bytes.push_back(static_cast<char>((word >> (8 * b)) & 0xffU));
        return out;
    }

private:
    static constexpr int kNoJump = -1;

    Code leaf_code(const std::vector<int>& lab) const {
        const std::size_t bits = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ > 0 ? n_ - 1 : 0) / 2;
        Code code((bits + 63) / 64, 0);
        std::size_t bit = 0;
        for (int j = 1; j < n_; ++j) {
            const VertexSet row = g_.adjacency(lab[static_cast<std::size_t>(j)] + 1);
            for (int i = 0; i < j; ++i, ++bit)
                if ((row & vertex_bit(lab[static_cast<std::size_t>(i)] + 1)) != 0)
                    code[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
        }
        return code;
    }

    static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
        const auto len = std::min(a.size(), b.size());
        std::size_t i = 0;
        while (i < len && a[i] == b[i])
            ++i;
        return static_cast<int>(i);
    }

    // Records the automorphism mapping the current leaf onto a stored leaf.
    void record_automorphism(const std::vector<int>& lab, const std::vector<int>& other) {
        std::vector<int> gamma(static_cast<std::size_t>(n_));
        for (int pos = 0; pos < n_; ++pos)
            gamma[static_cast<std::size_t>(lab[static_cast<std::size_t>(pos)])] = other[static_cast<std::size_t>(pos)];
        automorphisms_.push_back(std::move(gamma));
    }

    int leaf(const Coloring& color) {
        std::vector<int> lab(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            lab[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] = v;
        Code code = leaf_code(lab);
        if (!have_first_) {
            have_first_ = true;
            first_code_ = best_code_ = code;
            first_lab_ = best_lab_ = lab;
            first_path_ = best_path_ = path_;
            return kNoJump;
        }
        if (code == first_code_) {
            record_automorphism(lab, first_lab_);
            return common_prefix(path_, first_path_);
        }
        if (code == best_code_) {
            record_automorphism(lab, best_lab_);
            return common_prefix(path_, best_path_);
        }
        if (code > best_code_) {
            best_code_ = std::move(code);
            best_lab_ = std::move(lab);
            best_path_ = path_;
        }
        return kNoJump;
    }

    int find(std::vector<int>& parent, int v) const {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    }

    // Orbits of the group generated by the known automorphisms fixing the current path.
    std::vector<int> stabilizer_orbits() const {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& gamma : automorphisms_) {
            bool fixes = true;
            for (int v : path_)
                if (gamma[static_cast<std::size_t>(v)] != v) {
                    fixes = false;
                    break;
                }
            if (!fixes)
                continue;
            for (int v = 0; v < n_; ++v) {
                int a = find(parent, v);
                int b = find(parent, gamma[static_cast<std::size_t>(v)]);
                if (a != b)
                    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
        for (int v = 0; v < n_; ++v)
            parent[static_cast<std::size_t>(v)] = find(parent, v);
        return parent;
    }

    int descend(const Coloring& color) {
        const int depth = static_cast<int>(path_.size());
        const int colors = color_count(color);
        if (colors == n_)
            return leaf(color);

        std::vector<int> cell_size(static_cast<std::size_t>(colors), 0);
        for (int c : color)
            ++cell_size[static_cast<std::size_t>(c)];
        int target = 0;
        while (cell_size[static_cast<std::size_t>(target)] == 1)
            ++target;

        std::vector<int> explored;
        for (int w = 0; w < n_; ++w) {
            if (color[static_cast<std::size_t>(w)] != target)
                continue;
            if (!explored.empty()) {
                const auto orbit = stabilizer_orbits();
                const bool equivalent = std::any_of(explored.begin(), explored.end(), [&](int e) {
                    return orbit[static_cast<std::size_t>(e)] == orbit[static_cast<std::size_t>(w)];
                });
                if (equivalent)
                    continue;
            }
            explored.push_back(w);
            Coloring child = individualize(color, w);
            refine(g_, child);
            path_.push_back(w);
            const int jump = descend(child);
            path_.pop_back();
            if (jump != kNoJump && jump < depth)
                return jump;
        }
        return kNoJump;
    }

    const SimpleGraph& g_;
    int n_;
    std::vector<int> path_;
    std::vector<std::vector<int>> automorphisms_;
    bool have_first_ = false;
    Code first_code_, best_code_;
    std::vector<int> first_lab_, best_lab_;
    std::vector<int> first_path_, best_path_;
};

} // namespace

CanonicalForm canonical_form(const SimpleGraph& g) {
    if (g.vertex_count() == 0)
        return CanonicalForm{CanonicalCertificate{std::string(1, '\0')}, {}};
    return CanonicalSearch(g).run();
}

CanonicalCertificate canonical_certificate(const SimpleGraph& g) { return canonical_form(g).certificate; }

SimpleGraph canonical_graph(const SimpleGraph& g) {
    const auto form = canonical_form(g);
    return relabel(g, form.perm);
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
           canonical_certificate(a) == canonical_certificate(b);
}

bool contains_induced(const SimpleGraph& g, const SimpleGraph& h) {
    const int n = g.vertex_count();
    const int k = h.vertex_count();
    if (k > n)
        return false;
    if (k == 0)
        return true;

    const int target_edges = h.edge_count();
    std::vector<int> target_degrees;
    for (int v = 1; v <= k; ++v)
        target_degrees.push_back(h.degree(v));
    std::sort(target_degrees.begin(), target_degrees.end());
    const auto target_cert = canonical_certificate(h);

    std::vector<int> degrees(static_cast<std::size_t>(k));
    // Gosper's hack over k-subsets of the n vertices.
    VertexSet s = full_set(k);
    const VertexSet limit = full_set(n);
    while (true) {
        int twice_edges = 0;
        std::size_t i = 0;
        for (VertexSet rest = s; rest != 0; rest &= rest - 1, ++i) {
            const int v = std::countr_zero(rest) + 1;
            degrees[i] = set_size(g.adjacency(v) & s);
            twice_edges += degrees[i];
        }
        if (twice_edges == 2 * target_edges) {
            std::sort(degrees.begin(), degrees.end());
            if (degrees == target_degrees && canonical_certificate(induced_subgraph(g, s).graph) == target_cert)
                return true;
        }
        if (k == n || s == (limit & ~full_set(n - k)))
            break;
        const VertexSet low = s & (~s + 1);
        const VertexSet ripple = s + low;
        if (ripple == 0)
            break;
        s = (((ripple ^ s) >> 2) / low) | ripple;
        if ((s & ~limit) != 0)
            break;
    }
    return false;
}

} // namespace hsilab
