#include "hsilab/families.hpp"

#include "hsilab/subsets.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hsilab {
namespace {

using enum GeneratorType;

// Some integer of [lo, hi] is missing from s.
bool has_gap(VertexSet s, int lo, int hi) {
    if (lo > hi)
        return false;
    const VertexSet window = full_set(hi) & ~full_set(lo - 1);
    return (window & ~s) != 0;
}

// Successor of x in s, or 0.
int next_member(VertexSet s, int x) {
    const VertexSet above = s & ~full_set(x);
    return above == 0 ? 0 : std::countr_zero(above) + 1;
}

bool is_cone_family(FamilyKind kind) { return kind == FamilyKind::ACH || kind == FamilyKind::CH; }

} // namespace

std::string to_string(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::H: return "H";
    case FamilyKind::LH: return "LH";
    case FamilyKind::ACH: return "ACH";
    case FamilyKind::CH: return "CH";
    }
    return "?";
}

FamilyKind parse_family_kind(std::string_view text) {
    std::string up(text);
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (FamilyKind k : {FamilyKind::H, FamilyKind::LH, FamilyKind::ACH, FamilyKind::CH})
        if (up == to_string(k))
            return k;
    throw std::invalid_argument("unknown family kind '" + std::string(text) + "' (expected H, LH, ACH or CH)");
}

FamilySpec FamilySpec::make(FamilyKind kind, int n, int r) {
    if (n < 6)
        throw std::invalid_argument("family needs n >= 6, got " + std::to_string(n));
    if (r < 0)
        throw std::invalid_argument("family needs r >= 0, got " + std::to_string(r));
    if (kind == FamilyKind::H)
        r = 0;
    if (n + r > kMaxVertices)
        throw std::invalid_argument("family exceeds " + std::to_string(kMaxVertices) + " vertices");
    return FamilySpec{kind, n, r};
}

SimpleGraph h_graph(int n, int offset, int total) {
    if (total < 0)
        total = n + offset;
    SimpleGraph g(total);
    auto add = [&](int a, int b) { g.add_edge(a + offset, b + offset); };
    for (int i = 1; i <= n - 5; ++i)
        add(i, i + 1);
    add(n - 4, n - 2);
    add(n - 2, n - 3);
    for (int j = 1; j <= n; ++j) {
        if (j != 1 && j != n - 1)
            add(n - 1, j);
        if (j != n - 3 && j != n)
            add(n, j);
    }
    return g;
}

FamilyGraph build_family(const FamilySpec& raw) {
    const FamilySpec spec = FamilySpec::make(raw.kind, raw.n, raw.r);
    const int n = spec.n;
    const int r = spec.r;
    const int total = n + r;
    SimpleGraph g;
    switch (spec.kind) {
    case FamilyKind::H:
        g = h_graph(n);
        break;
    case FamilyKind::LH:
        g = h_graph(n, 0, total);
        for (int i = 1; i <= r; ++i) {
            for (int j = 1; j <= n; ++j)
                if (j != n - 3)
                    g.add_edge(n + i, j);
            for (int l = i + 1; l <= r; ++l)
                g.add_edge(n + i, n + l);
        }
        break;
    case FamilyKind::ACH:
    case FamilyKind::CH:
        g = h_graph(n, r, total);
        for (int i = 1; i <= r; ++i) {
            for (int l = i + 1; l <= r; ++l)
                g.add_edge(i, l);
            g.add_edge(i, r + n - 1);
            g.add_edge(i, r + n);
            if (spec.kind == FamilyKind::ACH)
                g.add_edge(i, r + n - 2);
        }
        break;
    }
    FamilyGraph out{std::move(g), VertexOrdering::natural(total)};
    if (!verify_peo(out.graph, out.peo))
        throw std::logic_error("natural order is not a PEO of " + to_string(spec.kind));
    return out;
}

std::string to_string(GeneratorType t) {
    switch (t) {
    case I: return "I";
    case II: return "II";
    case III: return "III";
    case IV: return "IV";
    case V: return "V";
    case VI: return "VI";
    case T1: return "1";
    case T2: return "2";
    case T3A: return "3A";
    case T3B: return "3B";
    case T3C: return "3C";
    case T4: return "4";
    case T5: return "5";
    }
    return "?";
}

std::optional<GeneratorType> classify_type_LH(Monomial h, int n, int /*r*/) {
    if (h.degree() < 2)
        return std::nullopt;
    const VertexSet s = h.bits();
    const int lo = h.min_index();
    const int mx = h.max_index();
    const int sm = h.second_max();
    if (mx <= n - 4)
        return has_gap(s, lo, mx) ? std::optional(I) : std::nullopt;
    if (mx == n - 3)
        return II;
    if (mx == n - 2) {
        if (((sm == n - 3 || sm == n - 4) && has_gap(s, lo, sm)) || sm <= n - 5)
            return III;
        return std::nullopt;
    }
    if (mx == n - 1)
        return (h.contains(1) && !h.contains(2)) ? std::optional(IV) : std::nullopt;
    if (mx == n)
        return sm == n - 3 ? std::optional(V) : std::nullopt;
    if (h.contains(n - 3) && next_member(s, n - 3) >= n)
        return VI;
    return std::nullopt;
}

bool has_cone_type(Monomial h, int n, int r, GeneratorType t) {
    const VertexSet s = h.bits();
    const VertexSet q = s & ~full_set(r) & full_set(r + n);
    if (q == 0 || h.degree() < 2)
        return false;
    const int min_q = std::countr_zero(q) + 1;
    const int mx = h.max_index();
    const int sm = h.second_max();
    const bool touches_cones = (s & full_set(r)) != 0;
    switch (t) {
    case T1: return mx >= r + 1 && mx <= r + n - 4 && (touches_cones || has_gap(q, min_q, mx));
    case T2: return mx == r + n - 3;
    case T3A: return mx == r + n - 2 && (sm == r + n - 3 || sm == r + n - 4) && has_gap(q, min_q, sm);
    case T3B: return mx == r + n - 2 && sm >= r + 1 && sm <= r + n - 5;
    case T3C: return mx == r + n - 2 && touches_cones;
    case T4: return mx == r + n - 1 && h.contains(r + 1) && !h.contains(r + 2);
    case T5: return mx == r + n && sm == r + n - 3;
    default: return false;
    }
}

std::optional<GeneratorType> classify_type_cone(Monomial h, int n, int r) {
    for (GeneratorType t : {T1, T2, T3A, T3B, T3C, T4, T5})
        if (has_cone_type(h, n, r, t))
            return t;
    return std::nullopt;
}

std::optional<GeneratorType> classify(const FamilySpec& spec, Monomial h) {
    return is_cone_family(spec.kind) ? classify_type_cone(h, spec.n, spec.r) : classify_type_LH(h, spec.n, spec.r);
}

bool is_admitted(const FamilySpec& spec, GeneratorType t) {
    switch (spec.kind) {
    case FamilyKind::H: return t == I || t == II || t == III || t == IV || t == V;
    case FamilyKind::LH: return t == I || t == II || t == III || t == IV || t == V || t == VI;
    case FamilyKind::ACH: return t == T1 || t == T2 || t == T3A || t == T3B || t == T4 || t == T5;
    case FamilyKind::CH: return t == T1 || t == T2 || t == T3A || t == T3B || t == T3C || t == T4 || t == T5;
    }
    return false;
}

bool admitted_by_types(const FamilySpec& spec, Monomial h) {
    const auto t = classify(spec, h);
    return t && is_admitted(spec, *t);
}

EquigeneratedIdeal generators_via_types(const FamilySpec& spec, int k) {
    if (k < 2)
        throw std::invalid_argument("type description covers k >= 2 only");
    std::vector<Monomial> gens;
    for_each_subset_of_size(full_set(spec.vertex_count()), k + 2, [&](VertexSet s) {
        if (admitted_by_types(spec, Monomial(s)))
            gens.emplace_back(s);
    });
    return EquigeneratedIdeal(spec.vertex_count(), k + 2, std::move(gens));
}

std::string expected_pattern(const FamilySpec& spec) {
    const int n = spec.n;
    const int r = spec.r;
    if (spec.kind == FamilyKind::LH && r == 0)
        throw std::invalid_argument("LH with r = 0 is not covered by the LH theorem; use kind H");
    std::string word;
    for (int k = 1; k <= n + r - 4; ++k) {
        bool lq = true;
        if (k >= 2) {
            switch (spec.kind) {
            case FamilyKind::H:
            case FamilyKind::CH: lq = k != n - 4; break;
            case FamilyKind::ACH: lq = k < n - 4; break;
            case FamilyKind::LH: lq = k > n - 4; break;
            }
        }
        word.push_back(lq ? 'T' : 'F');
    }
    return word;
}

Monomial lh_obstruction_monomial(int n, int k) {
    if (k < 2 || k > n - 4)
        throw std::invalid_argument("obstruction monomial needs 2 <= k <= n-4");
    VertexSet s = vertex_bit(1);
    for (int i = 3; i <= k; ++i)
        s |= vertex_bit(i);
    for (int i = n - 3; i <= n + 1; ++i)
        s |= vertex_bit(i);
    return Monomial(s);
}

std::pair<Monomial, Monomial> ach_top_pair(int n, int r) {
    const VertexSet all = full_set(r + n);
    return {Monomial(all & ~vertex_bit(r + n - 2) & ~vertex_bit(r + n - 1)),
            Monomial(all & ~vertex_bit(r + 2) & ~vertex_bit(r + n))};
}

std::optional<ExchangeTarget> exchange_target(const FamilySpec& spec, int k, Monomial f, Monomial g) {
    const int n = spec.n;
    const int r = spec.r;
    if (spec.kind == FamilyKind::LH) {
        if (k > n - 4)
            return ExchangeTarget{{VI}, true};
        return std::nullopt;
    }
    // H_n is ACH_{n,0}; its types coincide with the cone types at r = 0.
    const auto tf = classify_type_cone(f, n, r);
    if (!tf)
        return std::nullopt;
    switch (*tf) {
    case T1: return ExchangeTarget{{T1}};
    case T2: return ExchangeTarget{{T2}};
    case T3A:
    case T3B: return ExchangeTarget{{T1, T2, T3A, T3B}};
    case T3C: return ExchangeTarget{{T3C}};
    case T5: return ExchangeTarget{{T2}};
    case T4: {
        const bool lemma_pair = classify_type_cone(g, n, r) == T5 &&
                                (g.bits() & ~f.bits()) == (vertex_bit(r + 2) | vertex_bit(r + n));
        if (!lemma_pair)
            return ExchangeTarget{{T1, T2, T3A, T3B, T4}};
        if (k < n - 4)
            return ExchangeTarget{{T2, T3A}};
        if (k > n - 4)
            return ExchangeTarget{{T2, T3C}};
        return std::nullopt;
    }
    default: return std::nullopt;
    }
}

std::optional<std::pair<int, int>> exchange_witness(const FamilySpec& spec, int k, Monomial f, Monomial g) {
    const VertexSet only_g = g.bits() & ~f.bits();
    const VertexSet only_f = f.bits() & ~g.bits();
    if (set_size(only_g) == 1) {
        const int i = std::countr_zero(only_f) + 1;
        const int j = std::countr_zero(only_g) + 1;
        if (j < i)
            return std::pair{i, j};
        return std::nullopt;
    }
    const auto target = exchange_target(spec, k, f, g);
    auto accepts = [&](Monomial h) {
        if (!admitted_by_types(spec, h))
            return false;
        if (!target)
            return true;
        if (spec.kind == FamilyKind::LH)
            return classify_type_LH(h, spec.n, spec.r) == VI && (!target->high_secondmax || h.second_max() >= spec.n);
        return std::any_of(target->types.begin(), target->types.end(),
                           [&](GeneratorType t) { return has_cone_type(h, spec.n, spec.r, t); });
    };
    for (int j : set_members(only_g))
        for (int i : set_members(f.bits()))
            if (j < i && accepts(f.exchange(i, j)))
                return std::pair{i, j};
    return std::nullopt;
}

} // namespace hsilab
