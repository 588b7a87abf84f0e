#include "hsilab/shifts.hpp"

#include "hsilab/subsets.hpp"

#include <stdexcept>

namespace hsilab {
namespace {

struct PeoView {
    std::vector<VertexSet> later;  // later[v-1]: vertices after v in the ordering
};

PeoView make_view(const SimpleGraph& h, const VertexOrdering& o) {
    if (!verify_peo(h, o))
        throw std::invalid_argument("ordering is not a perfect elimination ordering of the chordal graph");
    PeoView view{std::vector<VertexSet>(static_cast<std::size_t>(h.vertex_count()), 0)};
    VertexSet rest = h.vertices();
    for (int z : o.order) {
        rest &= ~vertex_bit(z);
        view.later[static_cast<std::size_t>(z - 1)] = rest;
    }
    return view;
}

// Some member of s has a later member of s and no later neighbor inside s.
bool admits_shift(const SimpleGraph& h, const PeoView& view, VertexSet s) {
    for (VertexSet rest = s; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest) + 1;
        const VertexSet tail = s & view.later[static_cast<std::size_t>(v - 1)];
        if (tail != 0 && (tail & h.adjacency(v)) == 0)
            return true;
    }
    return false;
}

EquigeneratedIdeal generators_of_size(const SimpleGraph& h, const PeoView& view, int size) {
    std::vector<Monomial> gens;
    for_each_subset_of_size(h.vertices(), size, [&](VertexSet s) {
        if (admits_shift(h, view, s))
            gens.emplace_back(s);
    });
    return EquigeneratedIdeal(h.vertex_count(), size, std::move(gens));
}

} // namespace

EquigeneratedIdeal hs_generators(const SimpleGraph& h, const VertexOrdering& o, int k) {
    if (k < 0)
        throw std::invalid_argument("homological index must be nonnegative");
    const auto view = make_view(h, o);
    return generators_of_size(h, view, k + 2);
}

std::vector<EquigeneratedIdeal> shift_ideals(const SimpleGraph& h, const VertexOrdering& o) {
    const auto view = make_view(h, o);
    std::vector<EquigeneratedIdeal> out;
    for (int size = 2; size <= h.vertex_count(); ++size) {
        auto ideal = generators_of_size(h, view, size);
        if (ideal.is_zero())
            break;
        out.push_back(std::move(ideal));
    }
    return out;
}

std::optional<int> projective_dimension(const SimpleGraph& h) {
    const auto peo = find_peo(h);
    if (!peo)
        throw std::invalid_argument("projective dimension via shifts needs a chordal graph");
    const auto shifts = shift_ideals(h, *peo);
    if (shifts.empty())
        return std::nullopt;
    return static_cast<int>(shifts.size()) - 1;
}

ShiftComputation compute_shift(const SimpleGraph& g, int k) {
    ShiftComputation out;
    out.source = complement(g);
    const auto peo = find_peo(out.source);
    if (!peo)
        throw std::invalid_argument("graph is not co-chordal");
    out.peo = *peo;
    out.k = k;
    const auto shifts = shift_ideals(out.source, out.peo);
    if (!shifts.empty())
        out.pd = static_cast<int>(shifts.size()) - 1;
    out.result = k < static_cast<int>(shifts.size()) ? shifts[static_cast<std::size_t>(k)]
                                                     : EquigeneratedIdeal::zero(g.vertex_count(), k + 2);
    return out;
}

void to_json(nlohmann::json& j, const ShiftComputation& s) {
    j = s.result;
    j["k"] = s.k;
    j["pd"] = s.pd ? nlohmann::json(*s.pd) : nlohmann::json("undefined");
}

} // namespace hsilab
