#pragma once

#include "hsilab/graph.hpp"
#include "hsilab/ideal.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace hsilab {

/// HS_k(I(h^c)) for a chordal graph h with perfect elimination ordering o (z_1 > ... > z_n):
/// generated by the (k+2)-sets i_1 < ... < i_{k+2} of positions that admit some t < k+2 with
/// z_{i_t} adjacent in h to none of z_{i_{t+1}}, ..., z_{i_{k+2}}.
/// Throws std::invalid_argument when o is not a perfect elimination ordering of h.
[[nodiscard]] EquigeneratedIdeal hs_generators(const SimpleGraph& h, const VertexOrdering& o, int k);

/// HS_0, HS_1, ..., HS_pd of I(h^c); empty when I(h^c) is the zero ideal.
[[nodiscard]] std::vector<EquigeneratedIdeal> shift_ideals(const SimpleGraph& h, const VertexOrdering& o);

/// pd I(h^c) for chordal h; nullopt when I(h^c) = 0 (h complete).
[[nodiscard]] std::optional<int> projective_dimension(const SimpleGraph& h);

struct ShiftComputation {
    SimpleGraph source;  // the chordal complement H of G
    VertexOrdering peo;
    int k = 0;
    EquigeneratedIdeal result{0, 2};
    std::optional<int> pd;
};

/// HS_k(I(g)) for a co-chordal graph g, using the MCS ordering of g^c.
[[nodiscard]] ShiftComputation compute_shift(const SimpleGraph& g, int k);

void to_json(nlohmann::json& j, const ShiftComputation& s);

} // namespace hsilab
