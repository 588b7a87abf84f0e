#pragma once

#include "hsilab/graph.hpp"

namespace hsilab {

/// Scatters the low bits of `packed` onto the members of `mask` in increasing order.
[[nodiscard]] inline VertexSet deposit_bits(VertexSet packed, VertexSet mask) {
    VertexSet out = 0;
    for (VertexSet m = mask; m != 0 && packed != 0; m &= m - 1, packed >>= 1)
        if ((packed & 1) != 0)
            out |= m & (~m + 1);
    return out;
}

/// Calls f(s) for every subset s of `universe` with exactly k members, in increasing order
/// of the packed representation.
template <typename F>
void for_each_subset_of_size(VertexSet universe, int k, F&& f) {
    const int n = set_size(universe);
    if (k < 0 || k > n)
        return;
    if (k == 0) {
        f(VertexSet{0});
        return;
    }
    const bool contiguous = universe == full_set(n);
    VertexSet s = full_set(k);
    const VertexSet last = full_set(n) & ~full_set(n - k);
    while (true) {
        f(contiguous ? s : deposit_bits(s, universe));
        if (s == last)
            return;
        const VertexSet low = s & (~s + 1);
        const VertexSet ripple = s + low;
        s = (((ripple ^ s) >> 2) / low) | ripple;
    }
}

} // namespace hsilab
