#pragma once

#include <vector>

#include "lb/poly.hpp"

namespace lb {

// (P - P|_{u<->v}) / (u - v) for two variable slots.
Poly divided_difference_slots(const Poly& p, int su, int sv);

// d_i and s_i on the root variables x_i, x_{i+1}.
Poly divided_difference(const Poly& p, int i);
Poly transpose(const Poly& p, int i);

// Longest-word divided difference on a block of consecutive roots, using the
// word (d1)(d2 d1)(d3 d2 d1)... in block-local indices.
Poly longest_dd(const Poly& p, const std::vector<int>& block);

}  // namespace lb
