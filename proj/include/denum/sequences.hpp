#pragma once

#include <cstdint>

#include "denum/arith.hpp"

namespace denum {

using SeqIndex = std::int64_t;

// F_1 = F_2 = 1. Index 0 is rejected: the closed forms never reference
// F_0 and admitting it invites off-by-one bugs around F_{i-2}.
Int fib(SeqIndex i);

// L_0 = 2, L_1 = 1.
Int lucas(SeqIndex i);

// Inverse of F_{i+1} modulo F_i in [1, F_i], via Cassini's identity
// F_{i+1} F_{i-1} = F_i^2 + (-1)^i instead of the extended Euclid.
// Requires i >= 3 so that F_i >= 2.
Int fib_inv_next(SeqIndex i);

// Inverse of 5 modulo L_i in [1, L_i]. L_i mod 5 cycles through
// 2, 1, 3, 4 (never 0), and the inverse has a closed form depending on
// i mod 4. Requires i >= 1.
Int inv5_mod_lucas(SeqIndex i);

}  // namespace denum
