#pragma once

#include "denum/arith.hpp"
#include "denum/sequences.hpp"

namespace denum {

// Specialized quantities for the coefficient triple (F_i, F_{i+1}, F_{i+2}):
//   b1 == (-1)^i * n * F_{i-2}  (mod F_i),      in [1, F_i]
//   c2 == (-1)^i * n * F_i      (mod F_{i+1}),  in [1, F_{i+1}]
//   a3 == (-1)^i * n * F_{i+1}  (mod F_{i+2}),  in [1, F_{i+2}]
// n2 is the general three-variable polynomial after the three n-free
// residues collapse to 1, 1 and F_{i+2}-1.
struct FibQuantities {
  Int b1;
  Int c2;
  Int a3;
  Int n2;
};

// Lucas analogue; the congruences carry an extra factor of 5^{-1} taken
// modulo each of the three moduli, and the sign is (-1)^{i+1}.
struct LucasQuantities {
  Int b1;
  Int c2;
  Int a3;
  Int n3;
};

FibQuantities fib_quantities(SeqIndex i, const Int& n);      // i >= 3
LucasQuantities lucas_quantities(SeqIndex i, const Int& n);  // i >= 2

// O(1) counts (after the sequence lookup) for consecutive Fibonacci and
// Lucas coefficient triples:
//   N = n2 / (2 F_i F_{i+1} F_{i+2}) + (a3-1)(a3-2)/2 - 2
// Computed from the quantities above, never by delegating to count3;
// equality with count3 and with the oracles is asserted by the tests.
Int count_fib(SeqIndex i, const Int& n);
Int count_lucas(SeqIndex i, const Int& n);

}  // namespace denum
