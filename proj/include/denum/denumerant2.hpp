#pragma once

#include "denum/arith.hpp"

namespace denum {

// Residues of Tripathi's two-variable formula:
//   a_prime == -n * a^{-1} (mod b), in [1, b]
//   b_prime == -n * b^{-1} (mod a), in [1, a]
struct TripathiQuantities {
  Int a_prime;
  Int b_prime;
};

// Requires a, b >= 1 coprime and n >= 0.
TripathiQuantities tripathi_quantities(const Int& a, const Int& b, const Int& n);

// Number of solutions of a*x + b*y = n over non-negative integers:
//   N(a,b;n) = (n + a*a' + b*b') / (a*b) - 1
// The division is always exact; a remainder throws IntegralityError.
// N(a,b;0) = 1 (both residues equal their moduli). Symmetric in a, b.
Int count2(const Int& a, const Int& b, const Int& n);

}  // namespace denum
