#pragma once

#include "denum/arith.hpp"

namespace denum {

// The six residues and the polynomial part of Binner's three-variable
// formula. All residues use the [1, m] convention; n1 is signed and
// quadratic in n.
struct BinnerQuantities {
  Int b1p;  // == -n * b^{-1} (mod a), in [1, a]
  Int c1p;  // ==  b * c^{-1} (mod a), in [1, a]
  Int c2p;  // == -n * c^{-1} (mod b), in [1, b]
  Int a2p;  // ==  c * a^{-1} (mod b), in [1, b]
  Int a3p;  // == -n * a^{-1} (mod c), in [1, c]
  Int b3p;  // ==  a * b^{-1} (mod c), in [1, c]
  Int n1;
};

// Requires a, b, c >= 1 pairwise coprime and n >= 0.
BinnerQuantities binner_quantities(const Int& a, const Int& b, const Int& c, const Int& n);

// sum_{i=1}^{upper} floor(i*num/den) by literal summation. Linear in
// upper; kept as the oracle the fast version is checked against and for
// the CLI's direct-sums method.
Int floor_sum_direct(const Int& upper, const Int& num, const Int& den);

// Same sum via Euclidean-style reduction, O(log min(num, den)) steps.
Int floor_sum_fast(const Int& upper, const Int& num, const Int& den);

struct ReciprocitySides {
  Int lhs;
  Int rhs;
};

// Both sides of the floor-sum reciprocity identity
//   sum_{i=1}^{b} floor(ic/a) + sum_{i=1}^{K} floor(ia/c) = b*K,
// with K = floor(bc/a), for b < a, c < a, gcd(a, c) = 1, all >= 1.
// Returned unassembled so callers can assert lhs == rhs themselves.
ReciprocitySides reciprocity_sides(const Int& a, const Int& b, const Int& c);

enum class FloorSumMode { fast, direct };

// Number of solutions of a*x + b*y + c*z = n over non-negative integers,
// for pairwise coprime a, b, c and n >= 0:
//   N(a,b,c;n) = n1/(2abc) + S1 + S2 + S3 - 2
// with the three floor sums taken over the residues above. The division
// is always exact; a remainder throws IntegralityError. N(a,b,c;0) = 1.
Int count3(const Int& a, const Int& b, const Int& c, const Int& n,
           FloorSumMode mode = FloorSumMode::fast);

}  // namespace denum
