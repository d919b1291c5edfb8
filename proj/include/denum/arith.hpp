#pragma once

#include <gmpxx.h>

#include "denum/errors.hpp"

namespace denum {

// Counts, residues and the N1/N2/N3 intermediates are exact signed
// integers; the intermediates grow quadratically in n and may be
// negative, so machine words are not an option anywhere in the formulas.
using Int = mpz_class;

struct EgcdResult {
  Int g;  // gcd(a, b), always positive
  Int x;
  Int y;  // a*x + b*y == g
};

// Extended Euclidean algorithm for a, b >= 0, not both zero.
EgcdResult egcd(const Int& a, const Int& b);

// gcd(a, b) for any signs, non-negative result.
Int gcd_int(const Int& a, const Int& b);

// Representative of x modulo m in [1, m]: multiples of m map to m, never
// to 0. Every primed residue in the counting formulas lives in [1, m],
// so language-default remainder semantics must not leak in anywhere.
Int rep1m(const Int& x, const Int& m);

// Inverse of a modulo m as a [1, m] representative; m == 1 yields 1.
// Throws NotInvertibleError when gcd(a, m) != 1.
Int mod_inv(const Int& a, const Int& m);

// True floor of p/q for q > 0 (rounds toward -inf for negative p).
Int floor_div(const Int& p, const Int& q);

// num/den when the division is known to be exact; a nonzero remainder
// throws IntegralityError with `context` in the message.
Int exact_div(const Int& num, const Int& den, const char* context);

}  // namespace denum
