#include "denum/binner3.hpp"

#include <cstdint>
#include <utility>

namespace denum {

namespace {

void require_floor_sum_args(const Int& upper, const Int& num, const Int& den) {
  if (upper < 0) {
    throw std::invalid_argument("floor_sum: upper bound must be >= 0, got " + upper.get_str());
  }
  if (num < 0) {
    throw std::invalid_argument("floor_sum: numerator must be >= 0, got " + num.get_str());
  }
  if (den < 1) {
    throw std::invalid_argument("floor_sum: denominator must be >= 1, got " + den.get_str());
  }
}

Int u128_to_int(unsigned __int128 v) {
  Int hi(static_cast<unsigned long>(v >> 64));
  return (hi << 64) + static_cast<unsigned long>(v & ~0ULL);
}

}  // namespace

BinnerQuantities binner_quantities(const Int& a, const Int& b, const Int& c, const Int& n) {
  if (a < 1 || b < 1 || c < 1) {
    throw std::invalid_argument("binner_quantities: coefficients must be >= 1 (a=" +
                                a.get_str() + ", b=" + b.get_str() + ", c=" + c.get_str() + ")");
  }
  if (n < 0) {
    throw std::invalid_argument("binner_quantities: n must be >= 0, got " + n.get_str());
  }
  const std::pair<const Int*, const Int*> pairs[3] = {{&a, &b}, {&a, &c}, {&b, &c}};
  for (const auto& [p, q] : pairs) {
    const Int g = gcd_int(*p, *q);
    if (g != 1) {
      throw NotCoprimeError("binner_quantities: coefficients must be pairwise coprime, gcd(" +
                            p->get_str() + ", " + q->get_str() + ") = " + g.get_str());
    }
  }

  BinnerQuantities r;
  r.b1p = rep1m(-n * mod_inv(b, a), a);
  r.c1p = rep1m(b * mod_inv(c, a), a);
  r.c2p = rep1m(-n * mod_inv(c, b), b);
  r.a2p = rep1m(c * mod_inv(a, b), b);
  r.a3p = rep1m(-n * mod_inv(a, c), c);
  r.b3p = rep1m(a * mod_inv(b, c), c);
  r.n1 = n * (n + a + b + c)
       + c * b * r.b1p * (a + 1 - r.c1p * (r.b1p - 1))
       + a * c * r.c2p * (b + 1 - r.a2p * (r.c2p - 1))
       + b * a * r.a3p * (c + 1 - r.b3p * (r.a3p - 1));
  return r;
}

Int floor_sum_direct(const Int& upper, const Int& num, const Int& den) {
  require_floor_sum_args(upper, num, den);

  // Word-sized path whenever i*num cannot overflow a signed 64-bit term.
  if (upper.fits_slong_p() && num.fits_slong_p() && den.fits_slong_p()) {
    const std::int64_t u = upper.get_si();
    const std::int64_t nm = num.get_si();
    const std::int64_t d = den.get_si();
    if (nm == 0 || u <= INT64_MAX / nm) {
      unsigned __int128 acc = 0;
      for (std::int64_t i = 1; i <= u; ++i) {
        acc += static_cast<std::uint64_t>(i * nm / d);
      }
      return u128_to_int(acc);
    }
  }

  Int acc = 0;
  for (Int i = 1; i <= upper; ++i) {
    acc += i * num / den;
  }
  return acc;
}

Int floor_sum_fast(const Int& upper, const Int& num, const Int& den) {
  require_floor_sum_args(upper, num, den);

  // sum_{i=1}^{upper} floor(i*num/den) == sum_{i=0}^{n-1} floor((a*i+b)/m)
  // with n = upper+1, m = den, a = num, b = 0. Each round peels the
  // whole multiples of m out of a and b, then swaps the roles of the
  // lattice axes, shrinking (m, a) like the Euclidean algorithm.
  Int n = upper + 1, m = den, a = num, b = 0, acc = 0;
  while (true) {
    if (a >= m) {
      acc += (n - 1) * n / 2 * (a / m);
      a %= m;
    }
    if (b >= m) {
      acc += n * (b / m);
      b %= m;
    }
    Int y = a * n + b;
    if (y < m) {
      return acc;
    }
    n = y / m;
    b = y % m;
    std::swap(m, a);
  }
}

ReciprocitySides reciprocity_sides(const Int& a, const Int& b, const Int& c) {
  if (a < 1 || b < 1 || c < 1) {
    throw std::invalid_argument("reciprocity_sides: all arguments must be >= 1 (a=" +
                                a.get_str() + ", b=" + b.get_str() + ", c=" + c.get_str() + ")");
  }
  if (b >= a) {
    throw std::invalid_argument("reciprocity_sides: requires b < a (b=" + b.get_str() +
                                ", a=" + a.get_str() + ")");
  }
  if (c >= a) {
    throw std::invalid_argument("reciprocity_sides: requires c < a (c=" + c.get_str() +
                                ", a=" + a.get_str() + ")");
  }
  const Int g = gcd_int(a, c);
  if (g != 1) {
    throw std::invalid_argument("reciprocity_sides: requires gcd(a, c) = 1, gcd(" +
                                a.get_str() + ", " + c.get_str() + ") = " + g.get_str());
  }
  const Int k = floor_div(b * c, a);
  ReciprocitySides sides;
  sides.lhs = floor_sum_fast(b, c, a) + floor_sum_fast(k, a, c);
  sides.rhs = b * k;
  return sides;
}

Int count3(const Int& a, const Int& b, const Int& c, const Int& n, FloorSumMode mode) {
  const BinnerQuantities q = binner_quantities(a, b, c, n);
  auto sum = (mode == FloorSumMode::fast) ? floor_sum_fast : floor_sum_direct;
  const Int count = exact_div(q.n1, 2 * a * b * c, "count3")
                  + sum(q.b1p - 1, q.c1p, a)
                  + sum(q.c2p - 1, q.a2p, b)
                  + sum(q.a3p - 1, q.b3p, c)
                  - 2;
  if (count < 0) {
    throw IntegralityError("count3: negative count for a=" + a.get_str() + ", b=" + b.get_str() +
                           ", c=" + c.get_str() + ", n=" + n.get_str());
  }
  return count;
}

}  // namespace denum
