#include "denum/denumerant2.hpp"

namespace denum {

TripathiQuantities tripathi_quantities(const Int& a, const Int& b, const Int& n) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("tripathi_quantities: coefficients must be >= 1 (a=" +
                                a.get_str() + ", b=" + b.get_str() + ")");
  }
  if (n < 0) {
    throw std::invalid_argument("tripathi_quantities: n must be >= 0, got " + n.get_str());
  }
  const Int g = gcd_int(a, b);
  if (g != 1) {
    throw NotCoprimeError("tripathi_quantities: coefficients must be coprime, gcd(" +
                          a.get_str() + ", " + b.get_str() + ") = " + g.get_str());
  }
  TripathiQuantities q;
  q.a_prime = rep1m(-n * mod_inv(a, b), b);
  q.b_prime = rep1m(-n * mod_inv(b, a), a);
  return q;
}

Int count2(const Int& a, const Int& b, const Int& n) {
  const TripathiQuantities q = tripathi_quantities(a, b, n);
  const Int count = exact_div(n + a * q.a_prime + b * q.b_prime, a * b, "count2") - 1;
  if (count < 0) {
    throw IntegralityError("count2: negative count for a=" + a.get_str() + ", b=" + b.get_str() +
                           ", n=" + n.get_str());
  }
  return count;
}

}  // namespace denum
