#include "denum/arith.hpp"

#include <string>

namespace denum {

EgcdResult egcd(const Int& a, const Int& b) {
  if (a < 0 || b < 0) {
    throw std::invalid_argument("egcd: arguments must be non-negative (a=" + a.get_str() +
                                ", b=" + b.get_str() + ")");
  }
  if (a == 0 && b == 0) {
    throw std::invalid_argument("egcd: gcd(0, 0) is undefined");
  }
  EgcdResult r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int rep1m(const Int& x, const Int& m) {
  if (m < 1) {
    throw std::invalid_argument("rep1m: modulus must be >= 1, got " + m.get_str());
  }
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());  // 0 <= r < m
  return r == 0 ? m : r;
}

Int mod_inv(const Int& a, const Int& m) {
  if (m < 1) {
    throw std::invalid_argument("mod_inv: modulus must be >= 1, got " + m.get_str());
  }
  if (m == 1) {
    return 1;
  }
  Int r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t())) {
    throw NotInvertibleError("mod_inv: " + a.get_str() + " is not invertible modulo " +
                             m.get_str());
  }
  return r;  // mpz_invert yields [1, m-1] for m > 1
}

Int floor_div(const Int& p, const Int& q) {
  if (q < 1) {
    throw std::invalid_argument("floor_div: divisor must be >= 1, got " + q.get_str());
  }
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return r;
}

Int exact_div(const Int& num, const Int& den, const char* context) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw IntegralityError(std::string(context) + ": " + den.get_str() +
                           " does not divide " + num.get_str());
  }
  return q;
}

}  // namespace denum
