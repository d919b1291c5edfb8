#include "denum/closedform.hpp"

#include <string>

namespace denum {

namespace {

void require_n(const Int& n, const char* who) {
  if (n < 0) {
    throw std::invalid_argument(std::string(who) + ": n must be >= 0, got " + n.get_str());
  }
}

Int triangular_step(const Int& a3) {
  return (a3 - 1) * (a3 - 2) / 2;  // product of consecutive integers, exact
}

}  // namespace

FibQuantities fib_quantities(SeqIndex i, const Int& n) {
  if (i < 3) {
    throw UnsupportedIndexError("fib_quantities: index must be >= 3 (needs F_{i-2}), got " +
                                std::to_string(i));
  }
  require_n(n, "fib_quantities");
  const Int fi = fib(i), fi1 = fib(i + 1), fi2 = fib(i + 2);
  const Int sn = i % 2 == 0 ? n : Int(-n);

  FibQuantities q;
  q.b1 = rep1m(sn * fib(i - 2), fi);
  q.c2 = rep1m(sn * fi, fi1);
  q.a3 = rep1m(sn * fi1, fi2);
  q.n2 = n * (n + fi + fi1 + fi2)
       + fi2 * fi1 * q.b1 * (fi + 1 - (q.b1 - 1))
       + fi * fi2 * q.c2 * (fi1 + 1 - (q.c2 - 1))
       + fi1 * fi * q.a3 * (fi2 + 1 - (fi2 - 1) * (q.a3 - 1));
  return q;
}

Int count_fib(SeqIndex i, const Int& n) {
  const FibQuantities q = fib_quantities(i, n);
  const Int count = exact_div(q.n2, 2 * fib(i) * fib(i + 1) * fib(i + 2), "count_fib")
                  + triangular_step(q.a3) - 2;
  if (count < 0) {
    throw IntegralityError("count_fib: negative count for i=" + std::to_string(i) +
                           ", n=" + n.get_str());
  }
  return count;
}

LucasQuantities lucas_quantities(SeqIndex i, const Int& n) {
  if (i < 2) {
    throw UnsupportedIndexError("lucas_quantities: index must be >= 2 (needs L_{i-2}), got " +
                                std::to_string(i));
  }
  require_n(n, "lucas_quantities");
  const Int li = lucas(i), li1 = lucas(i + 1), li2 = lucas(i + 2);
  const Int sn = i % 2 == 0 ? Int(-n) : n;  // (-1)^(i+1) * n

  LucasQuantities q;
  q.b1 = rep1m(sn * lucas(i - 2) * inv5_mod_lucas(i), li);
  q.c2 = rep1m(sn * li * inv5_mod_lucas(i + 1), li1);
  q.a3 = rep1m(sn * li1 * inv5_mod_lucas(i + 2), li2);
  q.n3 = n * (n + li + li1 + li2)
       + li2 * li1 * q.b1 * (li + 1 - (q.b1 - 1))
       + li * li2 * q.c2 * (li1 + 1 - (q.c2 - 1))
       + li1 * li * q.a3 * (li2 + 1 - (li2 - 1) * (q.a3 - 1));
  return q;
}

Int count_lucas(SeqIndex i, const Int& n) {
  const LucasQuantities q = lucas_quantities(i, n);
  const Int count = exact_div(q.n3, 2 * lucas(i) * lucas(i + 1) * lucas(i + 2), "count_lucas")
                  + triangular_step(q.a3) - 2;
  if (count < 0) {
    throw IntegralityError("count_lucas: negative count for i=" + std::to_string(i) +
                           ", n=" + n.get_str());
  }
  return count;
}

}  // namespace denum
