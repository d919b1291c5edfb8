#include "denum/sequences.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace denum {

namespace {

// Memoized up to the largest index requested so far. Guarded by a mutex;
// callers get copies, so concurrent use is indistinguishable from
// recomputation.
std::mutex fib_mutex;
std::vector<Int> fib_memo{0, 1, 1};  // slot 0 is a seed, never returned

std::mutex lucas_mutex;
std::vector<Int> lucas_memo{2, 1};

}  // namespace

Int fib(SeqIndex i) {
  if (i < 1) {
    throw std::invalid_argument("fib: index must be >= 1 (F_0 is not defined here), got " +
                                std::to_string(i));
  }
  std::lock_guard<std::mutex> lock(fib_mutex);
  while (static_cast<SeqIndex>(fib_memo.size()) <= i) {
    const std::size_t k = fib_memo.size();
    fib_memo.push_back(fib_memo[k - 1] + fib_memo[k - 2]);
  }
  return fib_memo[static_cast<std::size_t>(i)];
}

Int lucas(SeqIndex i) {
  if (i < 0) {
    throw std::invalid_argument("lucas: index must be >= 0, got " + std::to_string(i));
  }
  std::lock_guard<std::mutex> lock(lucas_mutex);
  while (static_cast<SeqIndex>(lucas_memo.size()) <= i) {
    const std::size_t k = lucas_memo.size();
    lucas_memo.push_back(lucas_memo[k - 1] + lucas_memo[k - 2]);
  }
  return lucas_memo[static_cast<std::size_t>(i)];
}

Int fib_inv_next(SeqIndex i) {
  if (i < 3) {
    throw std::invalid_argument("fib_inv_next: index must be >= 3, got " + std::to_string(i));
  }
  const Int fi = fib(i);
  const Int fprev = fib(i - 1);
  return rep1m(i % 2 == 0 ? fprev : Int(-fprev), fi);
}

Int inv5_mod_lucas(SeqIndex i) {
  if (i < 1) {
    throw std::invalid_argument("inv5_mod_lucas: index must be >= 1, got " + std::to_string(i));
  }
  const Int li = lucas(i);
  // Inverse of (L_i mod 5) modulo 5, keyed by i mod 4.
  static const int multiplier[4] = {3, 1, 2, 4};
  const Int v = 1 - multiplier[i % 4] * li;
  return rep1m(exact_div(v, 5, "inv5_mod_lucas"), li);
}

}  // namespace denum
