#pragma once

#include <cstdint>
#include <vector>

#include "denum/arith.hpp"

namespace denum {

// Ground-truth counters for sum_k coeffs[k] * x_k = n. Valid for any
// positive coefficients, coprime or not, and any n >= 0. These are the
// arbiters for every golden value; the formula modules are never their
// own ground truth.

struct BruteOptions {
  // Ceiling on the estimated enumeration size (loop iterations over all
  // but the last coefficient).
  std::uint64_t max_iterations = 100'000'000;
};

// Exact count by nested enumeration of all non-negative tuples.
// Throws ResourceError when the estimate exceeds the budget.
Int brute_count(const std::vector<Int>& coeffs, const Int& n, const BruteOptions& opts = {});

struct BruteListing {
  std::vector<std::vector<Int>> tuples;  // lexicographic in (x_1, ..., x_k)
  Int total;                             // exact count, even when truncated
  bool truncated = false;
};

// The solutions themselves, keeping at most max_tuples of them.
BruteListing brute_enumerate(const std::vector<Int>& coeffs, const Int& n,
                             std::size_t max_tuples = 10'000, const BruteOptions& opts = {});

struct DpOptions {
  // The table stores one exact integer per value in [0, n]; this caps
  // its length and therefore the memory the oracle may claim.
  std::uint64_t max_table_entries = 10'000'000;
};

// Same count as the coefficient of q^n in prod_k 1/(1 - q^{coeffs[k]}),
// by the unbounded-knapsack recurrence (coefficients outer, values
// inner), storing exact integers. O(k*n) time.
Int dp_count(const std::vector<Int>& coeffs, const Int& n, const DpOptions& opts = {});

// Counts for every value in [0, n_max] at once; much cheaper than
// n_max+1 separate dp_count calls when sweeping a grid.
std::vector<Int> dp_table(const std::vector<Int>& coeffs, std::int64_t n_max,
                          const DpOptions& opts = {});

}  // namespace denum
