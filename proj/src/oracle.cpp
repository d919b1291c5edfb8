#include "denum/oracle.hpp"

#include <string>

namespace denum {

namespace {

void require_inputs(const std::vector<Int>& coeffs, const Int& n) {
  if (coeffs.empty()) {
    throw std::invalid_argument("oracle: coefficient list must be non-empty");
  }
  for (const Int& c : coeffs) {
    if (c < 1) {
      throw std::invalid_argument("oracle: coefficients must be >= 1, got " + c.get_str());
    }
  }
  if (n < 0) {
    throw std::invalid_argument("oracle: n must be >= 0, got " + n.get_str());
  }
}

void require_budget(const std::vector<Int>& coeffs, const Int& n, const BruteOptions& opts) {
  Int estimate = 1;
  for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) {
    estimate *= n / coeffs[k] + 1;
    if (estimate > opts.max_iterations) {
      throw ResourceError("brute_count: estimated enumeration of " + estimate.get_str() +
                          "+ iterations exceeds the budget of " +
                          std::to_string(opts.max_iterations) + "; use dp_count instead");
    }
  }
}

struct TupleSink {
  std::vector<std::vector<Int>>* out = nullptr;
  std::size_t cap = 0;
  bool truncated = false;
};

// Enumerates x_idx, ..., x_{k-1} with `rem` left to spend; the last
// coefficient is resolved by divisibility instead of a loop. T is either
// Int or a machine word, chosen by the caller so the hot loop stays cheap.
template <typename T>
void enumerate(const std::vector<T>& coeffs, std::size_t idx, const T& rem, std::vector<T>& tuple,
               Int& count, TupleSink* sink) {
  if (idx + 1 == coeffs.size()) {
    if (rem % coeffs[idx] == 0) {
      ++count;
      if (sink != nullptr) {
        if (sink->out->size() < sink->cap) {
          tuple[idx] = rem / coeffs[idx];
          std::vector<Int> solution(tuple.begin(), tuple.end());
          sink->out->push_back(std::move(solution));
        } else {
          sink->truncated = true;
        }
      }
    }
    return;
  }
  T left = rem;
  for (T x = 0; left >= 0; ++x, left -= coeffs[idx]) {
    tuple[idx] = x;
    enumerate(coeffs, idx + 1, left, tuple, count, sink);
  }
}

Int brute_impl(const std::vector<Int>& coeffs, const Int& n, TupleSink* sink) {
  Int count = 0;
  bool small = n.fits_slong_p();
  for (const Int& c : coeffs) {
    small = small && c.fits_slong_p();
  }
  if (small) {
    std::vector<long> words;
    words.reserve(coeffs.size());
    for (const Int& c : coeffs) {
      words.push_back(c.get_si());
    }
    std::vector<long> tuple(coeffs.size(), 0);
    enumerate<long>(words, 0, n.get_si(), tuple, count, sink);
  } else {
    std::vector<Int> tuple(coeffs.size(), Int(0));
    enumerate<Int>(coeffs, 0, n, tuple, count, sink);
  }
  return count;
}

}  // namespace

Int brute_count(const std::vector<Int>& coeffs, const Int& n, const BruteOptions& opts) {
  require_inputs(coeffs, n);
  require_budget(coeffs, n, opts);
  return brute_impl(coeffs, n, nullptr);
}

BruteListing brute_enumerate(const std::vector<Int>& coeffs, const Int& n,
                             std::size_t max_tuples, const BruteOptions& opts) {
  require_inputs(coeffs, n);
  require_budget(coeffs, n, opts);
  BruteListing listing;
  TupleSink sink;
  sink.out = &listing.tuples;
  sink.cap = max_tuples;
  listing.total = brute_impl(coeffs, n, &sink);
  listing.truncated = sink.truncated;
  return listing;
}

std::vector<Int> dp_table(const std::vector<Int>& coeffs, std::int64_t n_max,
                          const DpOptions& opts) {
  require_inputs(coeffs, Int(n_max));
  const std::uint64_t entries = static_cast<std::uint64_t>(n_max) + 1;
  if (entries > opts.max_table_entries) {
    throw ResourceError("dp_count: table of " + std::to_string(entries) +
                        " entries exceeds the budget of " +
                        std::to_string(opts.max_table_entries) + " entries");
  }
  std::vector<Int> dp(static_cast<std::size_t>(n_max) + 1);
  dp[0] = 1;
  for (const Int& c : coeffs) {
    if (c > n_max) {
      continue;  // only x = 0 is feasible for this coefficient
    }
    const std::int64_t step = c.get_si();
    for (std::int64_t v = step; v <= n_max; ++v) {
      dp[static_cast<std::size_t>(v)] += dp[static_cast<std::size_t>(v - step)];
    }
  }
  return dp;
}

Int dp_count(const std::vector<Int>& coeffs, const Int& n, const DpOptions& opts) {
  require_inputs(coeffs, n);
  if (!n.fits_slong_p() ||
      static_cast<std::uint64_t>(n.get_si()) + 1 > opts.max_table_entries) {
    throw ResourceError("dp_count: table of n+1 = " + Int(n + 1).get_str() +
                        " entries exceeds the budget of " +
                        std::to_string(opts.max_table_entries) + " entries");
  }
  return dp_table(coeffs, n.get_si(), opts).back();
}

}  // namespace denum
