#pragma once

#include <stdexcept>

namespace denum {

// An exact-division step in a counting formula left a remainder, or a
// formula produced a negative count. Valid inputs cannot trigger this;
// it signals an implementation bug, never a user error.
struct IntegralityError : std::logic_error {
  using std::logic_error::logic_error;
};

// Modular inverse requested for non-coprime operands.
struct NotInvertibleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Coefficients fail a (pairwise) coprimality precondition.
struct NotCoprimeError : std::domain_error {
  using std::domain_error::domain_error;
};

// Sequence index below the smallest value a closed form supports.
struct UnsupportedIndexError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Work or memory ceiling would be exceeded; raised before any partial
// computation happens.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace denum
