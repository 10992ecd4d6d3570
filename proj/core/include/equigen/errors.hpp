#pragma once

#include <stdexcept>
#include <string>

namespace equigen {

// Caller passed arguments that violate an operation's contract (wrong
// variable set, unknown variable, malformed input, b divisible by a, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical precondition does not hold at the supplied data, e.g. a
// singular Jacobian where condition (T) is required.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A caller-supplied perturbation term does not have the admissible shape.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Two independent computations of the same quantity disagreed.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace equigen
