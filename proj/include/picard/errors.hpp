#pragma once

#include <stdexcept>
#include <string>

namespace picard {

/// Malformed or inconsistent arguments: dimension mismatches, maps that are
/// not well defined on the quotient, chain maps whose squares do not commute.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is not defined on this input (enumerating an infinite group,
/// a brute-force oracle past its size guard, a non-free resolution source).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A pair of chain maps fails the extension conditions.
class NotAnExtension : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comparing extension classes that live in different presentations of Ext^1.
class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Something the theory guarantees did not happen. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace picard
