#pragma once

#include <stdexcept>
#include <string>

namespace revlex {

/// Malformed caller input: length mismatches, unparsable text.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numeric argument lies outside its admissible range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A 0/1 point that is not a vertex of the polytope it was queried against.
class MembershipError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation was called on a polytope that violates its hypothesis,
/// e.g. a facet description of a non-full-dimensional polytope.
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// (d, n) is outside d + 1 <= n <= 2^d.
class AdmissibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The request exceeds a configured size cap (brute force, audit, materialization).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace revlex
