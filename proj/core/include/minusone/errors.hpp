#pragma once

#include <stdexcept>

namespace minusone {

/// Input outside the parameter domain of an operation (alpha <= -1,
/// |x| >= 1, zero Pochhammer denominator, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A banded operator was applied beyond its truncation degree, or a moment
/// index exceeded the stored moment sequence.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An identity that must hold by construction did not (nonzero division
/// remainder, vanishing leading coefficient).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace minusone
