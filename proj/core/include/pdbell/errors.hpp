#pragma once

#include <stdexcept>
#include <string>

namespace pdbell {

/// A counting function was called with a negative index.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a request would exceed a documented size cap
/// (enumeration limits, grid bounds). Carries a human-readable cost note.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: unknown family tag, unknown check id, bad number.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Division by a series whose constant term is zero.
class NonUnitDivisorError : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

/// exp() of a series whose constant term is not zero.
class NonZeroConstantError : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

/// Attempt to read a coefficient past the truncation order.
class TruncationError : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

}  // namespace pdbell
