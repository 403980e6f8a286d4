#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace cfsym {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enclosure is too wide to decide the requested fact (typically a floor
/// that straddles an integer). Retrying with more bits may succeed.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

/// Precision escalation hit its ceiling. `index()` is the expansion index
/// reached before giving up, when known.
class PrecisionExhausted : public Error {
 public:
  explicit PrecisionExhausted(const std::string& what,
                              std::optional<std::size_t> index = std::nullopt)
      : Error(what), index_(index) {}

  std::optional<std::size_t> index() const { return index_; }

 private:
  std::optional<std::size_t> index_;
};

/// Input outside the domain of an operation (division by an enclosure
/// containing zero, square root of a possibly negative value, rational seed).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A point could not be certified inside Omega or Gamma.
class RegionViolation : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class CrossCheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace cfsym
