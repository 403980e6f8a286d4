#pragma once

#include "cfsym/quadratic.hpp"
#include "cfsym/rigorous_real.hpp"

#include <string>
#include <variant>

namespace cfsym {

/// Default working precision for exact values that fall back to intervals.
inline constexpr int kDefaultBits = 128;

/// A real number carried either exactly (rational or quadratic surd) or as a
/// rigorous enclosure. Arithmetic stays exact while both operands are exact
/// and share a quadratic field; otherwise it falls back to interval
/// arithmetic at the larger of the operands' precisions.
class Real {
 public:
  Real(QuadraticNumber exact, int bits = kDefaultBits);  // NOLINT(implicit)
  Real(const QuadraticSurd& exact, int bits = kDefaultBits);  // NOLINT(implicit)
  Real(RigorousReal enclosure);  // NOLINT(implicit)
  Real(long v) : Real(QuadraticNumber(v)) {}  // NOLINT(implicit)

  static Real rational(const BigRational& q, int bits = kDefaultBits) {
    return Real(QuadraticNumber(q), bits);
  }

  bool is_exact() const { return std::holds_alternative<QuadraticNumber>(value_); }
  /// nullptr for enclosures.
  const QuadraticNumber* exact() const { return std::get_if<QuadraticNumber>(&value_); }
  /// Exact values are enclosed at `bits`; enclosures are returned as is.
  RigorousReal enclose(int bits) const;
  RigorousReal enclose() const { return enclose(bits_); }
  int precision() const { return bits_; }
  Real with_precision(int bits) const;

  /// Certified sign: -1, 0 or +1, or nullopt when the enclosure straddles 0.
  std::optional<int> sign() const;
  BigInt floor_checked() const;
  double to_double() const;
  std::string to_string(int frac_digits = 20) const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

 private:
  std::variant<QuadraticNumber, RigorousReal> value_;
  int bits_;
};

Real sqrt(const Real& a);
Real abs(const Real& a);

/// a < b provable from the representations.
bool certainly_less(const Real& a, const Real& b);
/// Both sides compare equal exactly, or their enclosures overlap.
bool consistent(const Real& a, const Real& b);
/// Exact intersection when both are exact (throws CrossCheckFailure if they
/// differ), interval intersection otherwise (throws if disjoint).
Real intersect_checked(const Real& a, const Real& b, const std::string& what);

/// Smallest multiple of 10^-digits that is >= the value, as decimal text.
/// Throws InsufficientPrecision when the enclosure does not determine it.
std::string certified_ceil_decimal(const Real& x, int digits);

}  // namespace cfsym
