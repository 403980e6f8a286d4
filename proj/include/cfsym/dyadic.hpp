#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace cfsym {

using BigInt = mpz_class;
using BigRational = mpq_class;

enum class Round { down, up };

/// Exact binary rational mantissa * 2^exponent. Trailing zero bits of the
/// mantissa are stripped, so equal values have equal fields.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(const BigInt& mantissa, std::int64_t exponent);
  explicit Dyadic(long value) : Dyadic(BigInt(value), 0) {}

  static Dyadic from_rational(const BigRational& q, int bits, Round dir);
  static Dyadic quotient(const Dyadic& a, const Dyadic& b, int bits, Round dir);
  static Dyadic sqrt(const Dyadic& a, int bits, Round dir);

  const BigInt& mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }
  int sign() const { return sgn(mantissa_); }
  bool is_zero() const { return mantissa_ == 0; }

  /// Mantissa trimmed to at most `bits` significant bits, rounded in `dir`.
  Dyadic rounded(int bits, Round dir) const;

  BigInt floor() const;
  BigInt ceil() const;
  BigRational to_rational() const;
  double to_double() const;

  /// Fixed-point decimal text with `frac_digits` fractional digits, rounded
  /// in `dir`.
  std::string to_decimal(int frac_digits, Round dir) const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a);
  friend bool operator==(const Dyadic& a, const Dyadic& b);
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();

  BigInt mantissa_{0};
  std::int64_t exponent_{0};
};

std::size_t bit_length(const BigInt& v);

/// Decimal text of a rational rounded to `frac_digits` fractional digits.
std::string rational_to_decimal(const BigRational& q, int frac_digits, Round dir);

}  // namespace cfsym
