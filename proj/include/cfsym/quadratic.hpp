#pragma once

#include "cfsym/dyadic.hpp"
#include "cfsym/rigorous_real.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace cfsym {

/// Irrational quadratic number (P + sqrt(D)) / Q in canonical form:
/// D > 0 is not a perfect square, Q != 0 divides D - P^2, and
/// gcd(P, Q, (D - P^2) / Q) = 1. Two surds with the same value have
/// identical fields.
class QuadraticSurd {
 public:
  /// Throws DomainError if D is not a positive non-square or Q == 0.
  QuadraticSurd(BigInt p, BigInt d, BigInt q);

  const BigInt& p() const { return p_; }
  const BigInt& d() const { return d_; }
  const BigInt& q() const { return q_; }

  RigorousReal enclose(int bits) const;
  double to_double() const;
  std::string to_string() const;

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

 private:
  BigInt p_;
  BigInt d_;
  BigInt q_;
};

/// Exact floor via integer square-root bounds on sqrt(D).
BigInt floor_checked(const QuadraticSurd& x);

/// 1/x - a, normalized. One step of the Gauss map when a = floor(1/x).
QuadraticSurd surd_recip_shift(const QuadraticSurd& x, const BigInt& a);

/// Element a + b*sqrt(D) of a real quadratic field, rational when b == 0.
/// This is the working type for exact arithmetic between surds; values from
/// different fields combine only when their radicands differ by a rational
/// square factor.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(const BigRational& rational);  // NOLINT(implicit)
  QuadraticNumber(long v) : QuadraticNumber(BigRational(v)) {}  // NOLINT(implicit)
  QuadraticNumber(const QuadraticSurd& s);  // NOLINT(implicit)
  /// a + b*sqrt(d); d must be a positive non-square when b != 0.
  QuadraticNumber(BigRational a, BigRational b, BigInt d);

  const BigRational& rational_part() const { return a_; }
  const BigRational& radical_coefficient() const { return b_; }
  const BigInt& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  /// Throws DomainError when rational.
  QuadraticSurd to_surd() const;

  int sign() const;
  BigInt floor() const;
  RigorousReal enclose(int bits) const;
  double to_double() const;
  std::string to_string() const;

  /// Sum/product etc. return nullopt when the operands live in different
  /// quadratic fields.
  static std::optional<QuadraticNumber> add(const QuadraticNumber& x, const QuadraticNumber& y);
  static std::optional<QuadraticNumber> mul(const QuadraticNumber& x, const QuadraticNumber& y);
  /// Throws DomainError on zero.
  QuadraticNumber reciprocal() const;
  QuadraticNumber negated() const;

  /// Square root inside the field (or of a rational, giving a new surd).
  /// nullopt when the root is not in Q(sqrt(D)). Throws DomainError when
  /// negative.
  std::optional<QuadraticNumber> sqrt() const;

  /// Value equality (representations over different radicands compare by value).
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y);

 private:
  BigRational a_{0};
  BigRational b_{0};
  BigInt d_{0};
};

bool is_perfect_square(const BigInt& v);
BigInt isqrt(const BigInt& v);

}  // namespace cfsym
