#pragma once

#include "cfsym/dyadic.hpp"

#include <optional>
#include <string>

namespace cfsym {

/// Closed interval [lower, upper] with dyadic endpoints that is guaranteed to
/// contain the real number it stands for. Every operation rounds outward to
/// `precision()` significant bits per endpoint.
class RigorousReal {
 public:
  /// Degenerate interval holding an exact dyadic.
  explicit RigorousReal(const Dyadic& point, int bits = 128);
  RigorousReal(const Dyadic& lower, const Dyadic& upper, int bits);

  static RigorousReal from_integer(const BigInt& v, int bits = 128);
  static RigorousReal from_rational(const BigRational& q, int bits);
  static RigorousReal from_rational_bounds(const BigRational& lower, const BigRational& upper,
                                           int bits);

  const Dyadic& lower() const { return lower_; }
  const Dyadic& upper() const { return upper_; }
  int precision() const { return bits_; }
  Dyadic width() const { return upper_ - lower_; }
  Dyadic midpoint() const;
  bool is_point() const { return lower_ == upper_; }

  bool contains(const BigRational& q) const;
  bool contains(const RigorousReal& other) const;

  /// Same enclosure with endpoints rounded outward to `bits`.
  RigorousReal with_precision(int bits) const;

  /// True when `width() <= 2^-bits * max(1, |value|)`.
  bool relative_width_below(int bits) const;

  friend RigorousReal operator+(const RigorousReal& a, const RigorousReal& b);
  friend RigorousReal operator-(const RigorousReal& a, const RigorousReal& b);
  friend RigorousReal operator*(const RigorousReal& a, const RigorousReal& b);
  /// Throws DomainError when the divisor enclosure contains zero.
  friend RigorousReal operator/(const RigorousReal& a, const RigorousReal& b);
  friend RigorousReal operator-(const RigorousReal& a);

  std::string to_string(int frac_digits = 20) const;

 private:
  Dyadic lower_;
  Dyadic upper_;
  int bits_;
};

/// Throws DomainError when the lower endpoint is negative.
RigorousReal sqrt(const RigorousReal& a);
RigorousReal abs(const RigorousReal& a);

/// Intersection, or nullopt when the enclosures are disjoint.
std::optional<RigorousReal> intersect(const RigorousReal& a, const RigorousReal& b);
bool overlaps(const RigorousReal& a, const RigorousReal& b);

bool certainly_less(const RigorousReal& a, const RigorousReal& b);
bool certainly_positive(const RigorousReal& a);
bool certainly_negative(const RigorousReal& a);

/// Floor of the enclosed value. Throws InsufficientPrecision when the
/// enclosure straddles an integer.
BigInt floor_checked(const RigorousReal& x);

/// Image of the enclosure under t -> (a t + b) / (c t + d) evaluated exactly
/// at both endpoints, then rounded outward. The map is monotone away from its
/// pole, so the result is sharp. Throws DomainError when the pole lies in
/// the enclosure.
RigorousReal mobius(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                    const RigorousReal& x, int bits);

}  // namespace cfsym
