#pragma once

#include "cfsym/quadratic.hpp"
#include "cfsym/real.hpp"
#include "cfsym/rigorous_real.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace cfsym {

/// Decimal literal read as an exact rational with an uncertainty of one unit
/// in the last place on either side.
struct DecimalLiteral {
  std::string text;
  BigRational center;
  BigRational radius;
  int significant_digits = 0;

  /// Accepts [-]digits[.digits]. Throws DomainError on malformed text.
  static DecimalLiteral parse(std::string_view text);
};

/// The initial value x_0 in (0,1), irrational. Exact for quadratic surds,
/// an enclosure source for decimal literals.
class Seed {
 public:
  /// Throws DomainError unless 0 < x < 1.
  static Seed surd(const QuadraticSurd& x);
  /// Throws DomainError unless the whole literal enclosure lies in (0,1).
  static Seed decimal(std::string_view text);
  static Seed decimal(DecimalLiteral literal);

  bool is_exact() const { return std::holds_alternative<QuadraticSurd>(value_); }
  const QuadraticSurd* exact() const { return std::get_if<QuadraticSurd>(&value_); }
  const DecimalLiteral* literal() const { return std::get_if<DecimalLiteral>(&value_); }

  /// Outward enclosure of x_0 at `bits` significant bits.
  RigorousReal enclosure(int bits) const;
  /// x_0 as a Real: exact for surds, the enclosure at `bits` otherwise.
  Real value(int bits) const;

  /// Largest precision worth escalating to. Beyond it the literal's own
  /// uncertainty dominates.
  int useful_bits() const;

  std::string describe() const;

 private:
  explicit Seed(std::variant<QuadraticSurd, DecimalLiteral> v) : value_(std::move(v)) {}

  std::variant<QuadraticSurd, DecimalLiteral> value_;
};

/// pi - 3 to 1000 significant digits.
std::string_view pi_minus_3_literal();

}  // namespace cfsym
