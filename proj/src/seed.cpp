#include "cfsym/seed.hpp"

#include "cfsym/errors.hpp"

#include <cctype>
#include <climits>
#include <cmath>

namespace cfsym {

DecimalLiteral DecimalLiteral::parse(std::string_view text) {
  DecimalLiteral lit;
  lit.text = std::string(text);
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  std::string digits;
  int frac = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_point) ++frac;
    } else {
      throw DomainError("malformed decimal literal '" + lit.text + "'");
    }
  }
  if (!seen_digit) throw DomainError("malformed decimal literal '" + lit.text + "'");

  auto first = digits.find_first_not_of('0');
  lit.significant_digits =
      first == std::string::npos ? 0 : static_cast<int>(digits.size() - first);

  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(frac));
  BigInt num(digits, 10);
  if (negative) num = -num;
  lit.center = BigRational(num, scale);
  lit.center.canonicalize();
  lit.radius = BigRational(BigInt(1), scale);
  lit.radius.canonicalize();
  return lit;
}

Seed Seed::surd(const QuadraticSurd& x) {
  QuadraticNumber v(x);
  if (v.sign() <= 0 || QuadraticNumber::add(v, QuadraticNumber(-1))->sign() >= 0)
    throw DomainError("seed " + x.to_string() + " is not in (0,1)");
  return Seed(x);
}

Seed Seed::decimal(std::string_view text) { return decimal(DecimalLiteral::parse(text)); }

Seed Seed::decimal(DecimalLiteral literal) {
  if (literal.center - literal.radius <= 0 || literal.center + literal.radius >= 1)
    throw DomainError("decimal seed " + literal.text + " is not certainly inside (0,1)");
  return Seed(std::move(literal));
}

RigorousReal Seed::enclosure(int bits) const {
  if (auto s = exact()) return s->enclose(bits);
  const auto& lit = std::get<DecimalLiteral>(value_);
  return RigorousReal::from_rational_bounds(lit.center - lit.radius, lit.center + lit.radius,
                                            bits);
}

Real Seed::value(int bits) const {
  if (auto s = exact()) return Real(*s, bits);
  return Real(enclosure(bits));
}

int Seed::useful_bits() const {
  if (is_exact()) return INT_MAX;
  const auto& lit = std::get<DecimalLiteral>(value_);
  // Bits needed to resolve the literal's last place, doubled for headroom.
  double ulp_bits = std::log2(10.0) * static_cast<double>(mpz_sizeinbase(lit.radius.get_den().get_mpz_t(), 10));
  return 2 * static_cast<int>(std::ceil(ulp_bits)) + 64;
}

std::string Seed::describe() const {
  if (auto s = exact()) return "surd:" + s->p().get_str() + "," + s->d().get_str() + "," + s->q().get_str();
  return "decimal:" + std::get<DecimalLiteral>(value_).text;
}

}  // namespace cfsym
