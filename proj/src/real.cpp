#include "cfsym/real.hpp"

#include "cfsym/errors.hpp"

#include <algorithm>

namespace cfsym {

namespace {

template <class ExactOp, class IntervalOp>
Real combine(const Real& a, const Real& b, ExactOp exact_op, IntervalOp interval_op) {
  int bits = std::max(a.precision(), b.precision());
  if (a.is_exact() && b.is_exact()) {
    if (auto r = exact_op(*a.exact(), *b.exact())) return Real(*r, bits);
  }
  return Real(interval_op(a.enclose(bits), b.enclose(bits)));
}

BigInt pow10(int digits) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return r;
}

}  // namespace

Real::Real(QuadraticNumber exact, int bits) : value_(std::move(exact)), bits_(bits) {}
Real::Real(const QuadraticSurd& exact, int bits) : value_(QuadraticNumber(exact)), bits_(bits) {}
Real::Real(RigorousReal enclosure) : value_(enclosure), bits_(enclosure.precision()) {}

RigorousReal Real::enclose(int bits) const {
  if (auto e = exact()) return e->enclose(bits);
  return std::get<RigorousReal>(value_);
}

Real Real::with_precision(int bits) const {
  if (auto e = exact()) return Real(*e, bits);
  return Real(std::get<RigorousReal>(value_).with_precision(bits));
}

std::optional<int> Real::sign() const {
  if (auto e = exact()) return e->sign();
  const auto& r = std::get<RigorousReal>(value_);
  if (certainly_positive(r)) return 1;
  if (certainly_negative(r)) return -1;
  if (r.is_point()) return 0;
  return std::nullopt;
}

BigInt Real::floor_checked() const {
  if (auto e = exact()) return e->floor();
  return cfsym::floor_checked(std::get<RigorousReal>(value_));
}

double Real::to_double() const {
  if (auto e = exact()) return e->to_double();
  return std::get<RigorousReal>(value_).midpoint().to_double();
}

std::string Real::to_string(int frac_digits) const {
  if (auto e = exact()) return e->to_string();
  return std::get<RigorousReal>(value_).to_string(frac_digits);
}

Real operator+(const Real& a, const Real& b) {
  return combine(
      a, b, [](const auto& x, const auto& y) { return QuadraticNumber::add(x, y); },
      [](const auto& x, const auto& y) { return x + y; });
}

Real operator-(const Real& a, const Real& b) { return a + (-b); }

Real operator*(const Real& a, const Real& b) {
  return combine(
      a, b, [](const auto& x, const auto& y) { return QuadraticNumber::mul(x, y); },
      [](const auto& x, const auto& y) { return x * y; });
}

Real operator/(const Real& a, const Real& b) {
  if (auto e = b.exact()) {
    if (e->sign() == 0) throw DomainError("division by zero");
    return a * Real(e->reciprocal(), b.precision());
  }
  return Real(a.enclose(std::max(a.precision(), b.precision())) / b.enclose());
}

Real operator-(const Real& a) {
  if (auto e = a.exact()) return Real(e->negated(), a.precision());
  return Real(-std::get<RigorousReal>(a.value_));
}

Real sqrt(const Real& a) {
  if (auto e = a.exact()) {
    if (auto r = e->sqrt()) return Real(*r, a.precision());
  }
  return Real(sqrt(a.enclose()));
}

Real abs(const Real& a) {
  if (auto e = a.exact()) return e->sign() < 0 ? -a : a;
  return Real(abs(a.enclose()));
}

bool certainly_less(const Real& a, const Real& b) {
  auto s = (b - a).sign();
  return s && *s > 0;
}

bool consistent(const Real& a, const Real& b) {
  if (a.is_exact() && b.is_exact()) return *a.exact() == *b.exact();
  int bits = std::max(a.precision(), b.precision());
  return overlaps(a.enclose(bits), b.enclose(bits));
}

Real intersect_checked(const Real& a, const Real& b, const std::string& what) {
  if (a.is_exact() && b.is_exact()) {
    if (!(*a.exact() == *b.exact()))
      throw CrossCheckFailure(what + ": exact values differ: " + a.to_string() + " vs " +
                              b.to_string());
    return a;
  }
  // An exact side is the tighter answer.
  if (a.is_exact() && overlaps(a.enclose(b.precision()), b.enclose())) return a;
  if (b.is_exact() && overlaps(b.enclose(a.precision()), a.enclose())) return b;
  int bits = std::max(a.precision(), b.precision());
  auto r = intersect(a.enclose(bits), b.enclose(bits));
  if (!r)
    throw CrossCheckFailure(what + ": disjoint enclosures " + a.to_string() + " and " +
                            b.to_string());
  return Real(*r);
}

std::string certified_ceil_decimal(const Real& x, int digits) {
  BigInt scale = pow10(digits);
  BigInt top;
  if (auto e = x.exact()) {
    // ceil(v * 10^d) = -floor(-v * 10^d)
    auto scaled = QuadraticNumber::mul(*e, QuadraticNumber(BigRational(scale)));
    top = -scaled->negated().floor();
  } else {
    auto r = x.enclose();
    BigInt lo = (r.lower() * Dyadic(scale, 0)).ceil();
    BigInt hi = (r.upper() * Dyadic(scale, 0)).ceil();
    if (lo != hi)
      throw InsufficientPrecision("enclosure " + r.to_string(digits + 4) +
                                  " does not determine the " + std::to_string(digits) +
                                  "-decimal upper bound");
    top = hi;
  }
  BigRational q(top, scale);
  q.canonicalize();
  return rational_to_decimal(q, digits, Round::up);
}

}  // namespace cfsym
