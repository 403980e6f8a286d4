#include "cfsym/rigorous_real.hpp"

#include "cfsym/errors.hpp"
#include "cfsym/precision.hpp"

#include <algorithm>
#include <array>

namespace cfsym {

void PrecisionContext::validate() const {
  if (initial_bits < 2) throw DomainError("initial_bits must be at least 2");
  if (max_bits < initial_bits) throw DomainError("initial_bits must not exceed max_bits");
  if (growth_factor < 2) throw DomainError("growth_factor must be at least 2");
}

RigorousReal::RigorousReal(const Dyadic& point, int bits)
    : lower_(point), upper_(point), bits_(bits) {}

RigorousReal::RigorousReal(const Dyadic& lower, const Dyadic& upper, int bits)
    : lower_(lower), upper_(upper), bits_(bits) {
  if (upper_ < lower_) throw DomainError("interval with lower > upper");
}

RigorousReal RigorousReal::from_integer(const BigInt& v, int bits) {
  return RigorousReal(Dyadic(v, 0), bits);
}

RigorousReal RigorousReal::from_rational(const BigRational& q, int bits) {
  return from_rational_bounds(q, q, bits);
}

RigorousReal RigorousReal::from_rational_bounds(const BigRational& lower,
                                                const BigRational& upper, int bits) {
  return RigorousReal(Dyadic::from_rational(lower, bits, Round::down),
                      Dyadic::from_rational(upper, bits, Round::up), bits);
}

Dyadic RigorousReal::midpoint() const {
  auto sum = lower_ + upper_;
  return Dyadic(sum.mantissa(), sum.exponent() - 1);
}

bool RigorousReal::contains(const BigRational& q) const {
  return lower_.to_rational() <= q && q <= upper_.to_rational();
}

bool RigorousReal::contains(const RigorousReal& other) const {
  return lower_ <= other.lower_ && other.upper_ <= upper_;
}

RigorousReal RigorousReal::with_precision(int bits) const {
  return RigorousReal(lower_.rounded(bits, Round::down), upper_.rounded(bits, Round::up), bits);
}

bool RigorousReal::relative_width_below(int bits) const {
  Dyadic mag = std::max(lower_.sign() < 0 ? -lower_ : lower_, upper_.sign() < 0 ? -upper_ : upper_);
  if (mag < Dyadic(1)) mag = Dyadic(1);
  return width() <= mag * Dyadic(BigInt(1), -bits);
}

RigorousReal operator+(const RigorousReal& a, const RigorousReal& b) {
  int bits = std::max(a.bits_, b.bits_);
  return RigorousReal((a.lower_ + b.lower_).rounded(bits, Round::down),
                      (a.upper_ + b.upper_).rounded(bits, Round::up), bits);
}

RigorousReal operator-(const RigorousReal& a, const RigorousReal& b) {
  int bits = std::max(a.bits_, b.bits_);
  return RigorousReal((a.lower_ - b.upper_).rounded(bits, Round::down),
                      (a.upper_ - b.lower_).rounded(bits, Round::up), bits);
}

RigorousReal operator-(const RigorousReal& a) { return RigorousReal(-a.upper_, -a.lower_, a.bits_); }

RigorousReal operator*(const RigorousReal& a, const RigorousReal& b) {
  int bits = std::max(a.bits_, b.bits_);
  std::array<Dyadic, 4> p{a.lower_ * b.lower_, a.lower_ * b.upper_, a.upper_ * b.lower_,
                          a.upper_ * b.upper_};
  auto [lo, hi] = std::minmax_element(p.begin(), p.end());
  return RigorousReal(lo->rounded(bits, Round::down), hi->rounded(bits, Round::up), bits);
}

RigorousReal operator/(const RigorousReal& a, const RigorousReal& b) {
  if (b.lower_.sign() <= 0 && b.upper_.sign() >= 0)
    throw DomainError("division by an enclosure containing zero");
  int bits = std::max(a.bits_, b.bits_);
  std::array<Dyadic, 4> lo{
      Dyadic::quotient(a.lower_, b.lower_, bits, Round::down),
      Dyadic::quotient(a.lower_, b.upper_, bits, Round::down),
      Dyadic::quotient(a.upper_, b.lower_, bits, Round::down),
      Dyadic::quotient(a.upper_, b.upper_, bits, Round::down)};
  std::array<Dyadic, 4> hi{
      Dyadic::quotient(a.lower_, b.lower_, bits, Round::up),
      Dyadic::quotient(a.lower_, b.upper_, bits, Round::up),
      Dyadic::quotient(a.upper_, b.lower_, bits, Round::up),
      Dyadic::quotient(a.upper_, b.upper_, bits, Round::up)};
  return RigorousReal(*std::min_element(lo.begin(), lo.end()),
                      *std::max_element(hi.begin(), hi.end()), bits);
}

std::string RigorousReal::to_string(int frac_digits) const {
  return "[" + lower_.to_decimal(frac_digits, Round::down) + ", " +
         upper_.to_decimal(frac_digits, Round::up) + "]";
}

RigorousReal sqrt(const RigorousReal& a) {
  if (a.lower().sign() < 0) throw DomainError("square root of a possibly negative enclosure");
  int bits = a.precision();
  return RigorousReal(Dyadic::sqrt(a.lower(), bits, Round::down),
                      Dyadic::sqrt(a.upper(), bits, Round::up), bits);
}

RigorousReal abs(const RigorousReal& a) {
  if (a.lower().sign() >= 0) return a;
  if (a.upper().sign() <= 0) return -a;
  return RigorousReal(Dyadic(), std::max(-a.lower(), a.upper()), a.precision());
}

std::optional<RigorousReal> intersect(const RigorousReal& a, const RigorousReal& b) {
  Dyadic lo = std::max(a.lower(), b.lower());
  Dyadic hi = std::min(a.upper(), b.upper());
  if (hi < lo) return std::nullopt;
  return RigorousReal(lo, hi, std::max(a.precision(), b.precision()));
}

bool overlaps(const RigorousReal& a, const RigorousReal& b) { return intersect(a, b).has_value(); }

bool certainly_less(const RigorousReal& a, const RigorousReal& b) { return a.upper() < b.lower(); }
bool certainly_positive(const RigorousReal& a) { return a.lower().sign() > 0; }
bool certainly_negative(const RigorousReal& a) { return a.upper().sign() < 0; }

BigInt floor_checked(const RigorousReal& x) {
  BigInt lo = x.lower().floor();
  BigInt hi = x.upper().floor();
  if (lo != hi)
    throw InsufficientPrecision("enclosure " + x.to_string(8) + " straddles an integer");
  return lo;
}

RigorousReal mobius(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                    const RigorousReal& x, int bits) {
  BigRational lo = x.lower().to_rational();
  BigRational hi = x.upper().to_rational();
  BigRational den_lo = c * lo + d;
  BigRational den_hi = c * hi + d;
  if (sgn(den_lo) * sgn(den_hi) <= 0) throw DomainError("mobius pole inside the enclosure");
  BigRational f_lo = (a * lo + b) / den_lo;
  BigRational f_hi = (a * hi + b) / den_hi;
  if (f_hi < f_lo) std::swap(f_lo, f_hi);
  return RigorousReal::from_rational_bounds(f_lo, f_hi, bits);
}

}  // namespace cfsym
