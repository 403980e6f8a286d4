#include "cfsym/dyadic.hpp"

#include "cfsym/errors.hpp"

#include <algorithm>
#include <cmath>

namespace cfsym {

std::size_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

namespace {

BigInt shift_left(const BigInt& v, std::uint64_t k) {
  BigInt r;
  mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), k);
  return r;
}

BigInt div_2exp(const BigInt& v, std::uint64_t k, Round dir) {
  BigInt r;
  if (dir == Round::down)
    mpz_fdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), k);
  else
    mpz_cdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), k);
  return r;
}

BigInt div_int(const BigInt& n, const BigInt& d, Round dir) {
  BigInt r;
  if (dir == Round::down)
    mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  else
    mpz_cdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

// Aligns both operands to the smaller exponent.
std::pair<BigInt, BigInt> aligned(const Dyadic& a, const Dyadic& b, std::int64_t& exp) {
  exp = std::min(a.exponent(), b.exponent());
  return {shift_left(a.mantissa(), static_cast<std::uint64_t>(a.exponent() - exp)),
          shift_left(b.mantissa(), static_cast<std::uint64_t>(b.exponent() - exp))};
}

}  // namespace

Dyadic::Dyadic(const BigInt& mantissa, std::int64_t exponent)
    : mantissa_(mantissa), exponent_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  auto tz = mpz_scan1(mantissa_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), tz);
    exponent_ += static_cast<std::int64_t>(tz);
  }
}

Dyadic Dyadic::rounded(int bits, Round dir) const {
  auto len = bit_length(mantissa_);
  if (len <= static_cast<std::size_t>(bits)) return *this;
  auto shift = len - static_cast<std::size_t>(bits);
  return Dyadic(div_2exp(mantissa_, shift, dir), exponent_ + static_cast<std::int64_t>(shift));
}

Dyadic Dyadic::from_rational(const BigRational& q, int bits, Round dir) {
  return quotient(Dyadic(q.get_num(), 0), Dyadic(q.get_den(), 0), bits, dir);
}

Dyadic Dyadic::quotient(const Dyadic& a, const Dyadic& b, int bits, Round dir) {
  if (b.is_zero()) throw DomainError("dyadic division by zero");
  if (a.is_zero()) return {};
  auto la = static_cast<std::int64_t>(bit_length(a.mantissa_));
  auto lb = static_cast<std::int64_t>(bit_length(b.mantissa_));
  std::int64_t k = std::max<std::int64_t>(0, bits + lb - la + 2);
  BigInt q = div_int(shift_left(a.mantissa_, static_cast<std::uint64_t>(k)), b.mantissa_, dir);
  return Dyadic(q, a.exponent_ - b.exponent_ - k).rounded(bits, dir);
}

Dyadic Dyadic::sqrt(const Dyadic& a, int bits, Round dir) {
  if (a.sign() < 0) throw DomainError("square root of a negative dyadic");
  if (a.is_zero()) return {};
  auto len = static_cast<std::int64_t>(bit_length(a.mantissa_));
  std::int64_t k = std::max<std::int64_t>(0, 2 * static_cast<std::int64_t>(bits) + 4 - len);
  if ((a.exponent_ - k) % 2 != 0) ++k;
  BigInt m = shift_left(a.mantissa_, static_cast<std::uint64_t>(k));
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
  if (dir == Round::up && root * root != m) root += 1;
  return Dyadic(root, (a.exponent_ - k) / 2).rounded(bits, dir);
}

BigInt Dyadic::floor() const {
  if (exponent_ >= 0) return shift_left(mantissa_, static_cast<std::uint64_t>(exponent_));
  return div_2exp(mantissa_, static_cast<std::uint64_t>(-exponent_), Round::down);
}

BigInt Dyadic::ceil() const {
  if (exponent_ >= 0) return shift_left(mantissa_, static_cast<std::uint64_t>(exponent_));
  return div_2exp(mantissa_, static_cast<std::uint64_t>(-exponent_), Round::up);
}

BigRational Dyadic::to_rational() const {
  if (exponent_ >= 0) return BigRational(shift_left(mantissa_, static_cast<std::uint64_t>(exponent_)));
  BigRational r(mantissa_, shift_left(BigInt(1), static_cast<std::uint64_t>(-exponent_)));
  r.canonicalize();
  return r;
}

double Dyadic::to_double() const {
  long exp = 0;
  double m = mpz_get_d_2exp(&exp, mantissa_.get_mpz_t());
  return std::ldexp(m, static_cast<int>(exp + exponent_));
}

std::string Dyadic::to_decimal(int frac_digits, Round dir) const {
  return rational_to_decimal(to_rational(), frac_digits, dir);
}

std::string rational_to_decimal(const BigRational& q, int frac_digits, Round dir) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(frac_digits));
  BigInt scaled = div_int(q.get_num() * scale, q.get_den(), dir);
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= static_cast<std::size_t>(frac_digits))
    digits.insert(0, static_cast<std::size_t>(frac_digits) + 1 - digits.size(), '0');
  std::string out = negative ? "-" : "";
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(frac_digits));
  if (frac_digits > 0) {
    out += '.';
    out += digits.substr(digits.size() - static_cast<std::size_t>(frac_digits));
  }
  return out;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  std::int64_t e;
  auto [ma, mb] = aligned(a, b, e);
  return Dyadic(ma + mb, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  std::int64_t e;
  auto [ma, mb] = aligned(a, b, e);
  return Dyadic(ma - mb, e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

Dyadic operator-(const Dyadic& a) { return Dyadic(-a.mantissa_, a.exponent_); }

bool operator==(const Dyadic& a, const Dyadic& b) {
  return a.mantissa_ == b.mantissa_ && a.exponent_ == b.exponent_;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace cfsym
