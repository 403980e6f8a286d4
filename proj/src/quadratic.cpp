#include "cfsym/quadratic.hpp"

#include "cfsym/errors.hpp"

#include <sstream>
#include <utility>

namespace cfsym {

bool is_perfect_square(const BigInt& v) {
  return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

BigInt isqrt(const BigInt& v) {
  if (v < 0) throw DomainError("integer square root of a negative number");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

namespace {

BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

BigInt floor_of(const BigRational& q) { return floor_div(q.get_num(), q.get_den()); }

bool is_rational_square(const BigRational& q) {
  return is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

BigRational rational_sqrt(const BigRational& q) {
  BigRational r(isqrt(q.get_num()), isqrt(q.get_den()));
  r.canonicalize();
  return r;
}

BigRational make_rational(const BigInt& n, const BigInt& d) {
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

// Rewrites y's radical coefficient over radicand `base`, if the fields agree.
std::optional<BigRational> coefficient_over(const QuadraticNumber& y, const BigInt& base) {
  if (y.is_rational()) return BigRational(0);
  if (y.radicand() == base) return y.radical_coefficient();
  BigInt prod = base * y.radicand();
  if (!is_perfect_square(prod)) return std::nullopt;
  // sqrt(D2) = sqrt(D1 D2) / D1 * sqrt(D1)
  return BigRational(y.radical_coefficient() * make_rational(isqrt(prod), base));
}

}  // namespace

QuadraticSurd::QuadraticSurd(BigInt p, BigInt d, BigInt q)
    : p_(std::move(p)), d_(std::move(d)), q_(std::move(q)) {
  if (q_ == 0) throw DomainError("surd denominator is zero");
  if (d_ <= 0) throw DomainError("surd radicand must be positive");
  if (is_perfect_square(d_)) throw DomainError("surd radicand " + d_.get_str() + " is a perfect square");

  BigInt rem = d_ - p_ * p_;
  if (!mpz_divisible_p(rem.get_mpz_t(), q_.get_mpz_t())) {
    BigInt aq = abs(q_);
    p_ *= aq;
    d_ *= q_ * q_;
    q_ *= aq;
    rem = d_ - p_ * p_;
  }
  BigInt g = gcd(gcd(p_, q_), BigInt(rem / q_));
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    d_ /= g * g;
  }
}

BigInt floor_checked(const QuadraticSurd& x) {
  BigInt s = isqrt(x.d());
  // s < sqrt(D) < s + 1 since D is not a square.
  if (x.q() > 0) return floor_div(x.p() + s, x.q());
  return floor_div(-x.p() - s - 1, -x.q());
}

QuadraticSurd surd_recip_shift(const QuadraticSurd& x, const BigInt& a) {
  // Q / (P + sqrt D) = (-P + sqrt D) / ((D - P^2) / Q)
  BigInt q1 = (x.d() - x.p() * x.p()) / x.q();
  return QuadraticSurd(-x.p() - a * q1, x.d(), q1);
}

RigorousReal QuadraticSurd::enclose(int bits) const {
  int work = bits + 8;
  RigorousReal root(Dyadic::sqrt(Dyadic(d_, 0), work, Round::down),
                    Dyadic::sqrt(Dyadic(d_, 0), work, Round::up), work);
  auto q = RigorousReal::from_integer(q_, work);
  // P + sqrt(D) cancels when P < 0; use (D - P^2) / (Q (sqrt(D) - P)) there.
  if (sgn(p_) >= 0) return ((RigorousReal::from_integer(p_, work) + root) / q).with_precision(bits);
  auto num = RigorousReal::from_integer(d_ - p_ * p_, work);
  return (num / (q * (root - RigorousReal::from_integer(p_, work)))).with_precision(bits);
}

double QuadraticSurd::to_double() const { return enclose(64).midpoint().to_double(); }

std::string QuadraticSurd::to_string() const {
  std::ostringstream os;
  os << "(" << p_.get_str() << " + sqrt(" << d_.get_str() << "))/" << q_.get_str();
  return os.str();
}

QuadraticNumber::QuadraticNumber(const BigRational& rational) : a_(rational) {}

QuadraticNumber::QuadraticNumber(const QuadraticSurd& s)
    : a_(make_rational(s.p(), s.q())), b_(make_rational(BigInt(1), s.q())), d_(s.d()) {}

QuadraticNumber::QuadraticNumber(BigRational a, BigRational b, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (b_ == 0) {
    d_ = 0;
    return;
  }
  if (d_ <= 0 || is_perfect_square(d_))
    throw DomainError("radicand " + d_.get_str() + " is not a positive non-square");
}

QuadraticSurd QuadraticNumber::to_surd() const {
  if (is_rational()) throw DomainError("value " + a_.get_str() + " is rational");
  BigRational t = b_ * b_ * d_;
  BigInt q0 = a_.get_den() * t.get_den();
  BigInt p = a_.get_num() * (q0 / a_.get_den());
  BigInt d = t.get_num() * t.get_den() * a_.get_den() * a_.get_den();
  // a + b sqrt(d) = (p + sign(b) sqrt(D)) / q0 = (-p + sqrt(D)) / (-q0) when b < 0.
  if (sgn(b_) > 0) return QuadraticSurd(p, d, q0);
  return QuadraticSurd(-p, d, -q0);
}

int QuadraticNumber::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  BigRational lhs = a_ * a_;
  BigRational rhs = b_ * b_ * d_;
  return lhs > rhs ? sa : sb;
}

BigInt QuadraticNumber::floor() const {
  if (is_rational()) return floor_of(a_);
  return floor_checked(to_surd());
}

RigorousReal QuadraticNumber::enclose(int bits) const {
  if (is_rational()) return RigorousReal::from_rational(a_, bits);
  return to_surd().enclose(bits);
}

double QuadraticNumber::to_double() const { return enclose(64).midpoint().to_double(); }

std::string QuadraticNumber::to_string() const {
  if (is_rational()) return a_.get_str();
  return to_surd().to_string();
}

std::optional<QuadraticNumber> QuadraticNumber::add(const QuadraticNumber& x,
                                                    const QuadraticNumber& y) {
  const BigInt& base = x.is_rational() ? y.d_ : x.d_;
  auto yb = coefficient_over(y, base);
  if (!yb) return std::nullopt;
  return QuadraticNumber(x.a_ + y.a_, x.b_ + *yb, base);
}

std::optional<QuadraticNumber> QuadraticNumber::mul(const QuadraticNumber& x,
                                                    const QuadraticNumber& y) {
  const BigInt& base = x.is_rational() ? y.d_ : x.d_;
  auto yb = coefficient_over(y, base);
  if (!yb) return std::nullopt;
  return QuadraticNumber(x.a_ * y.a_ + x.b_ * *yb * base, x.a_ * *yb + y.a_ * x.b_, base);
}

QuadraticNumber QuadraticNumber::reciprocal() const {
  BigRational norm = a_ * a_ - b_ * b_ * d_;
  if (norm == 0) throw DomainError("reciprocal of zero");
  return QuadraticNumber(BigRational(a_ / norm), BigRational(-b_ / norm), d_);
}

QuadraticNumber QuadraticNumber::negated() const {
  return QuadraticNumber(BigRational(-a_), BigRational(-b_), d_);
}

std::optional<QuadraticNumber> QuadraticNumber::sqrt() const {
  int s = sign();
  if (s < 0) throw DomainError("square root of a negative number");
  if (s == 0) return QuadraticNumber();
  if (is_rational()) {
    if (is_rational_square(a_)) return QuadraticNumber(rational_sqrt(a_));
    // sqrt(n/m) = sqrt(n m) / m
    return QuadraticNumber(BigRational(0), make_rational(BigInt(1), a_.get_den()),
                           a_.get_num() * a_.get_den());
  }
  // (c + e sqrt D)^2 = a + b sqrt D  =>  c^2 = (a +- sqrt(a^2 - b^2 D)) / 2
  BigRational norm = a_ * a_ - b_ * b_ * d_;
  if (norm < 0 || !is_rational_square(norm)) return std::nullopt;
  BigRational n = rational_sqrt(norm);
  for (const BigRational& c2 : {BigRational((a_ + n) / 2), BigRational((a_ - n) / 2)}) {
    if (c2 <= 0 || !is_rational_square(c2)) continue;
    BigRational c = rational_sqrt(c2);
    QuadraticNumber w(c, BigRational(b_ / (2 * c)), d_);
    auto sq = mul(w, w);
    if (!sq || !(*sq == *this)) continue;
    return w.sign() < 0 ? w.negated() : w;
  }
  return std::nullopt;
}

bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.is_rational() != y.is_rational()) return false;
  if (x.is_rational()) return x.a_ == y.a_;
  auto diff = QuadraticNumber::add(x, y.negated());
  return diff && diff->sign() == 0;
}

}  // namespace cfsym
