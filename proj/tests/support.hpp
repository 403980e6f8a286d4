#pragma once

#include "cfsym/real.hpp"
#include "cfsym/seed.hpp"

#include <cmath>
#include <memory>
#include <random>
#include <string_view>

namespace support {

using cfsym::BigInt;
using cfsym::BigRational;

inline BigRational dec(std::string_view text) { return cfsym::DecimalLiteral::parse(text).center; }

/// True when x's enclosure meets [ref - tol, ref + tol].
inline bool near(const cfsym::Real& x, std::string_view ref, const BigRational& tol,
                 int bits = 256) {
  auto e = x.enclose(bits);
  BigRational r = dec(ref);
  return e.lower().to_rational() <= r + tol && e.upper().to_rational() >= r - tol;
}

/// 60-digit reference values are accurate to 1e-60; allow a little slack.
inline const BigRational& ref_tol() {
  static const BigRational t = dec("0.00000000000000000000000000000000000000000000000000000000001");
  return t;
}

inline std::shared_ptr<const cfsym::Seed> share(cfsym::Seed s) {
  return std::make_shared<const cfsym::Seed>(std::move(s));
}

inline cfsym::Seed pi_seed() { return cfsym::Seed::decimal(cfsym::pi_minus_3_literal()); }
inline cfsym::Seed golden_seed() { return cfsym::Seed::surd({-1, 5, 2}); }
inline cfsym::Seed sqrt2_seed() { return cfsym::Seed::surd({-1, 2, 1}); }
inline cfsym::Seed sqrt7_seed() { return cfsym::Seed::surd({-2, 7, 3}); }

/// Random irrational (P + sqrt(D)) / Q in (0,1): D non-square in [2, dmax],
/// Q in [1, qmax], P chosen so the value lands in (0,1).
inline cfsym::QuadraticSurd random_surd(std::mt19937_64& rng, long dmax = 500, long qmax = 40) {
  std::uniform_int_distribution<long> dd(2, dmax), qd(1, qmax);
  for (;;) {
    long d = dd(rng);
    long r = static_cast<long>(std::sqrt(static_cast<double>(d)));
    while (r * r > d) --r;
    while ((r + 1) * (r + 1) <= d) ++r;
    if (r * r == d) continue;
    long q = qd(rng);
    // floor((P + sqrt d)/q) == 0  <=>  0 <= P + sqrt d < q
    std::uniform_int_distribution<long> pd(-r, q - r - 1);
    long p = pd(rng);
    cfsym::QuadraticSurd s(p, d, q);
    double v = s.to_double();
    if (v > 0 && v < 1) return s;
  }
}

}  // namespace support
