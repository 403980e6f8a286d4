#include "cfsym/jager.hpp"

#include "cfsym/errors.hpp"

#include <algorithm>

namespace cfsym {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::definition: return "definition";
    case Provenance::perron: return "perron";
    case Provenance::reconstruction: return "reconstruction";
    case Provenance::cross_checked: return "cross_checked";
  }
  return "?";
}

std::string to_string(GammaCertificate c) {
  switch (c) {
    case GammaCertificate::inside: return "inside";
    case GammaCertificate::outside: return "outside";
    case GammaCertificate::undecidable: return "undecidable";
  }
  return "?";
}

namespace {

// +1 certainly positive, -1 certainly not positive, 0 unknown.
int positivity(const Real& v) {
  auto s = v.sign();
  if (!s) return 0;
  return *s > 0 ? 1 : -1;
}

}  // namespace

ThetaValue ThetaValue::make(std::optional<std::size_t> index, Real value, Provenance provenance) {
  std::string label = index ? "theta_" + std::to_string(*index) : std::string("theta");
  int pos = positivity(value);
  int below_one = index ? positivity(Real(1) - value) : 1;
  if (pos < 0 || below_one < 0)
    throw DomainError(label + " = " + value.to_string(12) + " violates its range");
  if (pos == 0 || below_one == 0)
    throw InsufficientPrecision(label + " = " + value.to_string(12) + " is too wide to certify");
  return ThetaValue{index, std::move(value), provenance};
}

DynamicPair DynamicPair::make(Real x, Real y) {
  bool in_omega = certainly_less(Real(0), x) && certainly_less(x, Real(1)) &&
                  certainly_less(y, Real(-1));
  if (!in_omega)
    throw RegionViolation("(" + x.to_string(12) + ", " + y.to_string(12) +
                          ") is not certified inside Omega");
  return DynamicPair{std::move(x), std::move(y)};
}

JagerPair JagerPair::make(std::size_t n, ThetaValue first, ThetaValue second) {
  auto cert = in_gamma(first.value, second.value);
  if (cert != GammaCertificate::inside)
    throw RegionViolation("Jager pair at time " + std::to_string(n) + " is " + to_string(cert) +
                          " Gamma");
  return JagerPair{n, std::move(first), std::move(second)};
}

GammaCertificate in_gamma(const Real& u, const Real& v) {
  int cu = positivity(u);
  int cv = positivity(v);
  int cs = positivity(Real(1) - u - v);
  if (cu < 0 || cv < 0 || cs < 0) return GammaCertificate::outside;
  if (cu > 0 && cv > 0 && cs > 0) return GammaCertificate::inside;
  return GammaCertificate::undecidable;
}

ThetaValue theta_by_definition(const Seed& seed, const BigInt& p, const BigInt& q, int bits,
                               std::optional<Dyadic> tolerance) {
  if (q < 1) throw DomainError("theta needs q >= 1");
  if (gcd(p, q) != 1) throw DomainError("theta needs p/q in lowest terms");
  Real x0 = seed.value(bits);
  Real qq = Real::rational(BigRational(q), bits);
  // q^2 |x_0 - p/q| = q |q x_0 - p|
  Real value = qq * abs(qq * x0 - Real::rational(BigRational(p), bits));
  if (tolerance && !value.is_exact() && value.enclose().width() > *tolerance)
    throw InsufficientPrecision("theta enclosure wider than the requested tolerance");
  return ThetaValue::make(std::nullopt, std::move(value), Provenance::definition);
}

ThetaValue theta_of_convergent(const Seed& seed, std::size_t k, const Convergent& c, int bits) {
  auto t = theta_by_definition(seed, c.p, c.q, bits);
  return ThetaValue::make(k, std::move(t.value), Provenance::definition);
}

ThetaValue theta_by_perron(const DynamicPair& pair, std::size_t n) {
  if (n < 1) throw DomainError("Perron's formula needs n >= 1");
  return ThetaValue::make(n - 1, Real(1) / (pair.x - pair.y), Provenance::perron);
}

ThetaValue theta_next_by_perron(const DynamicPair& pair, std::size_t n) {
  Real inv = -(pair.x - pair.y) / (pair.x * pair.y);
  return ThetaValue::make(n, Real(1) / inv, Provenance::perron);
}

JagerPair psi(const DynamicPair& pair, std::size_t n) {
  Real diff = pair.x - pair.y;
  Real u = Real(1) / diff;
  Real v = -(pair.x * pair.y) / diff;
  auto cert = in_gamma(u, v);
  if (cert != GammaCertificate::inside)
    throw RegionViolation("Psi image is " + to_string(cert) + " Gamma");
  std::optional<std::size_t> prev = n >= 1 ? std::optional<std::size_t>(n - 1) : std::nullopt;
  return JagerPair{n, ThetaValue{prev, std::move(u), Provenance::perron},
                   ThetaValue{n, std::move(v), Provenance::perron}};
}

DynamicPair psi_inv(const Real& u, const Real& v) {
  auto cert = in_gamma(u, v);
  if (cert != GammaCertificate::inside)
    throw RegionViolation("(" + u.to_string(12) + ", " + v.to_string(12) + ") is " +
                          to_string(cert) + " Gamma");
  Real s = sqrt(Real(1) - Real(4) * u * v);
  Real two_u = Real(2) * u;
  return DynamicPair::make((Real(1) - s) / two_u, -(Real(1) + s) / two_u);
}

DynamicPair psi_inv(const JagerPair& jp) { return psi_inv(jp.first.value, jp.second.value); }

ThetaRun theta_run(const Seed& seed, std::size_t last_index, const PrecisionContext& ctx) {
  return with_escalation(ctx, seed.useful_bits(), [&](int bits) {
    PrecisionContext local = ctx;
    local.initial_bits = bits;
    auto expansion = expand(seed, last_index + 1, local);
    int work = std::max(bits, expansion.precision());
    const auto& conv = expansion.convergents();
    const auto& digits = expansion.digits();

    std::vector<ThetaValue> thetas;
    thetas.reserve(last_index + 1);
    BigRational past;
    for (std::size_t k = 0; k <= last_index; ++k) {
      past = k == 0 ? BigRational(-digits[0]) : BigRational(1 / past - digits[k]);
      auto by_definition = theta_of_convergent(seed, k, conv[k], work);
      Real x_next = future_at(seed, conv, k + 1, work);
      auto by_perron = theta_by_perron(DynamicPair{x_next, Real::rational(past, work)}, k + 1);
      Real both = intersect_checked(by_definition.value, by_perron.value,
                                    "theta_" + std::to_string(k));
      thetas.push_back(ThetaValue::make(k, std::move(both), Provenance::cross_checked));
    }
    return ThetaRun{std::move(thetas), std::move(expansion), work};
  });
}

std::vector<ThetaValue> theta_sequence(const Seed& seed, std::size_t last_index,
                                       const PrecisionContext& ctx) {
  return theta_run(seed, last_index, ctx).thetas;
}

ThetaBounds theta_upper_bounds(const Seed& seed, std::size_t last_index, int digits,
                               const PrecisionContext& ctx) {
  return with_escalation(ctx, seed.useful_bits(), [&](int bits) {
    PrecisionContext local = ctx;
    local.initial_bits = bits;
    auto run = theta_run(seed, last_index, local);
    std::vector<std::string> bounds;
    for (const auto& t : run.thetas) bounds.push_back(certified_ceil_decimal(t.value, digits));
    return ThetaBounds{std::move(run), std::move(bounds)};
  });
}

}  // namespace cfsym
