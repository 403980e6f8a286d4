#include "cfsym/cfengine.hpp"

#include "cfsym/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace cfsym {

ContinuedFractionState::ContinuedFractionState(std::shared_ptr<const Seed> seed, int bits)
    : seed_(std::move(seed)), future_(seed_->value(bits)), bits_(bits) {
  convergents_.push_back({BigInt(0), BigInt(1)});
}

namespace {

// floor(1/x_n) evaluated from x_0, so the only width is the seed's.
BigInt next_digit_from_seed(const Seed& seed, const Convergent& cur, const BigInt& p_prev,
                            const BigInt& q_prev, int bits) {
  auto x0 = seed.enclosure(bits);
  try {
    // 1/x_n = (q_{n-1} x_0 - p_{n-1}) / (p_n - q_n x_0)
    return floor_checked(mobius(q_prev, BigInt(-p_prev), BigInt(-cur.q), cur.p, x0, bits));
  } catch (const DomainError&) {
    throw InsufficientPrecision("seed enclosure too wide to locate x_n");
  }
}

}  // namespace

void advance(ContinuedFractionState& s, const PrecisionContext& ctx) {
  const Seed& seed = *s.seed_;
  BigInt a;
  if (seed.is_exact()) {
    QuadraticSurd x = s.future_.exact()->to_surd();
    a = floor_checked(surd_recip_shift(x, BigInt(0)));
    s.future_ = Real(surd_recip_shift(x, a), s.bits_);
  } else {
    ctx.validate();
    int cap = std::max(ctx.initial_bits, std::min(ctx.max_bits, seed.useful_bits()));
    for (;;) {
      try {
        a = next_digit_from_seed(seed, s.convergents_.back(), s.p_prev_, s.q_prev_, s.bits_);
        break;
      } catch (const InsufficientPrecision& e) {
        int next = ctx.next(s.bits_, cap);
        if (next == 0)
          throw PrecisionExhausted("digit a_" + std::to_string(s.n() + 1) + " undetermined at " +
                                       std::to_string(s.bits_) + " bits: " + e.what(),
                                   s.n());
        s.bits_ = next;
      }
    }
  }

  Convergent cur = s.convergents_.back();
  Convergent next{a * cur.p + s.p_prev_, a * cur.q + s.q_prev_};
  s.p_prev_ = cur.p;
  s.q_prev_ = cur.q;
  s.convergents_.push_back(std::move(next));

  if (s.past_)
    s.past_ = BigRational(1 / *s.past_ - a);
  else
    s.past_ = BigRational(-a);
  s.digits_.push_back(a);

  if (!seed.is_exact()) s.future_ = future_at(seed, s.convergents_, s.n(), s.bits_);
}

ContinuedFractionState gauss_step(const ContinuedFractionState& state, const PrecisionContext& ctx) {
  ContinuedFractionState next = state;
  advance(next, ctx);
  return next;
}

PartialExpansion expand_partial(const Seed& seed, std::size_t terms, const PrecisionContext& ctx) {
  ctx.validate();
  PartialExpansion out{ContinuedFractionState(std::make_shared<const Seed>(seed), ctx.initial_bits),
                       std::nullopt};
  while (out.state.n() < terms) {
    try {
      advance(out.state, ctx);
    } catch (const PrecisionExhausted& e) {
      out.stopped = e.what();
      break;
    }
  }
  return out;
}

ContinuedFractionState expand(const Seed& seed, std::size_t terms, const PrecisionContext& ctx) {
  auto partial = expand_partial(seed, terms, ctx);
  if (partial.stopped) throw PrecisionExhausted(*partial.stopped, partial.state.n());
  return std::move(partial.state);
}

Real future_at(const Seed& seed, std::span<const Convergent> convergents, std::size_t k, int bits) {
  if (k >= convergents.size()) throw DomainError("future_at: convergent index out of range");
  const Convergent& cur = convergents[k];
  Convergent prev = k == 0 ? Convergent{BigInt(1), BigInt(0)} : convergents[k - 1];
  if (auto s = seed.exact()) {
    Real x0(*s, bits);
    Real num = Real::rational(BigRational(cur.p), bits) - Real::rational(BigRational(cur.q)) * x0;
    Real den = Real::rational(BigRational(prev.q)) * x0 - Real::rational(BigRational(prev.p));
    return num / den;
  }
  return Real(mobius(BigInt(-cur.q), cur.p, prev.q, BigInt(-prev.p), seed.enclosure(bits), bits));
}

BigRational past_of_prefix(std::span<const BigInt> digits) {
  if (digits.empty()) throw DomainError("past_of_prefix needs at least one digit");
  BigRational tail(0);  // [a_{n-1}, ..., a_1], built from a_1 outward
  for (std::size_t k = 0; k + 1 < digits.size(); ++k) {
    if (digits[k] < 1) throw DomainError("digits must be positive");
    tail = 1 / (BigRational(digits[k]) + tail);
  }
  if (digits.back() < 1) throw DomainError("digits must be positive");
  return BigRational(-BigRational(digits.back()) - tail);
}

std::pair<Real, Real> natural_extension_step(const Real& x, const Real& y) {
  auto in_unit = certainly_less(Real(0), x) && certainly_less(x, Real(1));
  if (!in_unit || !certainly_less(y, Real(-1)))
    throw DomainError("natural extension needs x in (0,1) and y < -1");
  Real r = Real(1) / x;
  BigInt a = r.floor_checked();
  Real shift = Real::rational(BigRational(a));
  return {r - shift, Real(1) / y - shift};
}

std::optional<Periodicity> detect_period(const QuadraticSurd& x0, std::size_t max_steps) {
  std::unordered_map<std::string, std::size_t> seen;
  QuadraticSurd x = x0;
  for (std::size_t i = 0; i <= max_steps; ++i) {
    std::string key = x.p().get_str() + ":" + x.d().get_str() + ":" + x.q().get_str();
    auto [it, inserted] = seen.emplace(std::move(key), i);
    if (!inserted) return Periodicity{it->second, i - it->second};
    x = surd_recip_shift(x, floor_checked(surd_recip_shift(x, BigInt(0))));
  }
  return std::nullopt;
}

}  // namespace cfsym
