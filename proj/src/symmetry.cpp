#include "cfsym/symmetry.hpp"

#include "cfsym/errors.hpp"

#include <algorithm>
#include <deque>

namespace cfsym {

namespace {

Real radical(const Real& t, const Real& center) {
  Real radicand = Real(1) - Real(4) * t * center;
  auto s = radicand.sign();
  if (!s || *s <= 0)
    throw DomainError("cannot certify 1 - 4uv > 0 (1 - 4uv = " + radicand.to_string(12) + ")");
  return sqrt(radicand);
}

// For genuine pairs the floor argument is a_{n+1} plus a number in (0,1).
// An exact integer means the pair sits on the edge u + v = 1 (a_1 = 1 seen
// from n = 1), where the argument overshoots the digit by one.
BigInt digit_floor(const Real& arg) {
  if (auto e = arg.exact(); e && e->is_rational() && e->rational_part().get_den() == 1)
    throw RegionViolation("digit formula argument is exactly the integer " +
                          e->rational_part().get_str() +
                          "; the pair lies on the boundary u + v = 1 where the floor is ambiguous");
  return arg.floor_checked();
}

void require_positive(const Real& v, const char* what) {
  auto s = v.sign();
  if (!s || *s <= 0) throw DomainError(std::string(what) + " must be certainly positive");
}

}  // namespace

BigInt digit_from_pair(const Real& outer, const Real& center) {
  require_positive(center, "theta_n");
  Real s = radical(outer, center);
  return digit_floor((Real(1) + s) / (Real(2) * center));
}

BigInt digit_from_past_side(const Real& previous, const Real& center) {
  require_positive(previous, "theta_{n-1}");
  Real s = radical(previous, center);
  return digit_floor((Real(1) + s) / (Real(2) * previous));
}

Real dk_step(const Real& theta_from, const Real& center, const BigInt& a) {
  Real s = radical(theta_from, center);
  Real ar = Real::rational(BigRational(a));
  return theta_from + ar * s - ar * ar * center;
}

StepResult step(const Real& outer, const Real& center) {
  BigInt a = digit_from_pair(outer, center);
  if (a < 1) throw DomainError("recovered digit " + a.get_str() + " is not positive");
  return {a, dk_step(outer, center, a)};
}

StepResult step(const ThetaPair& pair) { return step(pair.outer, pair.center); }

Reconstruction reconstruct(const Real& theta_at, const Real& theta_next, std::size_t at,
                           std::size_t back, std::size_t fwd, const PrecisionContext& ctx) {
  ctx.validate();
  back = std::min(back, at);

  // Each step costs about bits(a) + 4 bits of the inputs' accuracy; refuse
  // budgets the context could never supply.
  std::size_t steps = back + fwd;
  if (steps > 0) {
    BigInt a = digit_from_pair(theta_at, theta_next);
    auto per_step = static_cast<long long>(bit_length(a)) + 4;
    if (static_cast<long long>(steps) * per_step > ctx.max_bits)
      throw PrecisionExhausted("reconstruction of " + std::to_string(steps) +
                               " steps needs more than max_bits=" + std::to_string(ctx.max_bits));
  }

  std::deque<Real> thetas{theta_at, theta_next};
  std::deque<RecoveredDigit> digits;
  std::size_t first = at;
  Reconstruction out;

  // A walk ends when an enclosure gets too wide or a pair hits the boundary
  // of the triangle; what was recovered so far is kept.
  auto note = [&](const char* dir, std::size_t k, const Error& e) {
    std::string msg = std::string(dir) + " walk stopped at theta_" + std::to_string(k) + ": " + e.what();
    out.stopped = out.stopped ? *out.stopped + "; " + msg : msg;
  };

  // Backward: (outer, center) = (theta_{k+1}, theta_k) -> a_{k+1}, theta_{k-1}.
  for (std::size_t i = 0; i < back; ++i) {
    std::size_t k = first;
    try {
      auto r = step(thetas[1], thetas[0]);
      digits.push_front({k + 1, r.digit, DigitSource::from_future_pair});
      thetas.push_front(std::move(r.theta));
      --first;
    } catch (const InsufficientPrecision& e) {
      note("backward", k, e);
      break;
    } catch (const RegionViolation& e) {
      note("backward", k, e);
      break;
    }
  }

  // Forward: (outer, center) = (theta_{k-1}, theta_k) -> a_{k+1}, theta_{k+1}.
  for (std::size_t i = 0; i < fwd; ++i) {
    std::size_t k = first + thetas.size() - 1;
    try {
      auto r = step(thetas[thetas.size() - 2], thetas.back());
      digits.push_back({k + 1, r.digit, DigitSource::from_past_pair});
      thetas.push_back(std::move(r.theta));
    } catch (const InsufficientPrecision& e) {
      note("forward", k, e);
      break;
    } catch (const RegionViolation& e) {
      note("forward", k, e);
      break;
    }
  }

  out.first_theta_index = first;
  out.thetas.assign(thetas.begin(), thetas.end());
  out.digits.assign(digits.begin(), digits.end());
  return out;
}

std::vector<BigInt> digit_sequence_from_thetas(std::span<const Real> thetas) {
  if (thetas.size() < 2) throw DomainError("need at least theta_0 and theta_1");
  std::vector<BigInt> digits;  // a_2 .. a_{N+1}
  for (std::size_t n = 1; n < thetas.size(); ++n) {
    BigInt future_side = digit_from_pair(thetas[n - 1], thetas[n]);  // a_{n+1}
    // a_2 from the past side reads a_2 + [a_1], which is a_2 + 1 when a_1 = 1,
    // i.e. when theta_0 + theta_1 = 1. Only cross-check where that is excluded.
    bool past_side_valid = n >= 3 || (n == 2 && certainly_less(thetas[0] + thetas[1], Real(1)));
    if (past_side_valid) {
      BigInt past_side = digit_from_past_side(thetas[n - 1], thetas[n]);  // a_n
      if (past_side != digits.back())
        throw CrossCheckFailure("a_" + std::to_string(n) + ": past-side form gives " +
                                past_side.get_str() + ", future-side form gives " +
                                digits.back().get_str());
    }
    digits.push_back(future_side);
  }
  return digits;
}

}  // namespace cfsym
