#pragma once

#include "cfsym/precision.hpp"
#include "cfsym/quadratic.hpp"
#include "cfsym/real.hpp"
#include "cfsym/seed.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cfsym {

struct Convergent {
  BigInt p;
  BigInt q;
  friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// Snapshot of the Gauss-map iteration after n digits:
///   digits a_1..a_n, convergents p_k/q_k for k = 0..n,
///   future x_n in (0,1) and, for n >= 1, the exact past
///   y_n = -a_n - [a_{n-1}, ..., a_1] < -1.
/// States are immutable values; stepping returns a new state.
class ContinuedFractionState {
 public:
  /// n = 0 state for the seed.
  explicit ContinuedFractionState(std::shared_ptr<const Seed> seed, int bits = kDefaultBits);

  const Seed& seed() const { return *seed_; }
  std::size_t n() const { return digits_.size(); }
  const std::vector<BigInt>& digits() const { return digits_; }
  /// p_0/q_0 .. p_n/q_n.
  const std::vector<Convergent>& convergents() const { return convergents_; }
  /// x_n: exact for surd seeds, an enclosure computed from x_0 otherwise.
  const Real& future() const { return future_; }
  /// y_n; empty at n = 0.
  const std::optional<BigRational>& past() const { return past_; }
  /// Precision the future was last enclosed at (irrelevant for exact seeds).
  int precision() const { return bits_; }

 private:
  friend void advance(ContinuedFractionState&, const PrecisionContext&);

  std::shared_ptr<const Seed> seed_;
  std::vector<BigInt> digits_;
  std::vector<Convergent> convergents_;
  BigInt p_prev_{1};  // p_{n-1}, with p_{-1} = 1
  BigInt q_prev_{0};  // q_{n-1}, with q_{-1} = 0
  Real future_;
  std::optional<BigRational> past_;
  int bits_;
};

/// One tick of the Gauss map: r = 1/x_n, a_{n+1} = floor(r), x_{n+1} = r - a_{n+1}.
/// For decimal seeds the floor is retried from the original literal with
/// escalating precision. Throws PrecisionExhausted (with the index reached).
ContinuedFractionState gauss_step(const ContinuedFractionState& state,
                                  const PrecisionContext& ctx = {});

struct PartialExpansion {
  ContinuedFractionState state;
  /// Set when precision ran out before N digits.
  std::optional<std::string> stopped;
};

/// Expands x_0 to N digits. Throws PrecisionExhausted with the index reached.
ContinuedFractionState expand(const Seed& seed, std::size_t terms, const PrecisionContext& ctx = {});
/// Same, but returns whatever was reached instead of throwing.
PartialExpansion expand_partial(const Seed& seed, std::size_t terms,
                                const PrecisionContext& ctx = {});

/// x_k recomputed from x_0 and the convergents k and k-1 as the Mobius image
/// x_k = (p_k - q_k x_0) / (q_{k-1} x_0 - p_{k-1}). Exact for surd seeds.
Real future_at(const Seed& seed, std::span<const Convergent> convergents, std::size_t k, int bits);

/// -a_n - [a_{n-1}, ..., a_1] by direct evaluation; -a_1 when n = 1.
BigRational past_of_prefix(std::span<const BigInt> digits);

/// The natural extension (x, y) -> (T(x), 1/y - floor(1/x)).
/// Throws DomainError outside Omega and InsufficientPrecision when floor(1/x)
/// is not determined.
std::pair<Real, Real> natural_extension_step(const Real& x, const Real& y);

/// Pre-period and period length of the digit sequence of a surd seed,
/// detected from repeated canonical (P, D, Q) states. nullopt if no repeat
/// within `max_steps`.
struct Periodicity {
  std::size_t preperiod;
  std::size_t period;
};
std::optional<Periodicity> detect_period(const QuadraticSurd& x0, std::size_t max_steps);

}  // namespace cfsym
