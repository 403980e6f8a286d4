#pragma once

#include "cfsym/precision.hpp"
#include "cfsym/real.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cfsym {

// Recovery of partial quotients and approximation coefficients from
// consecutive coefficient pairs.
//
// For genuine coefficients of an irrational x_0 and every n >= 1,
//
//   a_{n+1} = floor((1 + sqrt(1 - 4 t theta_n)) / (2 theta_n)),
//
// where t is either neighbour theta_{n-1} or theta_{n+1}, and
//
//   theta_{n+-1} = theta_{n-+1} + a_{n+1} sqrt(1 - 4 theta_{n-+1} theta_n)
//                  - a_{n+1}^2 theta_n.
//
// a_1 is not recoverable: theta_0 has no left neighbour.

enum class Direction { forward, backward };

/// (outer, center) = (theta_{n-1}, theta_n) for forward steps and
/// (theta_{n+1}, theta_n) for backward ones.
struct ThetaPair {
  Real outer;
  Real center;
  Direction direction;
};

enum class DigitSource { from_past_pair, from_future_pair };

struct RecoveredDigit {
  std::size_t index;
  BigInt value;
  DigitSource source;
};

/// a_{n+1} from (theta_{n-1}, theta_n) or (theta_{n+1}, theta_n).
/// Throws DomainError when 1 - 4 outer center > 0 cannot be certified and
/// InsufficientPrecision when the floor argument straddles an integer.
/// An argument that is exactly an integer throws RegionViolation: for genuine
/// coefficients that only happens for (theta_2, theta_1) when a_1 = 1, where
/// theta_0 + theta_1 = 1 and the future-pair form returns a_2 + 1.
BigInt digit_from_pair(const Real& outer, const Real& center);

/// a_n = floor((1 + sqrt(1 - 4 theta_{n-1} theta_n)) / (2 theta_{n-1})), n >= 2.
BigInt digit_from_past_side(const Real& previous, const Real& center);

/// theta_from + a sqrt(1 - 4 theta_from center) - a^2 center.
/// Involutive in theta_from exactly when sqrt(1 - 4 theta_from center) <= 2 a center,
/// which holds for every genuine triple.
Real dk_step(const Real& theta_from, const Real& center, const BigInt& a);

struct StepResult {
  BigInt digit;
  Real theta;
};

/// Recovers the digit and the coefficient on the other side of `center`.
StepResult step(const Real& outer, const Real& center);
StepResult step(const ThetaPair& pair);

struct Reconstruction {
  std::size_t first_theta_index = 0;
  std::vector<Real> thetas;           ///< theta_{first_theta_index} ...
  std::vector<RecoveredDigit> digits; ///< ordered by index
  std::optional<std::string> stopped; ///< set when precision ran out

  bool complete() const { return !stopped.has_value(); }
};

/// Starting from (theta_at, theta_{at+1}), walks `back` steps towards theta_0
/// (clamped there) and `fwd` steps forward. Output covers
/// theta_{at-back} .. theta_{at+1+fwd} and a_{at-back+2} .. a_{at+fwd+1}.
/// Precision loss or a boundary pair stops the walk and is reported in
/// `stopped`; the partial result is kept. Pairs that are not genuine coefficients give meaningless
/// output; nothing tries to detect them.
Reconstruction reconstruct(const Real& theta_at, const Real& theta_next, std::size_t at,
                           std::size_t back, std::size_t fwd, const PrecisionContext& ctx = {});

/// a_2 .. a_{N+1} from consecutive theta_0 .. theta_N (N >= 1). Interior
/// digits use the (theta_{n-1}, theta_n) form and are cross-checked against
/// the past-side form (CrossCheckFailure on disagreement). The a_2 check is
/// skipped unless theta_0 + theta_1 < 1 is certified, since a_1 = 1 shifts
/// the past-side value by one.
std::vector<BigInt> digit_sequence_from_thetas(std::span<const Real> thetas);

}  // namespace cfsym
