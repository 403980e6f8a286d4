#pragma once

#include "cfsym/cfengine.hpp"
#include "cfsym/precision.hpp"
#include "cfsym/real.hpp"
#include "cfsym/seed.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cfsym {

enum class Provenance { definition, perron, reconstruction, cross_checked };

std::string to_string(Provenance p);

/// An approximation coefficient q^2 |x_0 - p/q|. When `index` is set the
/// value is theta_n of a convergent and lies in (0,1); otherwise it is the
/// coefficient of an arbitrary fraction and only positivity is required.
struct ThetaValue {
  std::optional<std::size_t> index;
  Real value;
  Provenance provenance;

  /// Validates the invariants: DomainError if violated, InsufficientPrecision
  /// if the enclosure cannot decide them.
  static ThetaValue make(std::optional<std::size_t> index, Real value, Provenance provenance);
};

/// A point of Omega = (0,1) x (-inf, -1).
struct DynamicPair {
  Real x;
  Real y;

  /// Throws RegionViolation unless membership in Omega is certified.
  static DynamicPair make(Real x, Real y);
};

/// (theta_{n-1}, theta_n), certified inside the open triangle Gamma.
/// The literature spells the name Jager; some sources write Jagger.
struct JagerPair {
  std::size_t n;
  ThetaValue first;
  ThetaValue second;

  /// Throws RegionViolation unless (first, second) is certified inside Gamma.
  static JagerPair make(std::size_t n, ThetaValue first, ThetaValue second);
};

enum class GammaCertificate { inside, outside, undecidable };

std::string to_string(GammaCertificate c);

/// Three-valued membership in Gamma = {u > 0, v > 0, u + v < 1}.
GammaCertificate in_gamma(const Real& u, const Real& v);

/// q^2 |x_0 - p/q| for any fraction p/q in lowest terms, q >= 1.
/// With `tolerance`, throws InsufficientPrecision if the enclosure is wider.
ThetaValue theta_by_definition(const Seed& seed, const BigInt& p, const BigInt& q, int bits,
                               std::optional<Dyadic> tolerance = std::nullopt);

/// theta_k of the k-th convergent, indexed.
ThetaValue theta_of_convergent(const Seed& seed, std::size_t k, const Convergent& c, int bits);

/// theta_{n-1} = 1 / (x_n - y_n) from the dynamic pair at time n >= 1.
ThetaValue theta_by_perron(const DynamicPair& pair, std::size_t n);

/// theta_n from the same pair via 1/theta_n = -(x_n - y_n) / (x_n y_n).
ThetaValue theta_next_by_perron(const DynamicPair& pair, std::size_t n);

/// Psi(x, y) = (1/(x - y), -xy/(x - y)) = (theta_{n-1}, theta_n).
/// Throws RegionViolation when the image cannot be certified inside Gamma.
JagerPair psi(const DynamicPair& pair, std::size_t n);

/// Psi^{-1}(u, v) = ((1 - s)/(2u), -(1 + s)/(2u)), s = sqrt(1 - 4uv).
/// Defined on all of Gamma. Throws RegionViolation outside it.
DynamicPair psi_inv(const Real& u, const Real& v);
DynamicPair psi_inv(const JagerPair& jp);

/// theta_0..theta_N together with the expansion that produced them.
struct ThetaRun {
  std::vector<ThetaValue> thetas;
  ContinuedFractionState expansion;  ///< N + 1 digits
  int bits;
};

/// theta_0..theta_N computed by definition and by Perron's formula; the two
/// must agree (CrossCheckFailure otherwise) and the result is their
/// intersection.
ThetaRun theta_run(const Seed& seed, std::size_t last_index, const PrecisionContext& ctx = {});
std::vector<ThetaValue> theta_sequence(const Seed& seed, std::size_t last_index,
                                       const PrecisionContext& ctx = {});

/// Round-up decimal bounds of theta_0..theta_N at `digits` decimals, with
/// precision escalated until every bound is certified.
struct ThetaBounds {
  ThetaRun run;
  std::vector<std::string> upper_bounds;
};
ThetaBounds theta_upper_bounds(const Seed& seed, std::size_t last_index, int digits,
                               const PrecisionContext& ctx = {});

}  // namespace cfsym
