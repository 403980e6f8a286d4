#pragma once

#include "cfsym/precision.hpp"
#include "cfsym/rigorous_real.hpp"
#include "cfsym/seed.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cfsym::oracle {

// Brute-force reference computations. Nothing here calls into cfengine,
// jager or symmetry; only the number types are shared.

/// Partial quotients a_1..a_k common to every number in [lo, hi], found by
/// running Euclid's algorithm on both rational endpoints.
std::vector<BigInt> common_digits(const BigRational& lo, const BigRational& hi,
                                  std::size_t max_digits);

/// p/q = [a_1, ..., a_n] evaluated from the innermost term outward.
BigRational evaluate_finite(const std::vector<BigInt>& digits, std::size_t n);

/// theta_n straight from the definition, with x_0 enclosed at 4 * bits.
/// Throws PrecisionExhausted when that enclosure does not pin a_1..a_n.
RigorousReal brute_theta(const Seed& seed, std::size_t n, int bits);

struct OracleEntry {
  std::size_t n;
  RigorousReal oracle_theta;
  RigorousReal pipeline_theta;
  bool theta_overlap;
  BigInt digit_expand;                        ///< a_{n+1} from the expansion
  std::optional<BigInt> digit_past_pair;      ///< from (theta_{n-1}, theta_n)
  std::optional<BigInt> digit_future_pair;    ///< from (theta_{n+1}, theta_n)
  bool digit_oracle_match;                    ///< oracle's own a_{n+1} agrees
  bool digit_match;
  std::optional<bool> reconstruct_overlap;    ///< forward walk from (theta_0, theta_1)
  /// n = 1 with a_1 = 1: (theta_0, theta_1) sits on u + v = 1 and only the
  /// past pair is expected to give a_2.
  bool edge = false;
};

struct OracleReport {
  std::string seed;
  std::size_t from = 0;
  std::size_t to = 0;
  int oracle_bits = 0;
  std::vector<OracleEntry> entries;

  bool all_ok() const;
  nlohmann::json to_json() const;
};

/// Compares, for theta_0..theta_N: brute_theta against the pipeline's
/// theta sequence, recovered digits against expansion digits, and the
/// forward reconstruction against the direct sequence. Mismatches are
/// recorded, never thrown.
OracleReport crosscheck(const Seed& seed, std::size_t last_index, const PrecisionContext& ctx = {},
                        const std::string& seed_label = "");

}  // namespace cfsym::oracle
