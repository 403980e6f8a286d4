#include "cfsym/oracle.hpp"

#include "cfsym/errors.hpp"
#include "cfsym/jager.hpp"
#include "cfsym/symmetry.hpp"

#include <algorithm>

namespace cfsym::oracle {

namespace {

// Euclid on a rational in (0,1). The final quotient of a terminating
// expansion sits on a cylinder boundary, so it is dropped.
std::vector<BigInt> euclid_digits(BigRational x, std::size_t max_digits) {
  std::vector<BigInt> out;
  while (x > 0 && out.size() <= max_digits) {
    BigRational r = 1 / x;
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    out.push_back(a);
    x = r - a;
  }
  if (!out.empty() && x == 0) out.pop_back();
  return out;
}

nlohmann::json integer_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

nlohmann::json interval_json(const RigorousReal& r) {
  return {{"lower", r.lower().to_decimal(40, Round::down)},
          {"upper", r.upper().to_decimal(40, Round::up)}};
}

constexpr int kOracleFactor = 4;

}  // namespace

std::vector<BigInt> common_digits(const BigRational& lo, const BigRational& hi,
                                  std::size_t max_digits) {
  auto a = euclid_digits(lo, max_digits);
  auto b = euclid_digits(hi, max_digits);
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min({a.size(), b.size(), max_digits}); ++i) {
    if (a[i] != b[i]) break;
    out.push_back(a[i]);
  }
  return out;
}

BigRational evaluate_finite(const std::vector<BigInt>& digits, std::size_t n) {
  BigRational v(0);
  for (std::size_t i = n; i-- > 0;) v = 1 / (BigRational(digits[i]) + v);
  return v;
}

RigorousReal brute_theta(const Seed& seed, std::size_t n, int bits) {
  int ob = kOracleFactor * bits;
  auto x0 = seed.enclosure(ob);
  auto digits = common_digits(x0.lower().to_rational(), x0.upper().to_rational(), n);
  if (digits.size() < n)
    throw PrecisionExhausted("oracle enclosure at " + std::to_string(ob) + " bits pins only " +
                                 std::to_string(digits.size()) + " digits",
                             digits.size());
  BigRational pq = evaluate_finite(digits, n);
  auto q = RigorousReal::from_integer(pq.get_den(), ob);
  auto p = RigorousReal::from_integer(pq.get_num(), ob);
  return abs(x0 * q - p) * q;
}

bool OracleReport::all_ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const OracleEntry& e) {
    return e.theta_overlap && e.digit_match && e.digit_oracle_match &&
           e.reconstruct_overlap.value_or(true);
  });
}

nlohmann::json OracleReport::to_json() const {
  nlohmann::json out;
  out["seed"] = seed;
  out["range"] = {{"from", from}, {"to", to}};
  out["oracle_bits"] = oracle_bits;
  out["all_ok"] = all_ok();
  auto& arr = out["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json digits = {{"expand", integer_json(e.digit_expand)},
                             {"oracle_match", e.digit_oracle_match},
                             {"match", e.digit_match}};
    digits["past_pair"] = e.digit_past_pair ? integer_json(*e.digit_past_pair) : nlohmann::json();
    digits["future_pair"] =
        e.digit_future_pair ? integer_json(*e.digit_future_pair) : nlohmann::json();
    arr.push_back({{"n", e.n},
                   {"oracle", interval_json(e.oracle_theta)},
                   {"pipeline", interval_json(e.pipeline_theta)},
                   {"overlap", e.theta_overlap},
                   {"digits", digits},
                   {"edge", e.edge},
                   {"reconstruct_overlap", e.reconstruct_overlap
                                               ? nlohmann::json(*e.reconstruct_overlap)
                                               : nlohmann::json()}});
  }
  return out;
}

OracleReport crosscheck(const Seed& seed, std::size_t last_index, const PrecisionContext& ctx,
                        const std::string& seed_label) {
  auto run = theta_run(seed, last_index + 1, ctx);
  const auto& digits = run.expansion.digits();
  const auto& conv = run.expansion.convergents();

  // For exact seeds the pipeline has no finite precision; size the oracle
  // so q_{N+2}^2 is resolved with margin.
  int bits = std::max<int>(run.bits, static_cast<int>(2 * bit_length(conv.back().q)) + 64);

  OracleReport report;
  report.seed = seed_label.empty() ? seed.describe() : seed_label;
  report.from = 0;
  report.to = last_index;
  report.oracle_bits = kOracleFactor * bits;

  auto x0 = seed.enclosure(kOracleFactor * bits);
  auto oracle_digits =
      common_digits(x0.lower().to_rational(), x0.upper().to_rational(), last_index + 1);

  std::vector<Real> thetas;
  for (const auto& t : run.thetas) thetas.push_back(t.value);

  std::optional<Reconstruction> recon;
  if (last_index >= 1) {
    recon = reconstruct(thetas[0], thetas[1], 0, 0, last_index - 1, ctx);
  }

  for (std::size_t n = 0; n <= last_index; ++n) {
    OracleEntry e{n,
                  brute_theta(seed, n, bits),
                  thetas[n].enclose(bits),
                  false,
                  digits[n],
                  std::nullopt,
                  std::nullopt,
                  false,
                  false,
                  std::nullopt};
    e.theta_overlap = overlaps(e.oracle_theta, e.pipeline_theta);
    e.digit_oracle_match = n < oracle_digits.size() && oracle_digits[n] == digits[n];

    bool match = true;
    if (n >= 1) {
      try {
        e.digit_past_pair = digit_from_pair(thetas[n - 1], thetas[n]);
      } catch (const Error&) {
      }
      try {
        e.digit_future_pair = digit_from_pair(thetas[n + 1], thetas[n]);
      } catch (const Error&) {
      }
      e.edge = n == 1 && digits[0] == 1;
      match = e.digit_past_pair == digits[n] && (e.edge || e.digit_future_pair == digits[n]);
    }
    e.digit_match = match;

    if (recon) {
      std::size_t i = n - recon->first_theta_index;
      if (i < recon->thetas.size()) e.reconstruct_overlap = consistent(recon->thetas[i], thetas[n]);
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace cfsym::oracle
