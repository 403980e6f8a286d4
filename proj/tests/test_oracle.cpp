#include "pi_reference.hpp"
#include "support.hpp"

#include "cfsym/errors.hpp"
#include "cfsym/oracle.hpp"

#include <doctest.h>

using namespace cfsym;
using support::dec;

TEST_CASE("common_digits and evaluate_finite") {
  auto d = oracle::common_digits(dec("0.1415926"), dec("0.1415927"), 20);
  REQUIRE(d.size() >= 3);
  CHECK(d[0] == 7);
  CHECK(d[1] == 15);
  CHECK(d[2] == 1);
  CHECK(oracle::evaluate_finite({7, 15, 1, 292}, 2) == BigRational(15, 106));
  CHECK(oracle::evaluate_finite({7, 15, 1, 292}, 0) == 0);
  CHECK(oracle::common_digits(dec("0.2"), dec("0.8"), 5).empty());
}

TEST_CASE("brute_theta") {
  auto pi = support::pi_seed();
  auto t3 = oracle::brute_theta(pi, 3, 128);
  CHECK(t3.upper() < Dyadic::from_rational(dec("0.0035"), 64, Round::up));
  CHECK(t3.lower() > Dyadic::from_rational(dec("0.0034"), 64, Round::down));
  for (std::size_t n = 0; n < 14; ++n)
    CHECK(support::near(Real(oracle::brute_theta(pi, n, 128)), pi_reference::kTheta[n],
                        support::ref_tol(), 128));

  auto g0 = oracle::brute_theta(support::golden_seed(), 1, 64);
  BigRational lo = g0.lower().to_rational(), hi = g0.upper().to_rational();
  // (3 - sqrt5)/2 lies in [lo, hi]  <=>  (3 - 2 lo)^2 >= 5 >= (3 - 2 hi)^2
  CHECK((3 - 2 * lo) * (3 - 2 * lo) >= 5);
  CHECK((3 - 2 * hi) * (3 - 2 * hi) <= 5);

  // 56 decimals cannot pin a_1 .. a_200.
  CHECK_THROWS_AS(oracle::brute_theta(pi, 200, 128), PrecisionExhausted);
}

TEST_CASE("crosscheck pi - 3 and the golden seed") {
  auto rp = oracle::crosscheck(support::pi_seed(), 12, {}, "pi-3");
  CHECK(rp.all_ok());
  CHECK(rp.entries.size() == 13);
  auto j = rp.to_json();
  CHECK(j["seed"] == "pi-3");
  CHECK(j["entries"].size() == 13);
  for (const char* key : {"n", "overlap", "digits", "oracle", "pipeline", "edge"})
    CHECK(j["entries"][0].contains(key));

  auto rg = oracle::crosscheck(support::golden_seed(), 50);
  CHECK(rg.all_ok());
  CHECK(rg.entries[1].edge);
  CHECK_FALSE(rg.entries[2].edge);
  for (const auto& e : rg.entries) CHECK(e.digit_expand == 1);
}

TEST_CASE("crosscheck sqrt(D) - floor(sqrt(D))") {
  for (long d = 2; d <= 50; ++d) {
    if (is_perfect_square(BigInt(d))) continue;
    CAPTURE(d);
    QuadraticSurd x(-isqrt(BigInt(d)), d, 1);
    auto rep = oracle::crosscheck(Seed::surd(x), 100);
    CHECK(rep.all_ok());
  }
}
