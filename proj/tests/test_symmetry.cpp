#include "pi_reference.hpp"
#include "support.hpp"

#include "cfsym/errors.hpp"
#include "cfsym/jager.hpp"
#include "cfsym/symmetry.hpp"

#include <doctest.h>

#include <random>

using namespace cfsym;
using support::dec;

namespace {

std::vector<Real> values(const std::vector<ThetaValue>& th) {
  std::vector<Real> out;
  for (const auto& t : th) out.push_back(t.value);
  return out;
}

Real r(const char* s) { return Real::rational(dec(s)); }

BigRational pow10(int e) {
  BigInt d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, -e);
  return BigRational(BigInt(1), d);
}

// A four-decimal value known only to within one unit in the last place.
Real ulp4(const char* s) {
  return RigorousReal::from_rational_bounds(dec(s) - pow10(-4), dec(s) + pow10(-4), 128);
}

}  // namespace

TEST_CASE("digit_from_pair") {
  auto g = values(theta_sequence(support::golden_seed(), 6));
  for (std::size_t n = 2; n <= 5; ++n) {
    CHECK(digit_from_pair(g[n - 1], g[n]) == 1);
    CHECK(digit_from_pair(g[n + 1], g[n]) == 1);
    if (n >= 3) CHECK(digit_from_past_side(g[n - 1], g[n]) == 1);
  }
  // The past-side a_2 is shifted by one when a_1 = 1.
  CHECK_THROWS_AS(digit_from_past_side(g[1], g[2]), RegionViolation);
  // theta_0 + theta_1 = 1 for the golden seed; the future-pair form lands
  // exactly on 2 there.
  CHECK(digit_from_pair(g[0], g[1]) == 1);
  CHECK_THROWS_AS(digit_from_pair(g[2], g[1]), RegionViolation);

  auto p = values(theta_sequence(support::pi_seed(), 5));
  CHECK(digit_from_pair(p[2], p[3]) == 292);
  CHECK(digit_from_pair(p[4], p[3]) == 292);
  CHECK(digit_from_pair(p[0], p[1]) == 15);
  CHECK(digit_from_past_side(p[1], p[2]) == 15);
  CHECK(digit_from_past_side(p[3], p[4]) == 292);

  // Four-decimal bounds are too coarse near the large quotient.
  CHECK(digit_from_pair(r("0.9351"), r("0.0034")) == 293);
  CHECK(digit_from_pair(r("0.9351"), r("0.0035")) == 284);

  CHECK_THROWS_AS(digit_from_pair(r("0.6"), r("0.5")), DomainError);
  CHECK_THROWS_AS(digit_from_pair(r("0.5"), r("0.5")), DomainError);
  Real fuzzy = RigorousReal::from_rational_bounds(dec("0.3"), dec("0.4"), 64);
  CHECK_THROWS_AS(digit_from_pair(r("0.2"), fuzzy), InsufficientPrecision);
}

TEST_CASE("dk_step") {
  Real g = QuadraticSurd(0, 5, 5);  // 1/sqrt5
  CHECK(*dk_step(g, g, BigInt(1)).exact() == *g.exact());

  auto p = values(theta_sequence(support::pi_seed(), 4));
  auto t2 = dk_step(p[0], p[1], BigInt(15));
  CHECK(certified_ceil_decimal(t2, 4) == "0.9351");
  CHECK(support::near(t2, pi_reference::kTheta[2], support::ref_tol(), 128));
  CHECK(support::near(dk_step(p[4], p[3], BigInt(292)), pi_reference::kTheta[2], support::ref_tol(),
                      128));

  auto once = dk_step(r("0.2"), r("0.3"), BigInt(1));
  CHECK(support::near(once, "0.7717797887081347104473963967719231318274", pow10(-38)));
  // sqrt(1 - 0.24) > 2 * 0.3: off the involutive branch, the second
  // application gives t + 2 a s - 4 a^2 c instead of t.
  auto twice = dk_step(once, r("0.3"), BigInt(1));
  Real closed = r("0.2") + Real(2) * sqrt(r("0.76")) - r("1.2");
  CHECK(consistent(twice, closed));
  CHECK_FALSE(consistent(twice, r("0.2")));
  CHECK(certainly_less(twice, r("0.7436")));
  CHECK(certainly_less(r("0.7435"), twice));

  CHECK_THROWS_AS(dk_step(r("0.6"), r("0.5"), BigInt(1)), DomainError);
}

TEST_CASE("step forward and backward") {
  auto p = values(theta_sequence(support::pi_seed(), 6));
  auto fwd = step(ThetaPair{p[2], p[3], Direction::forward});
  CHECK(fwd.digit == 292);
  CHECK(support::near(fwd.theta, pi_reference::kTheta[4], support::ref_tol(), 128));
  auto bwd = step(ThetaPair{p[4], p[3], Direction::backward});
  CHECK(bwd.digit == 292);
  CHECK(support::near(bwd.theta, pi_reference::kTheta[2], support::ref_tol(), 128));
  auto plain = step(p[5], p[6]);
  CHECK(plain.digit == 1);
  CHECK(support::near(plain.theta, pi_reference::kTheta[7], support::ref_tol(), 128));
}

TEST_CASE("reconstruct pi - 3 from (theta_8, theta_9)") {
  auto p = values(theta_sequence(support::pi_seed(), 13));
  auto rec = reconstruct(p[8], p[9], 8, 8, 4);
  REQUIRE(rec.complete());
  CHECK(rec.first_theta_index == 0);
  REQUIRE(rec.thetas.size() == 14);
  for (std::size_t n = 0; n < rec.thetas.size(); ++n) {
    CAPTURE(n);
    CHECK(support::near(rec.thetas[n], pi_reference::kTheta[n], pow10(-40), 128));
  }
  REQUIRE(rec.digits.size() == 12);
  for (std::size_t i = 0; i < rec.digits.size(); ++i) {
    CHECK(rec.digits[i].index == i + 2);
    CHECK(rec.digits[i].value == pi_reference::kDigits[i + 1]);
  }

  auto clamped = reconstruct(p[2], p[3], 2, 50, 0);
  CHECK(clamped.first_theta_index == 0);
  CHECK(clamped.thetas.size() == 4);
}

TEST_CASE("reconstruct the golden seed exactly") {
  auto g = values(theta_sequence(support::golden_seed(), 1));
  auto rec = reconstruct(g[0], g[1], 0, 0, 20);
  REQUIRE(rec.complete());
  REQUIRE(rec.thetas.size() == 22);
  auto direct = values(theta_sequence(support::golden_seed(), 21));
  for (std::size_t n = 0; n < direct.size(); ++n) {
    REQUIRE(rec.thetas[n].is_exact());
    CHECK(*rec.thetas[n].exact() == *direct[n].exact());
  }
  for (const auto& d : rec.digits) CHECK(d.value == 1);

  // Walking back from (theta_1, theta_2) hits the boundary pair and stops.
  auto back = reconstruct(direct[1], direct[2], 1, 1, 0);
  CHECK_FALSE(back.complete());
  CHECK(back.first_theta_index == 1);
}

TEST_CASE("reconstruct stops when decimals run out") {
  auto rec = reconstruct(r("0.9351"), r("0.0035"), 2, 0, 10);
  CHECK(rec.thetas.size() <= 13);
  auto coarse = reconstruct(ulp4("0.2888"), ulp4("0.6139"), 7, 0, 40);
  CHECK_FALSE(coarse.complete());
  CHECK(coarse.thetas.size() < 43);
  REQUIRE(coarse.stopped);
  CHECK_FALSE(coarse.stopped->empty());
}

TEST_CASE("digit_sequence_from_thetas") {
  auto p = values(theta_sequence(support::pi_seed(), 9));
  std::vector<BigInt> want{15, 1, 292, 1, 1, 1, 2, 1, 3};
  CHECK(digit_sequence_from_thetas(p) == want);

  auto s = values(theta_sequence(support::sqrt2_seed(), 5));
  CHECK(digit_sequence_from_thetas(s) == std::vector<BigInt>(5, BigInt(2)));

  Real g = QuadraticSurd(0, 5, 5);
  std::vector<Real> flat(8, g);
  CHECK(digit_sequence_from_thetas(flat) == std::vector<BigInt>(7, BigInt(1)));

  auto golden = values(theta_sequence(support::golden_seed(), 10));
  CHECK(digit_sequence_from_thetas(golden) == std::vector<BigInt>(10, BigInt(1)));

  std::vector<Real> one{g};
  CHECK_THROWS_AS(digit_sequence_from_thetas(one), DomainError);
}

TEST_CASE("forward recovery over random surds") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    auto seed = Seed::surd(support::random_surd(rng));
    auto run = theta_run(seed, 30);
    auto th = values(run.thetas);
    const auto& a = run.expansion.digits();
    auto got = digit_sequence_from_thetas(th);
    for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k] == a[k + 1]);
    for (std::size_t n = 2; n < 30; ++n) {
      CHECK(digit_from_pair(th[n + 1], th[n]) == a[n]);
      CHECK(*dk_step(th[n - 1], th[n], a[n]).exact() == *th[n + 1].exact());
      CHECK(*dk_step(th[n + 1], th[n], a[n]).exact() == *th[n - 1].exact());
    }
  }
}
