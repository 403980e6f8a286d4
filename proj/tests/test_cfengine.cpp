#include "pi_reference.hpp"
#include "support.hpp"

#include "cfsym/cfengine.hpp"
#include "cfsym/errors.hpp"
#include "cfsym/oracle.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace cfsym;
using support::dec;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Invariants every expansion state must satisfy.
void check_state_invariants(const ContinuedFractionState& st) {
  const auto& a = st.digits();
  const auto& c = st.convergents();
  REQUIRE(c.size() == a.size() + 1);
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] >= 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), c[k].p.get_mpz_t(), c[k].q.get_mpz_t());
    CHECK(g == 1);
    if (k >= 2) CHECK(c[k].q > c[k - 1].q);
  }
  auto x = st.future().enclose(128);
  CHECK(x.lower() > Dyadic(0));
  CHECK(x.upper() < Dyadic(1));
  if (st.n() >= 1) {
    REQUIRE(st.past());
    CHECK(*st.past() == past_of_prefix(a));
    // y_1 = -a_1 sits on the edge y = -1 when a_1 = 1.
    if (st.n() >= 2 || a[0] >= 2)
      CHECK(*st.past() < -1);
    else
      CHECK(*st.past() == -1);
  }
}

}  // namespace

TEST_CASE("gauss_step examples") {
  ContinuedFractionState s0(support::share(support::sqrt2_seed()));
  auto s1 = gauss_step(s0);
  CHECK(s1.digits() == ints({2}));
  CHECK(*s1.future().exact() == QuadraticNumber(QuadraticSurd(-1, 2, 1)));

  ContinuedFractionState p0(support::share(support::pi_seed()));
  CHECK(gauss_step(p0).digits() == ints({7}));
  CHECK(support::near(gauss_step(p0).future(), pi_reference::kX1, support::ref_tol(), 128));

  // Golden ratio: convergents follow the Fibonacci numbers p_k = F_k, q_k = F_{k+1}.
  ContinuedFractionState g(support::share(support::golden_seed()));
  for (int i = 0; i < 4; ++i) g = gauss_step(g);
  CHECK(g.digits() == ints({1, 1, 1, 1}));
  std::vector<BigInt> fib{0, 1};
  while (fib.size() < 8) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  for (std::size_t k = 0; k <= 4; ++k) {
    CHECK(g.convergents()[k].p == fib[k]);
    CHECK(g.convergents()[k].q == fib[k + 1]);
  }
  std::vector<BigInt> q14;
  for (std::size_t k = 1; k <= 4; ++k) q14.push_back(g.convergents()[k].q);
  CHECK(q14 == ints({1, 2, 3, 5}));
}

TEST_CASE("expand pi - 3") {
  auto st = expand(support::pi_seed(), 13);
  CHECK(st.digits() == ints({7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14, 2}));
  auto c = expand(support::pi_seed(), 10).convergents();
  std::vector<Convergent> want{{0, 1},         {1, 7},         {15, 106},      {16, 113},
                               {4687, 33102},  {4703, 33215},  {9390, 66317},  {14093, 99532},
                               {37576, 265381}, {51669, 364913}};
  CHECK(std::vector<Convergent>(c.begin(), c.begin() + 10) == want);
  check_state_invariants(st);
}

TEST_CASE("expand surds") {
  CHECK(expand(support::sqrt2_seed(), 5).digits() == ints({2, 2, 2, 2, 2}));
  CHECK(expand(support::sqrt7_seed(), 7).digits() == ints({4, 1, 1, 1, 4, 1, 1}));
  CHECK_THROWS_AS(Seed::surd(QuadraticSurd(0, 2, 1)), DomainError);
}

TEST_CASE("decimal seeds run out of digits") {
  // 20 digits pin only the first dozen or so partial quotients.
  auto seed = Seed::decimal("0.14159265358979323846");
  auto pe = expand_partial(seed, 60);
  REQUIRE(pe.stopped);
  CHECK(pe.state.n() >= 10);
  CHECK(pe.state.n() < 60);
  for (std::size_t k = 0; k < std::min<std::size_t>(pe.state.n(), 14); ++k)
    CHECK(pe.state.digits()[k] == pi_reference::kDigits[k]);
  try {
    expand(seed, 60);
    FAIL("expected PrecisionExhausted");
  } catch (const PrecisionExhausted& e) {
    REQUIRE(e.index());
    CHECK(*e.index() == pe.state.n());
  }
  CHECK_THROWS_AS(Seed::decimal("1.5"), DomainError);
  CHECK_THROWS_AS(Seed::decimal("0.0"), DomainError);
  CHECK_THROWS_AS(Seed::decimal("abc"), DomainError);
}

TEST_CASE("past_of_prefix") {
  CHECK(past_of_prefix(ints({7})) == BigRational(-7));
  CHECK(past_of_prefix(ints({7, 15})) == BigRational(-106, 7));
  CHECK(past_of_prefix(ints({1, 1, 1})) == BigRational(-3, 2));
}

TEST_CASE("natural extension") {
  Real x = QuadraticSurd(-1, 2, 1), y = QuadraticSurd(1, 2, -1);  // -1 - sqrt2
  auto [x1, y1] = natural_extension_step(x, y);
  CHECK(*x1.exact() == *x.exact());
  CHECK(*y1.exact() == *y.exact());

  Real gx = QuadraticSurd(-1, 5, 2), gy = QuadraticSurd(1, 5, -2);  // -(1+sqrt5)/2
  auto [gx1, gy1] = natural_extension_step(gx, gy);
  CHECK(*gx1.exact() == *gx.exact());
  CHECK(*gy1.exact() == *gy.exact());

  auto st = expand(support::pi_seed(), 1);
  auto [px2, py2] = natural_extension_step(st.future(), Real::rational(*st.past()));
  CHECK(*py2.exact() == QuadraticNumber(BigRational(-106, 7)));
  CHECK(overlaps(px2.enclose(), expand(support::pi_seed(), 2).future().enclose()));

  CHECK_THROWS_AS(natural_extension_step(x, Real(-1)), DomainError);
  auto golden1 = expand(support::golden_seed(), 1);
  CHECK(*golden1.past() == -1);
  CHECK_THROWS_AS(natural_extension_step(golden1.future(), Real(-1)), DomainError);
  CHECK_THROWS_AS(natural_extension_step(Real(2), y), DomainError);
}

TEST_CASE("natural extension reproduces expand") {
  for (auto seed : {support::sqrt7_seed(), support::golden_seed(), support::pi_seed()}) {
    std::size_t n = seed.is_exact() ? 40 : 12;
    auto full = expand(seed, n);
    // Start inside Omega: y_1 = -1 when a_1 = 1.
    std::size_t start = full.digits()[0] == 1 ? 2 : 1;
    auto st = expand(seed, start);
    Real x = st.future(), y = Real::rational(*st.past());
    for (std::size_t k = start + 1; k <= n; ++k) {
      std::tie(x, y) = natural_extension_step(x, y);
      auto at_k = expand(seed, k);
      CHECK(consistent(x, at_k.future()));
      CHECK(*y.exact() == QuadraticNumber(*at_k.past()));
    }
    CHECK(consistent(x, full.future()));
  }
}

TEST_CASE("state invariants over random surds") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 60; ++i) {
    auto seed = Seed::surd(support::random_surd(rng));
    auto st = expand(seed, 30);
    check_state_invariants(st);
    const auto& c = st.convergents();
    auto x0 = *seed.exact();
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
      // |x0 - p/q| < 1/(q_k q_{k+1}), exactly in the surd's field
      QuadraticNumber diff = *QuadraticNumber::add(QuadraticNumber(x0),
                                                   QuadraticNumber(BigRational(-c[k].p, c[k].q)));
      QuadraticNumber slack = *QuadraticNumber::add(
          QuadraticNumber(BigRational(1, c[k].q * c[k + 1].q)),
          diff.sign() < 0 ? diff : diff.negated());
      CHECK(slack.sign() > 0);
    }
    for (std::size_t k = 1; k <= st.n(); ++k)
      CHECK(future_at(seed, c, k, 128).exact() != nullptr);
  }
}

TEST_CASE("future_at agrees with the stepped state") {
  auto st = expand(support::pi_seed(), 12);
  auto f = future_at(support::pi_seed(), st.convergents(), 12, 256);
  CHECK(consistent(f, st.future()));
  auto sq = expand(support::sqrt7_seed(), 9);
  CHECK(*future_at(support::sqrt7_seed(), sq.convergents(), 9, 128).exact() == *sq.future().exact());
}

TEST_CASE("periodicity of sqrt(D) - floor(sqrt(D))") {
  int seeds = 0;
  for (long d = 2; seeds < 100; ++d) {
    if (is_perfect_square(BigInt(d))) continue;
    ++seeds;
    BigInt r = isqrt(BigInt(d));
    QuadraticSurd x(-r, d, 1);
    auto per = detect_period(x, 2000);
    REQUIRE(per);
    // Its conjugate -sqrt(D) - r is below -1, so the expansion is purely periodic.
    CHECK(per->period >= 1);
    CHECK(per->preperiod == 0);
    auto digits = expand(Seed::surd(x), per->preperiod + 2 * per->period).digits();
    for (std::size_t k = per->preperiod; k < per->preperiod + per->period; ++k)
      CHECK(digits[k] == digits[k + per->period]);
  }
  CHECK(detect_period(QuadraticSurd(-1, 2, 1), 10)->period == 1);
  CHECK(detect_period(QuadraticSurd(-2, 7, 3), 20)->period == 4);
}
