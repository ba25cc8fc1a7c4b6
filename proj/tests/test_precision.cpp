#include "doctest.h"

#include "oracles.hpp"
#include "polyapery/precision.hpp"
#include "testkit.hpp"

using namespace polyapery;
using testkit::agrees;

TEST_SUITE("precision") {

TEST_CASE("context sizing") {
  const auto ctx = make_context(50);
  CHECK(ctx.working_bits() >= 167 + kDefaultGuardBits);
  CHECK(ctx.target_digits() == 50);
  CHECK(ctx.epsilon() < testkit::tenth_power(52));
  CHECK(ctx.epsilon() > 0);

  const auto tiny = make_context(1);
  CHECK(tiny.working_bits() >= 4 + kDefaultGuardBits);

  CHECK_THROWS_AS(make_context(10'000'000), CapacityError);
  CHECK_THROWS_AS(make_context(0), CapacityError);
  CHECK(make_context(30).with_extra_guard(16).working_bits() == make_context(30).working_bits() + 16);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == mpq_class(-1, 2));
  CHECK(bernoulli(2) == mpq_class(1, 6));
  CHECK(bernoulli(4) == mpq_class(-1, 30));
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
  for (long n = 3; n <= 21; n += 2) CHECK(bernoulli(n) == 0);
  const auto table = bernoulli_table(20);
  REQUIRE(table.size() == 21);
  for (long n = 0; n <= 20; ++n) CHECK(table[n] == bernoulli(n));
}

TEST_CASE("even zeta values and Euler-Maclaurin") {
  const auto ctx = make_context(40);
  const CertifiedReal p = pi(ctx);
  CHECK(agrees(zeta_even(1, ctx), p * p / CertifiedReal::exact(6, ctx.working_bits()), 40));
  CHECK(agrees(zeta_even(2, ctx), pow(p, 4) / CertifiedReal::exact(90, ctx.working_bits()), 40));
  CHECK(agrees(zeta_even(3, ctx), pow(p, 6) / CertifiedReal::exact(945, ctx.working_bits()), 40));
  CHECK(agrees(zeta_int(2, ctx), zeta_even(1, ctx), 40));
  CHECK(agrees(zeta_int(3, ctx), oracle::zeta3, 40));
  CHECK(agrees(zeta_int(5, ctx), oracle::zeta5, 40));
  CHECK(zeta_int(3, ctx).error < testkit::tenth_power(40));
  CHECK_THROWS_AS(zeta_int(1, ctx), DomainError);
  CHECK_THROWS_AS(zeta_int(0, ctx), DomainError);
}

TEST_CASE("golden ratio") {
  const auto ctx = make_context(50);
  const GoldenRatio g = golden_ratio(ctx);
  const CertifiedReal one = CertifiedReal::exact(1, ctx.working_bits());
  CHECK(abs((g.phi_squared + g.phi - one).value) < testkit::tenth_power(48));
  CHECK(agrees(one - g.phi_squared, g.phi, 48));
  CHECK(agrees(g.phi, oracle::phi, 48));
  CHECK(g.phi.value > Real(0.6, 64));
  CHECK(g.phi.value < Real(0.62, 64));
  CHECK(g.log_phi.value.sign() < 0);
  CHECK(agrees(g.log_phi, log(g.phi), 48));
}

TEST_CASE("error bounds cover the value at doubled precision") {
  const auto lo = make_context(25);
  const auto hi = make_context(50);
  auto compute = [](const PrecisionContext& ctx) {
    const CertifiedReal p = pi(ctx);
    const CertifiedReal third = CertifiedReal::from_rational(mpq_class(1, 3), ctx.working_bits());
    return log(sqrt(p) * third + pow(p, 3) / CertifiedReal::exact(7, ctx.working_bits())) - zeta_int(3, ctx);
  };
  const CertifiedReal a = compute(lo);
  const CertifiedReal b = compute(hi);
  CHECK(abs(a.value - b.value) <= upward::add(a.error, b.error));
  CHECK(a.error < testkit::tenth_power(25));
}

TEST_CASE("log rejects enclosures touching zero") {
  const auto ctx = make_context(20);
  CHECK_THROWS_AS(log(CertifiedReal::exact(0, ctx.working_bits())), DomainError);
  CHECK_THROWS_AS(log(CertifiedReal::exact(-2, ctx.working_bits())), DomainError);
}

}
