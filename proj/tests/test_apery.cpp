#include "doctest.h"

#include "oracles.hpp"
#include "polyapery/apery.hpp"
#include "testkit.hpp"

using namespace polyapery;
using testkit::agrees;
using testkit::value;

namespace {

CertifiedReal sum(const char* u, int s, const char* weight, const PrecisionContext& ctx) {
  return apery_sum(AperySumSpec{value(u, ctx), s, HarmonicWeight::parse(weight)}, ctx);
}

mpz_class factorial(long n) {
  mpz_class f = 1;
  for (long k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST_SUITE("apery") {

TEST_CASE("harmonic tables") {
  const auto exact = harmonic_tables_exact(5);
  CHECK(exact.h[3] == mpq_class(11, 6));
  CHECK(exact.h2[2] == mpq_class(5, 4));
  CHECK(exact.z11[2] == mpq_class(1, 2));
  mpq_class brute = 0;
  for (long k = 1; k <= 5; ++k) {
    for (long j = 1; j < k; ++j) brute += mpq_class(1, k * j);
  }
  CHECK(exact.z11[5] == brute);
  CHECK(exact.z11[5] == mpq_class(15, 8));

  const auto ctx = make_context(30);
  const auto real = harmonic_tables(100, ctx);
  const auto ref = harmonic_tables_exact(100);
  for (long n : {1L, 17L, 100L}) {
    CHECK(testkit::agrees(real.h[n], Real(ref.h[n], 200), 30));
    CHECK(testkit::agrees(real.h2[n], Real(ref.h2[n], 200), 30));
    CHECK(testkit::agrees(real.z11[n], Real(ref.z11[n], 200), 30));
  }
  CHECK_THROWS_AS(harmonic_tables_exact(kMaxExactHarmonicTable + 1), CapacityError);
}

TEST_CASE("central binomial coefficients") {
  CHECK(central_binomial(0) == 1);
  CHECK(central_binomial(1) == 2);
  CHECK(central_binomial(5) == 252);
  CHECK(central_binomial(30) == factorial(60) / (factorial(30) * factorial(30)));
  CHECK(central_binomial(30) == mpz_class("118264581564861424"));
}

TEST_CASE("weight parsing") {
  const auto w = HarmonicWeight::parse("10*H(n) - 3/n");
  CHECK(w.terms().size() == 2);
  CHECK(w.log_degree() == 1);
  CHECK(HarmonicWeight::parse("3*H(n-1)^2 + 4*INV_N*H(n-1)").log_degree() == 2);
  CHECK(HarmonicWeight::parse("Z11(n-1)").log_degree() == 2);
  CHECK(HarmonicWeight::parse("H2(n-1)").log_degree() == 0);
  CHECK(HarmonicWeight::parse("H(2n-1)").needs_double_index());
  CHECK_FALSE(HarmonicWeight::parse("H(n)").needs_double_index());
  CHECK_THROWS_AS(HarmonicWeight::parse("H(3n)"), std::invalid_argument);
  CHECK_THROWS_AS(HarmonicWeight::parse(""), std::invalid_argument);
}

TEST_CASE("classical central binomial sums") {
  const auto ctx = make_context(45);
  CHECK(agrees(sum("1", 2, "1", ctx), oracle::apery_s2, 45));
  CHECK(agrees(sum("1", 4, "1", ctx), oracle::apery_s4, 45));
  CHECK(agrees(-sum("-1", 3, "1", ctx), oracle::apery_alt_s3, 45));
  CHECK(agrees(-sum("-1", 2, "1", ctx), oracle::apery_alt_s2, 45));
}

TEST_CASE("harmonic-weighted sums") {
  const auto ctx = make_context(45);
  const CertifiedReal p4 = pow(pi(ctx), 4);
  // sum H^(2)_(n-1)/(n^2 C(2n,n)) = (5/108) zeta(4)
  CHECK(agrees(sum("1", 2, "H2(n-1)", ctx), scale(p4, mpq_class(5, 108 * 90)), 45));
  // sum (-1)^n (10 H_n - 3/n)/(n^3 C(2n,n)) = -pi^4/30
  CHECK(agrees(sum("-1", 3, "10*H(n) - 3/n", ctx), scale(p4, mpq_class(-1, 30)), 45));
  CHECK(sum("0", 3, "H(n)", ctx).value.is_zero());
}

TEST_CASE("H(2n) splits into H(2n-1) and a shifted power") {
  const auto ctx = make_context(40);
  for (const char* u : {"-1", "1/2", "3"}) {
    const CertifiedReal lhs = sum(u, 3, "H(2n)", ctx);
    const CertifiedReal rhs = sum(u, 3, "H(2n-1)", ctx) + scale(sum(u, 4, "1", ctx), mpq_class(1, 2));
    CHECK(agrees(lhs, rhs, 40));
    CHECK(agrees(sum(u, 3, "H(2n) - H(2n-1)", ctx), sum(u, 3, "1/2*INV_N", ctx), 40));
  }
}

TEST_CASE("domain errors") {
  const auto ctx = make_context(20);
  CHECK_THROWS_AS(sum("4", 2, "1", ctx), DomainError);
  CHECK_THROWS_AS(sum("-5", 2, "1", ctx), DomainError);
  CHECK_THROWS_AS(sum("1", 1, "1", ctx), DomainError);
}

TEST_CASE("the y(u) substitution") {
  const auto ctx = make_context(40);
  CHECK(agrees(y_of_u(value("-1", ctx), ctx), value("gf^2", ctx), 40));
  CHECK(agrees(y_of_u(value("-2", ctx), ctx), oracle::y_m2, 40));
  for (const char* u : {"-1/2", "-3", "-7/2"}) {
    const CertifiedReal y = y_of_u(value(u, ctx), ctx);
    const CertifiedReal one = CertifiedReal::exact(1, ctx.working_bits());
    // u = -(1 - y)^2 / y
    CHECK(agrees(-(one - y) * (one - y) / y, value(u, ctx), 38));
  }
  CHECK_THROWS_AS(y_of_u(value("0", ctx), ctx), DomainError);
  CHECK_THROWS_AS(y_of_u(value("1", ctx), ctx), DomainError);
}

TEST_CASE("closed forms in y") {
  const auto ctx = make_context(40);
  for (const char* u : {"-1/2", "-2"}) {
    const CertifiedReal uu = value(u, ctx);
    const CertifiedReal diff = dk_rhs(DkKind::kH, uu, ctx) - dk_rhs(DkKind::kH2, uu, ctx);
    CHECK(agrees(diff, dk_rhs(DkKind::kDiff, uu, ctx), 38));
    CHECK(agrees(dk_rhs(DkKind::kH, uu, ctx), sum(u, 3, "H(n-1)", ctx), 38));
  }
}

TEST_CASE("tail bounds are sound") {
  const auto r = testkit::apery_tail_soundness(100, 42);
  INFO(r.detail);
  CHECK(r.ok);
  CHECK(r.checked == 100);
}

TEST_CASE("truncation") {
  const auto ctx = make_context(30);
  const AperySumSpec spec{value("1", ctx), 2, HarmonicWeight::parse("1")};
  const auto t10 = apery_truncated(spec, 10, ctx);
  const auto t30 = apery_truncated(spec, 30, ctx);
  CHECK(t30.tail_bound < t10.tail_bound);
  CHECK(abs(t30.partial - t10.partial) <= t10.tail_bound);
}

}
