#include "doctest.h"

#include <vector>

#include "oracles.hpp"
#include "polyapery/mpl.hpp"
#include "polyapery/stuffle.hpp"
#include "testkit.hpp"

using namespace polyapery;
using testkit::agrees;
using testkit::value;

TEST_SUITE("mpl") {

TEST_CASE("classical polylogarithms") {
  const auto ctx = make_context(45);
  CHECK(li(2, value("0", ctx), ctx).value.is_zero());
  CHECK(li(5, value("0", ctx), ctx).value.is_zero());
  CHECK(agrees(li(2, value("1/2", ctx), ctx), oracle::li2_half, 45));
  CHECK(agrees(li(3, value("-1/2", ctx), ctx), oracle::li3_mhalf, 45));
  CHECK(agrees(li(4, value("3/10", ctx), ctx), oracle::li4_3_10, 45));
  CHECK(agrees(li(5, value("9/10", ctx), ctx), oracle::li5_9_10, 45));
  CHECK(agrees(li(2, value("-1", ctx), ctx), oracle::li2_m1, 45));
  CHECK(li(2, value("9/10", ctx), ctx).error < testkit::tenth_power(45));
}

TEST_CASE("golden-ratio dilogarithm values") {
  const auto ctx = make_context(40);
  const CertifiedReal p = pi(ctx);
  const GoldenRatio g = golden_ratio(ctx);
  const CertifiedReal l2 = g.log_phi * g.log_phi;
  CHECK(agrees(li(2, g.phi, ctx), scale(p * p, mpq_class(1, 10)) - l2, 40));
  CHECK(agrees(li(2, g.phi_squared, ctx), scale(p * p, mpq_class(1, 15)) - l2, 40));
  const CertifiedReal l3 = pow(g.log_phi, 3);
  CHECK(agrees(li(3, g.phi_squared, ctx),
               scale(zeta_int(3, ctx), mpq_class(4, 5)) - scale(l3, mpq_class(2, 3)) +
                   scale(p * p * g.log_phi, mpq_class(2, 15)),
               40));
}

TEST_CASE("depth one agrees with li") {
  const auto ctx = make_context(35);
  for (int k : {2, 3, 4}) {
    for (const char* x : {"gf", "-gf", "gf^2", "-gf^2", "3/10"}) {
      const CertifiedReal arg = value(x, ctx);
      const std::vector<CertifiedReal> args{arg};
      CHECK(agrees(mpl(Composition{k}, args, ctx), li(k, arg, ctx), 35));
      CHECK(agrees(mpl_single(Composition{k}, arg, ctx), li(k, arg, ctx), 35));
    }
  }
}

TEST_CASE("multiple zeta values") {
  const auto ctx = make_context(40);
  const CertifiedReal p4 = pow(pi(ctx), 4);
  CHECK(agrees(mzv(Composition{4}, ctx), scale(p4, mpq_class(1, 90)), 40));
  CHECK(agrees(mzv(Composition{3, 1}, ctx), scale(p4, mpq_class(1, 360)), 40));
  CHECK(agrees(mzv(Composition{2, 1}, ctx), oracle::zeta3, 40));
  CHECK(agrees(mzv(Composition{3, 1, 1}, ctx), oracle::zeta_3_1_1, 40));
  CHECK(agrees(mzv(Composition{4, 2}, ctx), oracle::zeta_4_2, 40));
  CHECK_THROWS_AS(mzv(Composition{1, 1}, ctx), DomainError);
  CHECK_THROWS_AS(mzv(Composition{1}, ctx), DomainError);
}

TEST_CASE("unit-modulus prefixes") {
  const auto ctx = make_context(40);
  const std::vector<CertifiedReal> mm{value("-1", ctx), value("-1", ctx)};
  CHECK(agrees(mpl(Composition{2, 1}, mm, ctx), oracle::li21_m1_m1, 40));
  CHECK(agrees(mpl(Composition{1, 2}, mm, ctx), oracle::li12_m1_m1, 40));
  const std::vector<CertifiedReal> h{value("gf^2", ctx), value("-1", ctx)};
  CHECK(agrees(mpl(Composition{1, 3}, h, ctx), oracle::li13_phi2_m1, 40));
  const std::vector<CertifiedReal> divergent{value("1", ctx), value("1", ctx)};
  CHECK_THROWS_AS(mpl(Composition{1, 1}, divergent, ctx), DomainError);
  const std::vector<CertifiedReal> outside{value("3/2", ctx), value("1/2", ctx)};
  CHECK_THROWS_AS(mpl(Composition{2, 1}, outside, ctx), DomainError);
}

TEST_CASE("golden-ratio depth two values") {
  const auto ctx = make_context(40);
  const GoldenRatio g = golden_ratio(ctx);
  const CertifiedReal p = pi(ctx);
  // Li_{2,1}(gf^2) = zeta(3) + (pi^2/10) ln gf - Li_3(gf)
  CHECK(agrees(mpl_single(Composition{2, 1}, g.phi_squared, ctx),
               zeta_int(3, ctx) + scale(p * p * g.log_phi, mpq_class(1, 10)) - li(3, g.phi, ctx), 40));
  // Li_{3,1}(gf) + Li_{3,1}(gf^2)
  const CertifiedReal lhs =
      mpl_single(Composition{3, 1}, g.phi, ctx) + mpl_single(Composition{3, 1}, g.phi_squared, ctx);
  const CertifiedReal rhs = scale(pow(p, 4), mpq_class(1, 360)) + scale(p * p * pow(g.log_phi, 2), mpq_class(1, 5)) -
                            scale(pow(g.log_phi, 4), mpq_class(1, 3)) - g.log_phi * li(3, g.phi, ctx) * 2 +
                            scale(g.log_phi * zeta_int(3, ctx), mpq_class(11, 5));
  CHECK(agrees(lhs, rhs, 40));
}

TEST_CASE("stuffle product of dilogarithms") {
  const auto ctx = make_context(40);
  const CertifiedReal x = value("2/5", ctx);
  const CertifiedReal l2 = li(2, x, ctx);
  const std::vector<CertifiedReal> xx{x, x};
  // interleavings carry (x, x), the collision term the product x^2
  const FormalSum p = quasi_shuffle(Composition{2}, Composition{2});
  REQUIRE(p.size() == 2);
  const CertifiedReal expanded = mpl(Composition{2, 2}, xx, ctx) * p.coefficient(Composition{2, 2}) +
                                 li(4, x * x, ctx) * p.coefficient(Composition{4});
  CHECK(agrees(l2 * l2, expanded, 40));
}

TEST_CASE("nielsen polylogarithms") {
  const auto ctx = make_context(40);
  CHECK(nielsen(2, 3, value("0", ctx), ctx).value.is_zero());
  CHECK(agrees(nielsen(1, 1, value("1/2", ctx), ctx), oracle::li2_half, 40));
  CHECK(agrees(nielsen(2, 2, value("3/10", ctx), ctx), oracle::S22_3_10, 40));
  CHECK(agrees(nielsen(1, 3, value("gf^2", ctx), ctx), oracle::S13_phi2, 40));
  CHECK(agrees(nielsen(1, 2, value("1", ctx), ctx), oracle::zeta3, 40));
  CHECK_THROWS_AS(nielsen(1, 2, value("-1/2", ctx), ctx), DomainError);
  CHECK_THROWS_AS(nielsen(1, 2, value("3/2", ctx), ctx), DomainError);
}

TEST_CASE("tail bounds are sound") {
  const auto r = testkit::mpl_tail_soundness(50, 20261016);
  INFO(r.detail);
  CHECK(r.ok);
  CHECK(r.checked == 50);
}

TEST_CASE("tail bound formula") {
  CHECK(mpl_tail_bound(Real(0.5, 64), 2, 1, 10) > 0);
  CHECK(mpl_tail_bound(Real(0.5, 64), 2, 1, 100) < mpl_tail_bound(Real(0.5, 64), 2, 1, 10));
  CHECK_FALSE(mpl_tail_bound(Real(0.999, 64), 1, 3, 1).is_finite());
}

}
