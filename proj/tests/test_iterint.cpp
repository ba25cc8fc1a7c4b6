#include "doctest.h"

#include <random>
#include <vector>

#include "oracles.hpp"
#include "polyapery/iterint.hpp"
#include "polyapery/quadrature.hpp"
#include "testkit.hpp"

using namespace polyapery;
using testkit::agrees;
using testkit::value;

namespace {

IteratedWord make_word(const std::vector<const char*>& letters, const PrecisionContext& ctx) {
  std::vector<CertifiedReal> v;
  for (const char* l : letters) v.push_back(value(l, ctx));
  return IteratedWord(std::move(v));
}

}  // namespace

TEST_SUITE("iterint") {

TEST_CASE("golden-ratio words") {
  const auto ctx = make_context(40);
  const CertifiedReal g2 = value("gf^2", ctx);
  CHECK(agrees(eval_word(make_word({"0", "gf^-2", "gf^-2"}, ctx), ctx), mpl_single(Composition{2, 1}, g2, ctx), 40));
  CHECK(agrees(eval_word(make_word({"0", "0", "gf^-2", "gf^-2"}, ctx), ctx), mpl_single(Composition{3, 1}, g2, ctx),
               40));
  // zeta(3) + (pi^2/10) ln gf - Li_3(gf)
  const GoldenRatio g = golden_ratio(ctx);
  const CertifiedReal p = pi(ctx);
  CHECK(agrees(eval_word(make_word({"0", "gf^-2", "gf^-2"}, ctx), ctx),
               zeta_int(3, ctx) + scale(p * p * g.log_phi, mpq_class(1, 10)) - li(3, g.phi, ctx), 40));
}

TEST_CASE("letter conventions") {
  const auto ctx = make_context(40);
  const auto [idx, args] = mpl_from_word(make_word({"gf^-1"}, ctx));
  CHECK(idx == Composition{1});
  REQUIRE(args.size() == 1);
  CHECK(agrees(args[0], oracle::phi, 38));
  CHECK(agrees(eval_word(make_word({"2"}, ctx), ctx), log(value("2", ctx)), 40));
  CHECK(agrees(eval_word(make_word({"-1"}, ctx), ctx), -log(value("2", ctx)), 40));
}

TEST_CASE("malformed words") {
  const auto ctx = make_context(20);
  CHECK_THROWS_AS(make_word({}, ctx), DomainError);
  CHECK_THROWS_AS(make_word({"1", "2"}, ctx), DomainError);
  CHECK_THROWS_AS(make_word({"2", "0"}, ctx), DomainError);
  CHECK_THROWS_AS(make_word({"0", "1/2"}, ctx), DomainError);
  CHECK_THROWS_AS(word_from_mpl(Composition{2}, value("0", ctx)), DomainError);
}

TEST_CASE("round trip between words and mpl arguments") {
  const auto ctx = make_context(30);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> depth(1, 3);
  std::uniform_int_distribution<int> part(1, 3);
  std::uniform_int_distribution<long> num(-90, 90);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> parts;
    MplArgument args;
    const int r = depth(rng);
    for (int j = 0; j < r; ++j) {
      parts.push_back(part(rng));
      long p = num(rng);
      if (p == 0) p = 3;
      args.push_back(CertifiedReal::from_rational(mpq_class(p, 100), ctx.working_bits()));
    }
    const Composition idx(parts);
    const IteratedWord w = word_from_mpl(idx, args);
    CHECK(static_cast<int>(w.size()) == idx.weight());
    const auto [idx2, args2] = mpl_from_word(w);
    CHECK(idx2 == idx);
    REQUIRE(args2.size() == args.size());
    for (std::size_t j = 0; j < args.size(); ++j) CHECK(agrees(args2[j], args[j], 28));
    if (trial % 4 == 0) CHECK(agrees(eval_word(w, ctx), mpl(idx, args, ctx), 28));
  }
}

TEST_CASE("h_m1001 against quadrature") {
  const auto ctx = make_context(30);
  CHECK(agrees(h_m1001(value("1/5", ctx), ctx), oracle::h_0_2, 30));
  CHECK(agrees(h_m1001(value("1/2", ctx), ctx), oracle::h_0_5, 30));
  CHECK(agrees(h_m1001(value("gf^2", ctx), ctx), oracle::h_phi2, 30));
  for (const char* y : {"1/5", "1/2", "gf^2"}) {
    CHECK(agrees(h_m1001(value(y, ctx), ctx), h_m1001_integral(value(y, ctx), ctx), 30));
  }
  CHECK_THROWS_AS(h_m1001(value("1", ctx), ctx), DomainError);
  CHECK_THROWS_AS(h_m1001(value("0", ctx), ctx), DomainError);
}

TEST_CASE("quadrature") {
  const auto ctx = make_context(40);
  const mpfr_prec_t prec = ctx.working_bits();
  const CertifiedReal ln2 =
      quadrature([&](const Real& t) { return Real(1L, prec) / (Real(1L, prec) - t); }, Real(0L, prec),
                 Real(0.5, prec), ctx);
  CHECK(agrees(ln2, log(value("2", ctx)), 38));
  const CertifiedReal s = nielsen_integral(1, 2, value("3/10", ctx), ctx);
  CHECK(agrees(s, nielsen(1, 2, value("3/10", ctx), ctx), 35));
}

}
