#include "polyapery/registry.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <thread>

#include "polyapery/stuffle.hpp"

namespace polyapery {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kUncertain: return "UNCERTAIN";
  }
  return "?";
}

namespace {

namespace e = expr;

// shorthand used by the formulas below
ConstExpr q(long num, long den = 1) { return e::lit(num, den); }
ConstExpr Li(int k, const ConstExpr& x) { return e::li(k, x); }
ConstExpr Li21(const ConstExpr& x) { return e::mpl_single(Composition{2, 1}, x); }
ConstExpr Li31(const ConstExpr& x) { return e::mpl_single(Composition{3, 1}, x); }
ConstExpr ln(const ConstExpr& x) { return e::log(x); }
ConstExpr sq(const ConstExpr& x) { return e::pow(x, 2); }
ConstExpr z(int s) { return e::zeta(IntArg{s, {}, 1}); }

ParamPoint point(std::string label, std::map<std::string, ConstExpr> reals, std::map<std::string, long> ints = {}) {
  return ParamPoint{std::move(label), std::move(reals), std::move(ints)};
}

std::vector<ParamPoint> u_grid() {
  std::vector<ParamPoint> g;
  for (const char* u : {"-1/2", "-1", "-2", "-3"}) g.push_back(point(std::string("u=") + u, {{"u", parse_value(u)}}));
  return g;
}

std::vector<ParamPoint> x_grid() {
  std::vector<ParamPoint> g;
  for (const char* x : {"1/5", "1/2", "gf", "4/5"}) g.push_back(point(std::string("x=") + x, {{"x", parse_value(x)}}));
  return g;
}

// Right-hand sides in y = y(u), with every coefficient a literal node.
ConstExpr dk_h_rhs(const ConstExpr& u) {
  const ConstExpr y = e::y_of_u(u);
  const ConstExpr my = -y;
  const ConstExpr ly = ln(y);
  const ConstExpr l1 = ln(q(1) - y);
  return q(4) * e::h_m1001(y) + q(1) * Li31(sq(y)) - q(4) * Li31(y) - q(4) * Li31(my) - q(6) * Li(4, my) -
         q(2) * Li(4, y) + q(4) * Li21(my) * ly + q(4) * Li21(y) * ly - q(2) * Li21(sq(y)) * ly +
         q(4) * Li(3, my) * l1 + q(2) * Li(3, my) * ly + q(2) * Li(3, y) * ly - q(1) * Li(2, y) * sq(ly) -
         q(4) * Li(2, my) * ly * l1 - q(1, 3) * e::pow(ly, 3) * l1 + q(1, 24) * e::pow(ly, 4) +
         q(2) * z(2) * Li(2, y) - q(1, 2) * z(2) * sq(ly) + q(2) * z(2) * ly * l1 + q(6) * z(3) * l1 -
         q(3) * z(3) * ly - q(4) * z(4);
}

ConstExpr dk_h2_rhs(const ConstExpr& u) {
  const ConstExpr y = e::y_of_u(u);
  const ConstExpr my = -y;
  const ConstExpr ly = ln(y);
  const ConstExpr l1 = ln(q(1) - y);
  return q(4) * e::h_m1001(y) + q(1) * Li31(sq(y)) - q(8) * Li31(y) - q(4) * Li31(my) - q(6) * Li(4, my) +
         q(2) * Li(4, y) - q(1) * sq(Li(2, y)) + q(4) * Li21(my) * ly + q(8) * Li21(y) * ly -
         q(2) * Li21(sq(y)) * ly + q(1, 48) * e::pow(ly, 4) + q(4) * Li(3, my) * l1 - q(4) * Li(3, y) * l1 +
         q(2) * Li(3, my) * ly - q(4) * Li(2, my) * ly * l1 + q(2) * Li(2, y) * ly * l1 -
         q(1, 2) * Li(2, y) * sq(ly) - q(1, 6) * e::pow(ly, 3) * l1 + q(4) * z(2) * ly * l1 -
         q(1) * z(2) * sq(ly) + q(10) * z(3) * l1 - q(5) * z(3) * ly + q(4) * z(2) * Li(2, y) -
         q(19, 2) * z(4);
}

ConstExpr dk_diff_rhs(const ConstExpr& u) {
  const ConstExpr y = e::y_of_u(u);
  const ConstExpr ly = ln(y);
  const ConstExpr l1 = ln(q(1) - y);
  return q(4) * Li31(y) - q(4) * Li(4, y) + q(1) * sq(Li(2, y)) - q(4) * Li21(y) * ly + q(2) * Li(3, y) * ly -
         q(1, 2) * Li(2, y) * sq(ly) + q(4) * Li(3, y) * l1 - q(2) * Li(2, y) * ly * l1 -
         q(1, 6) * e::pow(ly, 3) * l1 + q(1, 48) * e::pow(ly, 4) - q(2) * z(2) * Li(2, y) +
         q(1, 2) * z(2) * sq(ly) - q(2) * z(2) * ly * l1 - q(4) * z(3) * l1 + q(2) * z(3) * ly + q(11, 2) * z(4);
}

// Li_3(1) - Li_3(1-x) + Li_2(1) ln(1-x) - ln(x) ln^2(1-x) / 2
ConstExpr li3_star(const ConstExpr& x) {
  return z(3) - Li(3, q(1) - x) + z(2) * ln(q(1) - x) - q(1, 2) * ln(x) * sq(ln(q(1) - x));
}

std::vector<IdentityRecord> build() {
  std::vector<IdentityRecord> r;
  const ConstExpr g = e::gf();
  const ConstExpr g2 = sq(g);
  const ConstExpr lg = e::ln_gf();
  const ConstExpr pi = e::pi();
  const ConstExpr u = e::param("u");
  const ConstExpr x = e::param("x");
  const ConstExpr y = e::param("y");
  auto add = [&](std::string id, std::string desc, std::string ref, ConstExpr lhs, ConstExpr rhs) -> IdentityRecord& {
    IdentityRecord rec;
    rec.id = std::move(id);
    rec.description = std::move(desc);
    rec.paper_ref = std::move(ref);
    rec.lhs = std::move(lhs);
    rec.rhs = std::move(rhs);
    r.push_back(std::move(rec));
    return r.back();
  };

  add("I1", "sum (-1)^(n-1)/(n^3 C(2n,n)) (10 H_n - 3/n) = pi^4/30", "=\\frac{\\pi^4}{30}",
      -e::apery(q(-1), 3, "10*H(n) - 3/n"), q(1, 30) * e::pow(pi, 4));
  add("I2", "sum 1/(n^2 C(2n,n)) (3 H_(n-1)^2 + (4/n) H_(n-1)) = pi^4/360", "=\\frac{\\pi^4}{360}",
      e::apery(q(1), 2, "3*H(n-1)^2 + 4*INV_N*H(n-1)"), q(1, 360) * e::pow(pi, 4));
  add("I3", "sum (-1)^(n-1)/(n^3 C(2n,n)) (H_2n + 4 H_n) = 2 pi^4/75", "=\\frac{2\\pi^4}{75}",
      -e::apery(q(-1), 3, "H(2n) + 4*H(n)"), q(2, 75) * e::pow(pi, 4));
  add("I4", "sum H^(2)_(n-1)/(n^2 C(2n,n)) = (5/108) zeta(4)", "=\\frac5{108}\\ze(4)",
      e::apery(q(1), 2, "H2(n-1)"), q(5, 108) * z(4));
  add("I5", "2 sum H_(n-1)/(n^3 C(2n,n)) + 3 sum zeta_(n-1)(1,1)/(n^2 C(2n,n)) = zeta(4)/18",
      "=\\frac1{18}\\ze(4)", q(2) * e::apery(q(1), 3, "H(n-1)") + q(3) * e::apery(q(1), 2, "Z11(n-1)"),
      q(1, 18) * z(4));
  add("I6", "sum (-1)^n H_n/(n^3 C(2n,n)) in golden-ratio polylogarithms",
      "\\frac{12}{5}\\Li_3(\\gf)\\ln(\\gf)", e::apery(q(-1), 3, "H(n)"),
      q(12, 5) * Li(3, g) * lg + q(3, 20) * Li(4, g2) - q(12, 5) * Li(4, g) - q(6, 25) * z(3) * lg +
          q(13, 20) * e::pow(lg, 4) - q(7, 50) * sq(pi) * sq(lg) + q(1, 50) * e::pow(pi, 4));
  add("I7", "sum (-1)^n/(n^4 C(2n,n)) in golden-ratio polylogarithms", "\\frac{7\\pi^4}{90}",
      e::apery(q(-1), 4, "1"),
      q(8) * Li(3, g) * lg + q(1, 2) * Li(4, g2) - q(8) * Li(4, g) - q(4, 5) * z(3) * lg +
          q(13, 6) * e::pow(lg, 4) - q(7, 15) * sq(pi) * sq(lg) + q(7, 90) * e::pow(pi, 4));

  {
    auto& rec = add("I8", "sum u^n H_(n-1)/(n^3 C(2n,n)) in polylogarithms of y(u)", "4 H_{-1,0,0,1}(-y)",
                    e::apery(u, 3, "H(n-1)"), dk_h_rhs(u));
    rec.grid = u_grid();
    rec.grid_param = "u";
  }
  {
    auto& rec = add("I9", "sum u^n H_(2n-1)/(n^3 C(2n,n)) in polylogarithms of y(u)",
                    "- 8 \\Li_{3,1}(y)", e::apery(u, 3, "H(2n-1)"), dk_h2_rhs(u));
    rec.grid = u_grid();
    rec.grid_param = "u";
  }
  {
    auto& rec = add("I10", "sum u^n (H_(n-1) - H_(2n-1))/(n^3 C(2n,n)) in polylogarithms of y(u)",
                    "\\frac{11}{2} \\ze(4)", e::apery(u, 3, "H(n-1) - H(2n-1)"), dk_diff_rhs(u));
    rec.grid = u_grid();
    rec.grid_param = "u";
  }
  add("I11", "sum (-1)^n (H_(n-1) - H_(2n-1))/(n^3 C(2n,n)) at y = gf^2", "\\frac{11}{2}\\ze(4)",
      e::apery(q(-1), 3, "H(n-1) - H(2n-1)"),
      q(4) * Li31(g2) - q(4) * Li(4, g2) + q(1) * sq(Li(2, g2)) - q(8) * Li21(g2) * lg + q(8) * Li(3, g2) * lg -
          q(6) * Li(2, g2) * sq(lg) - q(1) * e::pow(lg, 4) - q(2) * z(2) * Li(2, g2) - q(2) * z(2) * sq(lg) +
          q(11, 2) * z(4));
  add("I12", "decomposition of the H_2n + 4 H_n sum into three alternating sums",
      "-5\\sum_{n=1}^\\infty \\frac{(-1)^n}{n^3\\binom{2n}{n}}H_n", -e::apery(q(-1), 3, "H(2n) + 4*H(n)"),
      e::apery(q(-1), 3, "H(n-1) - H(2n-1)") - q(5) * e::apery(q(-1), 3, "H(n)") +
          q(1, 2) * e::apery(q(-1), 4, "1"));
  add("I13", "sum (-1)^(n-1)/(n^3 C(2n,n)) (H_2n + 4 H_n) in golden-ratio polylogarithms",
      "-\\frac9{2}\\Li_4(\\gf^2)", -e::apery(q(-1), 3, "H(2n) + 4*H(n)"),
      -q(8) * Li(3, g) * lg - q(9, 2) * Li(4, g2) + q(8) * Li(4, g) + q(4) * Li31(g2) + q(1) * sq(Li(2, g2)) -
          q(8) * Li21(g2) * lg + q(8) * Li(3, g2) * lg - q(6) * Li(2, g2) * sq(lg) - q(2) * z(2) * Li(2, g2) +
          q(4, 5) * z(3) * lg - q(19, 6) * e::pow(lg, 4) + q(2, 15) * sq(pi) * sq(lg));
  add("I14", "iterated integral {0, gf^-2, gf^-2} = Li_{2,1}(gf^2) in closed form",
      "\\text{MZIteratedIntegral}[{0, \\gf^{-2}, \\gf^{-2}}]=\\ze(3)+\\frac{\\pi^2}{10}\\ln(\\gf)-\\Li_3(\\gf)",
      e::word({q(0), e::pow(g, -2), e::pow(g, -2)}),
      z(3) + q(1, 10) * sq(pi) * lg - Li(3, g));
  add("I15", "iterated integral {0, 0, gf^-2, gf^-2} = Li_{3,1}(gf^2) in closed form",
      "\\text{MZIteratedIntegral}[{0, 0,\\gf^{-2}, \\gf^{-2}}]",
      e::word({q(0), q(0), e::pow(g, -2), e::pow(g, -2)}),
      q(1, 90) * e::pow(pi, 4) - q(1, 20) * sq(pi) * sq(lg) + q(3, 8) * e::pow(lg, 4) + q(9, 8) * Li(4, g2) -
          q(2) * Li(4, g) + q(1, 5) * z(3) * lg);
  add("I16", "Li_2(gf^2) = pi^2/15 - ln^2(gf)", "\\Li_2(\\gf^2)=\\, \\frac{\\pi^2}{15}-\\ln^2(\\gf)", Li(2, g2),
      q(1, 15) * sq(pi) - q(1) * sq(lg));
  add("I17", "Li_3(gf^2) = (4/5) zeta(3) - (2/3) ln^3(gf) + (2/15) pi^2 ln(gf)",
      "\\Li_3(\\gf^2)=\\, \\frac4{5}\\ze(3)-\\frac2{3}\\ln^3(\\gf)", Li(3, g2),
      q(4, 5) * z(3) - q(2, 3) * e::pow(lg, 3) + q(2, 15) * sq(pi) * lg);
  add("I18", "Li_2(gf) = pi^2/10 - ln^2(gf)", "\\Li_2(\\gf)=\\frac{\\pi^2}{10}-\\ln^2(\\gf)", Li(2, g),
      q(1, 10) * sq(pi) - q(1) * sq(lg));
  {
    auto& rec = add("I19", "depth reduction of Li_{2,1}(x)", "\\Li_{2,1}(x)=\\ze(3)-\\Li_3(1-x)", Li21(x),
                    z(3) - Li(3, q(1) - x) + ln(q(1) - x) * Li(2, q(1) - x) +
                        q(1, 2) * ln(x) * sq(ln(q(1) - x)));
    rec.grid = x_grid();
  }
  {
    auto& rec = add("I20", "reflection Li_{3,1}(x) + Li_{3,1}(1-x)", "\\Li_{3,1}(x)+\\Li_{3,1}(1-x)",
                    Li31(x) + Li31(q(1) - x),
                    ln(x) * (z(3) - Li(3, q(1) - x) + ln(q(1) - x) * Li(2, q(1) - x)) + e::mzv(Composition{3, 1}) +
                        ln(q(1) - x) * Li21(q(1) - x) + q(1, 4) * sq(ln(x)) * sq(ln(q(1) - x)));
    rec.grid = x_grid();
  }
  add("I21", "Li_{3,1}(gf) + Li_{3,1}(gf^2) in closed form",
      "\\Li_{3,1}(\\gf)+\\Li_{3,1}(\\gf^2)=\\frac{\\pi^4}{360}", Li31(g) + Li31(g2),
      q(1, 360) * e::pow(pi, 4) + q(1, 5) * sq(pi) * sq(lg) - q(1, 3) * e::pow(lg, 4) - q(2) * lg * Li(3, g) +
          q(11, 5) * lg * z(3));
  {
    const ConstExpr xy = x * y;
    auto& rec = add(
        "I22", "two-variable formula for Li_{2,1}(y, x) through Li_3^*, and its x -> 1 limit",
        "\\Li_3^*(x) = \\Li_3(1)- \\Li_3(1-x)", e::mpl(Composition{2, 1}, {y, x}),
        li3_star(x) - li3_star((x - xy) / (q(1) - xy)) + li3_star(xy) - Li(3, (y - xy) / (q(1) - xy)) + Li(3, y) -
            Li(3, xy) - ln(q(1) - xy) * (Li(2, x) + Li(2, y)) -
            q(1, 2) * sq(ln((q(1) - x) / (q(1) - xy))) * ln((q(1) - y) / (q(1) - xy)));
    for (const char* xs : {"3/10", "7/10"}) {
      for (const char* ys : {"1/5", "1/2"}) {
        rec.grid.push_back(point(std::string("x=") + xs + ",y=" + ys, {{"x", parse_value(xs)}, {"y", parse_value(ys)}}));
      }
    }
    for (const char* xs : {"1-1e-4", "1-1e-6"}) {
      IdentityCase c;
      c.label = std::string("limit:x=") + xs + ",y=gf^2";
      c.lhs = li3_star(x) - li3_star((x - xy) / (q(1) - xy));
      c.rhs = z(2) * ln(q(1) - y);
      c.params = point(c.label, {{"x", parse_value(xs)}, {"y", g2}});
      c.envelope = (q(1) - x) * sq(ln(q(1) - x));
      rec.extra_cases.push_back(std::move(c));
    }
  }
  {
    auto& rec = add("I23", "Nielsen S_{a,b}(z) by its log integral equals Li_{a+1,1_{b-1}}(z)",
                    "=\\Li_{a+1,1_{b-1}}(z)", ConstExpr{}, ConstExpr{});
    const ConstExpr zp = e::param("z");
    for (auto [a, b] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{1, 3}}) {
      for (const char* zs : {"3/10", "gf^2"}) {
        IdentityCase c;
        c.label = "a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",z=" + zs;
        c.lhs = e::nielsen_quad(a, b, zp);
        c.rhs = e::nielsen(a, b, zp);
        c.params = point(c.label, {{"z", parse_value(zs)}});
        rec.extra_cases.push_back(std::move(c));
      }
    }
    rec.lhs = e::nielsen_quad(1, 2, zp);
    rec.rhs = e::nielsen(1, 2, zp);
  }
  {
    auto& rec = add("I24", "zeta(2k) by Euler-Maclaurin equals the Bernoulli closed form, k = 1..6",
                    "\\zeta(2k)=-\\frac{B_{2k}}{2(2k)!}", e::zeta(IntArg{0, "k", 2}), e::zeta_even(IntArg{0, "k", 1}));
    for (long k = 1; k <= 6; ++k) rec.grid.push_back(point("k=" + std::to_string(k), {}, {{"k", k}}));
  }
  {
    auto& rec = add("I25", "H_(n-1)^2 = 2 zeta_(n-1)(1,1) + H^(2)_(n-1), exactly for n <= 200",
                    "H^2_{n-1}=2\\ze_{n-1}(1,1)+H_{n-1}^{(2)}", ConstExpr{}, ConstExpr{});
    rec.exact_terms = 200;
    rec.exact = [] {
      const Composition one{1};
      FormalSum expected;
      expected.add(Composition{1, 1}, 2);
      expected.add(Composition{2}, 1);
      const FormalSum product = quasi_shuffle(one, one);
      if (product != expected) return "quasi_shuffle((1),(1)) = " + product.to_string();
      if (!verify_stuffle_numeric(one, one, 200)) return std::string("exact check failed for some n <= 200");
      return std::string();
    };
  }
  return r;
}

}  // namespace

const std::vector<IdentityRecord>& builtin_registry() {
  static const std::vector<IdentityRecord> registry = build();
  return registry;
}

const IdentityRecord* lookup(const std::string& id) {
  for (const auto& rec : builtin_registry()) {
    if (rec.id == id) return &rec;
  }
  return nullptr;
}

Real pass_threshold(long digits) { return Real::from_string("1e-" + std::to_string(digits - 5), 64); }

Verdict decide(const Real& abs_difference, const Real& certified_bound, const Real& threshold) {
  if (!abs_difference.is_finite() || !certified_bound.is_finite()) {
    return certified_bound.is_finite() ? Verdict::kFail : Verdict::kUncertain;
  }
  if (certified_bound > threshold && abs_difference <= certified_bound) return Verdict::kUncertain;
  if (abs_difference <= threshold && certified_bound <= threshold) return Verdict::kPass;
  return Verdict::kFail;
}

std::vector<IdentityCase> expand_cases(const IdentityRecord& rec, const std::vector<std::string>& grid_override) {
  std::vector<IdentityCase> out;
  if (rec.exact) {
    out.push_back(IdentityCase{});
    return out;
  }
  std::vector<ParamPoint> grid = rec.grid;
  if (!grid_override.empty() && !rec.grid_param.empty()) {
    grid.clear();
    for (const auto& token : grid_override) {
      grid.push_back(ParamPoint{rec.grid_param + "=" + token, {{rec.grid_param, parse_value(token)}}, {}});
    }
  }
  if (rec.lhs && rec.rhs && (rec.extra_cases.empty() || !grid.empty())) {
    if (grid.empty()) {
      out.push_back(IdentityCase{"", rec.lhs, rec.rhs, {}, {}});
    } else {
      for (auto& p : grid) out.push_back(IdentityCase{p.label, rec.lhs, rec.rhs, p, {}});
    }
  }
  out.insert(out.end(), rec.extra_cases.begin(), rec.extra_cases.end());
  return out;
}

VerificationReport verify_case(const IdentityRecord& rec, const IdentityCase& c, long digits) {
  VerificationReport rep;
  rep.id = c.label.empty() ? rec.id : rec.id + "[" + c.label + "]";
  rep.paper_ref = rec.paper_ref;
  rep.digits = digits;
  rep.threshold = pass_threshold(digits);
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&] {
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };
  mpfr_set_inf(rep.abs_difference.get(), 1);
  mpfr_set_inf(rep.certified_bound.get(), 1);
  try {
    if (rec.exact) {
      rep.diagnostic = rec.exact();
      rep.terms_used = rec.exact_terms;
      if (rep.diagnostic.empty()) {
        mpfr_set_zero(rep.abs_difference.get(), 1);
        mpfr_set_zero(rep.certified_bound.get(), 1);
        rep.verdict = Verdict::kPass;
      } else {
        rep.verdict = Verdict::kFail;
      }
      return finish();
    }
    const long guard = kDefaultGuardBits + 8 * static_cast<long>(std::max(depth(c.lhs), depth(c.rhs)));
    const PrecisionContext ctx = make_context(digits, guard);
    const CertifiedReal lhs = eval_expr(c.lhs, ctx, c.params);
    const CertifiedReal rhs = eval_expr(c.rhs, ctx, c.params);
    const CertifiedReal diff = lhs - rhs;
    rep.abs_difference = upward::magnitude(diff.value);
    rep.certified_bound = diff.error;
    rep.terms_used = lhs.terms + rhs.terms;
    if (c.envelope) {
      const CertifiedReal env = eval_expr(c.envelope, ctx, c.params);
      rep.threshold = upward::magnitude(env.value);
      // the limit is approached from inside the envelope; the bound must stay tiny
      rep.verdict = decide(rep.abs_difference, rep.certified_bound, rep.threshold);
      if (rep.verdict == Verdict::kPass && rep.certified_bound > pass_threshold(digits)) {
        rep.verdict = Verdict::kUncertain;
      }
    } else {
      rep.verdict = decide(rep.abs_difference, rep.certified_bound, rep.threshold);
    }
  } catch (const std::exception& ex) {
    rep.verdict = Verdict::kFail;
    rep.diagnostic = ex.what();
  }
  return finish();
}

std::vector<VerificationReport> verify(const IdentityRecord& rec, long digits,
                                       const std::vector<std::string>& grid_override) {
  return verify_many({&rec}, digits, grid_override, 1);
}

std::vector<VerificationReport> verify_many(const std::vector<const IdentityRecord*>& records, long digits,
                                            const std::vector<std::string>& grid_override, unsigned jobs) {
  if (digits < 10) throw DomainError("verification needs at least 10 digits");
  if (digits > kMaxTargetDigits) throw CapacityError("digits exceed capacity");
  std::vector<const IdentityRecord*> sorted = records;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const IdentityRecord* a, const IdentityRecord* b) { return natural_less(a->id, b->id); });
  struct Task {
    const IdentityRecord* rec;
    IdentityCase c;
  };
  std::vector<Task> tasks;
  for (const auto* rec : sorted) {
    for (auto& c : expand_cases(*rec, grid_override)) tasks.push_back(Task{rec, std::move(c)});
  }
  std::vector<VerificationReport> reports(tasks.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      reports[i] = verify_case(*tasks[i].rec, tasks[i].c, digits);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return reports;
}

std::vector<VerificationReport> verify_all(long digits, unsigned jobs) {
  std::vector<const IdentityRecord*> all;
  for (const auto& rec : builtin_registry()) all.push_back(&rec);
  return verify_many(all, digits, {}, jobs);
}

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      const std::string na = a.substr(i, ie - i);
      const std::string nb = b.substr(j, je - j);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

}  // namespace polyapery
