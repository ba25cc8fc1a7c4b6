#include "polyapery/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "polyapery/mpl.hpp"

namespace polyapery {

namespace {

struct Rule {
  std::vector<Real> nodes;  // on [-1, 1]
  std::vector<Real> weights;
};

// Newton iteration on P_n, seeded with the usual cosine approximation.
Rule gauss_legendre(int n, mpfr_prec_t prec) {
  Rule rule;
  const mpfr_prec_t wp = prec + 32;
  const Real tol = Real::exp2(-static_cast<long>(prec) - 8, 64);
  for (int i = 1; i <= n; ++i) {
    Real x(std::cos(M_PI * (i - 0.25) / (n + 0.5)), wp);
    Real dp(wp);
    for (int iter = 0; iter < 100; ++iter) {
      // P_n(x) and P_(n-1)(x) by the three-term recurrence
      Real p0(1L, wp);
      Real p1 = x;
      for (int k = 2; k <= n; ++k) {
        Real p2 = (x * p1 * (2 * k - 1) - p0 * (k - 1)) / k;
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      // P_n'(x) = n (x P_n - P_(n-1)) / (x^2 - 1)
      dp = (x * p1 - p0) * n / (x * x - Real(1L, wp));
      Real step = p1 / dp;
      x -= step;
      if (abs(step) < tol) {
        // refresh the derivative at the converged node
        p0 = Real(1L, wp);
        p1 = x;
        for (int k = 2; k <= n; ++k) {
          Real p2 = (x * p1 * (2 * k - 1) - p0 * (k - 1)) / k;
          p0 = std::move(p1);
          p1 = std::move(p2);
        }
        dp = (x * p1 - p0) * n / (x * x - Real(1L, wp));
        break;
      }
    }
    Real w = Real(2L, wp) / ((Real(1L, wp) - x * x) * dp * dp);
    rule.nodes.push_back(x.with_precision(prec));
    rule.weights.push_back(w.with_precision(prec));
  }
  return rule;
}

Real apply(const Rule& rule, const Integrand& f, const Real& a, const Real& b) {
  const Real half = (b - a) / 2;
  const Real mid = (a + b) / 2;
  Real sum(a.precision());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += f(mid + half * rule.nodes[i]) * rule.weights[i];
  }
  return sum * half;
}

struct Panel {
  Real a;
  Real b;
  Real estimate;
  int depth;
};

long default_tolerance_digits(const PrecisionContext& ctx) { return std::max<long>(35, ctx.target_digits() + 3); }

// The default tolerance can be finer than a low-digit context resolves.
PrecisionContext oracle_context(const PrecisionContext& ctx) {
  const long needed = bits_for_digits(default_tolerance_digits(ctx)) + kDefaultGuardBits;
  if (ctx.working_bits() >= needed) return ctx;
  return ctx.with_extra_guard(needed - ctx.working_bits());
}

}  // namespace

CertifiedReal quadrature(const Integrand& f, const Real& a, const Real& b, const PrecisionContext& ctx,
                         const QuadratureOptions& options) {
  const mpfr_prec_t prec = ctx.working_bits();
  Real tol = options.tolerance ? *options.tolerance
                               : Real::from_string("1e-" + std::to_string(default_tolerance_digits(ctx)), 64);
  const int order = options.order > 0 ? options.order
                                      : static_cast<int>(std::max<long>(20, ctx.target_digits() / 3 + 10));
  const Rule rule = gauss_legendre(order, prec);

  const Real lo = a.with_precision(prec);
  const Real hi = b.with_precision(prec);
  const Real length = abs(hi - lo);
  if (length.is_zero()) return CertifiedReal::exact(0, prec);

  Real total(prec);
  Real error(64);
  std::size_t evaluations = 0;
  long panels = 0;
  std::vector<Panel> stack;
  stack.push_back(Panel{lo, hi, apply(rule, f, lo, hi), 0});
  evaluations += rule.nodes.size();
  while (!stack.empty()) {
    Panel p = std::move(stack.back());
    stack.pop_back();
    const Real mid = (p.a + p.b) / 2;
    Real left = apply(rule, f, p.a, mid);
    Real right = apply(rule, f, mid, p.b);
    evaluations += 2 * rule.nodes.size();
    Real refined = left + right;
    Real diff = abs(refined - p.estimate);
    // this panel's share of the tolerance
    Real share = upward::mul(tol, upward::div(upward::magnitude(p.b - p.a), length));
    if (diff <= share) {
      total += refined;
      error = upward::add(error, diff);
      continue;
    }
    if (p.depth >= options.max_depth || ++panels > options.max_panels) {
      throw QuadratureError("quadrature refinement stalled before reaching tolerance");
    }
    stack.push_back(Panel{p.a, mid, std::move(left), p.depth + 1});
    stack.push_back(Panel{mid, p.b, std::move(right), p.depth + 1});
  }
  return CertifiedReal(std::move(total), std::move(error), evaluations);
}

CertifiedReal nielsen_integral(int a, int b, const CertifiedReal& z, const PrecisionContext& outer) {
  if (a < 1 || b < 1) throw DomainError("nielsen requires a, b >= 1");
  if (z.value.sign() < 0 || z.value > 1) throw DomainError("nielsen: z outside [0, 1]");
  const PrecisionContext ctx = oracle_context(outer);
  const mpfr_prec_t prec = ctx.working_bits();
  const Real zv = z.value.with_precision(prec);
  Integrand f = [&](const Real& t) {
    Real lt = log(t);
    Real l1 = log(Real(1L, prec) - zv * t);
    Real v = pow(l1, b) / t;
    if (a > 1) v *= pow(lt, a - 1);
    return v;
  };
  CertifiedReal integral = quadrature(f, Real(0L, prec), Real(1L, prec), ctx);
  mpz_class denom;
  mpz_fac_ui(denom.get_mpz_t(), static_cast<unsigned long>(a - 1));
  mpz_class bfac;
  mpz_fac_ui(bfac.get_mpz_t(), static_cast<unsigned long>(b));
  denom *= bfac;
  mpq_class coeff(1, 1);
  coeff /= denom;
  if ((a - 1 + b) % 2 != 0) coeff = -coeff;
  return scale(integral, coeff);
}

CertifiedReal h_m1001_integral(const CertifiedReal& y, const PrecisionContext& outer) {
  if (!(y.value > 0) || !(y.value < 1)) throw DomainError("h_m1001 requires 0 < y < 1");
  const PrecisionContext ctx = oracle_context(outer);
  const mpfr_prec_t prec = ctx.working_bits();
  Integrand f = [&](const Real& x) {
    return li(3, CertifiedReal(x), ctx).value / (Real(1L, prec) + x);
  };
  return quadrature(f, Real(0L, prec), -y.value.with_precision(prec), ctx);
}

}  // namespace polyapery
