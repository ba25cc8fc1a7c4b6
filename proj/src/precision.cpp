#include "polyapery/precision.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polyapery {

long bits_for_digits(long digits) {
  return static_cast<long>(std::ceil(static_cast<double>(digits) * std::log2(10.0)));
}

PrecisionContext make_context(long target_digits, long guard_bits) {
  if (target_digits < 1 || target_digits > kMaxTargetDigits) {
    throw CapacityError("target digits " + std::to_string(target_digits) + " outside [1, " +
                        std::to_string(kMaxTargetDigits) + "]");
  }
  if (guard_bits < 0) throw CapacityError("negative guard bits");
  PrecisionContext ctx;
  ctx.target_digits_ = target_digits;
  ctx.guard_bits_ = guard_bits;
  ctx.working_bits_ = bits_for_digits(target_digits) + guard_bits;
  ctx.epsilon_log2_ = -std::max<long>(ctx.working_bits_ - 4, bits_for_digits(target_digits + 2));
  ctx.epsilon_ = Real::exp2(ctx.epsilon_log2_);
  return ctx;
}

PrecisionContext PrecisionContext::with_extra_guard(long extra) const {
  return make_context(target_digits_, guard_bits_ + extra);
}

// ---------------------------------------------------------------------------
// CertifiedReal

namespace {

// One ulp of the result when the operation rounded, zero when it was exact.
Real rounding_error(const Real& v, int ternary) { return ternary ? ulp(v) : Real(64); }

mpfr_prec_t wider(const CertifiedReal& a, const CertifiedReal& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

CertifiedReal CertifiedReal::from_rational(const mpq_class& q, mpfr_prec_t prec) {
  Real v(prec);
  const int t = mpfr_set_q(v.get(), q.get_mpq_t(), MPFR_RNDN);
  Real e = rounding_error(v, t);
  return CertifiedReal(std::move(v), std::move(e));
}

CertifiedReal& CertifiedReal::widen(const Real& extra) {
  error = upward::add(error, upward::magnitude(extra));
  return *this;
}

Real CertifiedReal::magnitude_bound() const {
  return upward::add(upward::magnitude(value), error);
}

Real CertifiedReal::lower_magnitude() const {
  Real r(64);
  mpfr_abs(r.get(), value.get(), MPFR_RNDD);
  mpfr_sub(r.get(), r.get(), error.get(), MPFR_RNDD);
  return r;
}

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
  Real v(wider(a, b));
  const int t = mpfr_add(v.get(), a.value.get(), b.value.get(), MPFR_RNDN);
  Real e = upward::add(upward::add(a.error, b.error), rounding_error(v, t));
  return CertifiedReal(std::move(v), std::move(e), a.terms + b.terms);
}

CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) {
  Real v(wider(a, b));
  const int t = mpfr_sub(v.get(), a.value.get(), b.value.get(), MPFR_RNDN);
  Real e = upward::add(upward::add(a.error, b.error), rounding_error(v, t));
  return CertifiedReal(std::move(v), std::move(e), a.terms + b.terms);
}

CertifiedReal operator-(const CertifiedReal& a) {
  return CertifiedReal(-a.value, a.error, a.terms);
}

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
  Real v(wider(a, b));
  const int t = mpfr_mul(v.get(), a.value.get(), b.value.get(), MPFR_RNDN);
  Real e = upward::mul(upward::magnitude(a.value), b.error);
  e = upward::add(e, upward::mul(upward::magnitude(b.value), a.error));
  e = upward::add(e, upward::mul(a.error, b.error));
  e = upward::add(e, rounding_error(v, t));
  return CertifiedReal(std::move(v), std::move(e), a.terms + b.terms);
}

CertifiedReal operator*(const CertifiedReal& a, long k) {
  Real v(a.precision());
  const int t = mpfr_mul_si(v.get(), a.value.get(), k, MPFR_RNDN);
  Real e = upward::mul(a.error, Real(std::labs(k), 64));
  e = upward::add(e, rounding_error(v, t));
  return CertifiedReal(std::move(v), std::move(e), a.terms);
}

CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b) {
  Real low = b.lower_magnitude();
  if (!(low > 0)) throw DomainError("division by an enclosure containing zero");
  Real v(wider(a, b));
  const int t = mpfr_div(v.get(), a.value.get(), b.value.get(), MPFR_RNDN);
  // |a/b - a'/b'| <= (|a| eb + |b| ea) / (|b| (|b| - eb))
  Real num = upward::add(upward::mul(upward::magnitude(a.value), b.error),
                         upward::mul(upward::magnitude(b.value), a.error));
  Real den(64);
  mpfr_abs(den.get(), b.value.get(), MPFR_RNDD);
  mpfr_mul(den.get(), den.get(), low.get(), MPFR_RNDD);
  Real e = upward::add(upward::div(num, den), rounding_error(v, t));
  return CertifiedReal(std::move(v), std::move(e), a.terms + b.terms);
}

CertifiedReal scale(const CertifiedReal& a, const mpq_class& q) {
  if (q == 1) return a;
  return a * CertifiedReal::from_rational(q, a.precision());
}

CertifiedReal pow(const CertifiedReal& a, long n) {
  if (n == 0) return CertifiedReal::exact(1, a.precision());
  if (n < 0) return CertifiedReal::exact(1, a.precision()) / pow(a, -n);
  CertifiedReal result = CertifiedReal::exact(1, a.precision());
  CertifiedReal base = a;
  bool first = true;
  while (n > 0) {
    if (n & 1) {
      result = first ? base : result * base;
      first = false;
    }
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

CertifiedReal log(const CertifiedReal& a) {
  Real low = a.lower_magnitude();
  if (a.value.sign() <= 0 || !(low > 0)) throw DomainError("log of a non-positive enclosure");
  Real v(a.precision());
  const int t = mpfr_log(v.get(), a.value.get(), MPFR_RNDN);
  // |log x' - log x| <= e / (x - e)
  Real e = upward::add(upward::div(a.error, low), rounding_error(v, t));
  return CertifiedReal(std::move(v), std::move(e), a.terms);
}

CertifiedReal sqrt(const CertifiedReal& a) {
  if (a.value.sign() < 0) throw DomainError("sqrt of a negative value");
  Real v(a.precision());
  const int t = mpfr_sqrt(v.get(), a.value.get(), MPFR_RNDN);
  Real e = rounding_error(v, t);
  if (!a.error.is_zero()) {
    Real low = a.lower_magnitude();
    if (!(low > 0)) throw DomainError("sqrt of an enclosure touching zero");
    Real root_low(64);
    mpfr_sqrt(root_low.get(), low.get(), MPFR_RNDD);
    e = upward::add(e, upward::div(a.error, root_low));
  }
  return CertifiedReal(std::move(v), std::move(e), a.terms);
}

// ---------------------------------------------------------------------------
// Bernoulli numbers and zeta values

std::vector<mpq_class> bernoulli_table(long n) {
  if (n < 0) throw DomainError("bernoulli index must be non-negative");
  if (n > 100'000) throw CapacityError("bernoulli index too large");
  std::vector<mpq_class> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  // sum_{k=0}^{m} C(m+1, k) B_k = 0
  for (long m = 1; m <= n; ++m) {
    if (m > 1 && (m & 1)) {
      b[m] = 0;
      continue;
    }
    mpz_class binom = 1;  // C(m+1, k), starting at k = 0
    mpq_class acc = 0;
    for (long k = 0; k < m; ++k) {
      if (!(k > 1 && (k & 1))) acc += binom * b[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[m] = -acc / (m + 1);
    b[m].canonicalize();
  }
  return b;
}

mpq_class bernoulli(long n) { return bernoulli_table(n).back(); }

CertifiedReal pi(const PrecisionContext& ctx) {
  Real v = Real::pi(ctx.working_bits());
  Real e = upward::scale2(ulp(v), 1);
  return CertifiedReal(std::move(v), std::move(e));
}

namespace {

mpz_class factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

}  // namespace

CertifiedReal zeta_even(long k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("zeta_even requires k >= 1");
  // zeta(2k) = -B_2k / (2 (2k)!) * (2 pi i)^(2k) = (-1)^(k+1) B_2k (2 pi)^(2k) / (2 (2k)!)
  mpq_class coeff = bernoulli(2 * k) / (2 * mpq_class(factorial(2 * k)));
  if (k % 2 == 0) coeff = -coeff;
  coeff.canonicalize();
  CertifiedReal two_pi = pi(ctx) * 2;
  return scale(pow(two_pi, 2 * k), coeff);
}

CertifiedReal zeta_int(long s, const PrecisionContext& ctx) {
  if (s <= 1) throw DomainError("zeta(" + std::to_string(s) + ") diverges");
  const mpfr_prec_t prec = ctx.working_bits();
  // the Euler-Maclaurin error cannot drop below about exp(-2 pi N)
  const long n_needed = static_cast<long>(std::ceil((4.0 - ctx.epsilon_log2()) * std::log(2.0) / (2 * M_PI))) + 8;
  const long n_direct = std::max<long>({ctx.target_digits(), 10L, n_needed});

  // Smallest M with 4 (s)_2M / (2pi)^2M * N^(1-s-2M) / (s+2M-1) below eps/4.
  const double log_eps = static_cast<double>(ctx.epsilon_log2()) * std::log(2.0) - std::log(4.0);
  const double log_n = std::log(static_cast<double>(n_direct));
  long m = 1;
  for (;; ++m) {
    const double sd = static_cast<double>(s);
    const double two_m = 2.0 * static_cast<double>(m);
    const double lb = std::log(4.0) + std::lgamma(sd + two_m) - std::lgamma(sd) -
                      two_m * std::log(2 * M_PI) + (1 - sd - two_m) * log_n -
                      std::log(sd + two_m - 1);
    if (lb < log_eps - 2) break;
    if (m > 200'000) throw CapacityError("zeta_int: Euler-Maclaurin did not reach precision");
  }
  const std::vector<mpq_class> bern = bernoulli_table(2 * m);

  Real sum(prec);
  for (long n = 1; n < n_direct; ++n) {
    Real term(1L, prec);
    term /= pow(Real(n, prec), s);
    sum += term;
  }
  const Real big_n(n_direct, prec);
  // integral tail and half the boundary term
  sum += pow(big_n, 1 - s) / (s - 1);
  sum += pow(big_n, -s) / 2;

  // B_2j/(2j)! * s(s+1)...(s+2j-2) * N^(-s-2j+1)
  mpz_class rising = s;  // (s)_(2j-1)
  mpz_class fact = 2;    // (2j)!
  for (long j = 1; j <= m; ++j) {
    Real coeff(mpq_class(bern[2 * j] * rising / fact), prec);
    sum += coeff * pow(big_n, -s - 2 * j + 1);
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    fact *= (2 * j + 1) * (2 * j + 2);
  }

  // Remainder bound 4 (s)_2M / (2pi)^2M * N^(1-s-2M) / (s+2M-1), in upward arithmetic.
  mpz_class rising_2m = 1;
  for (long i = 0; i < 2 * m; ++i) rising_2m *= s + i;
  Real two_pi_low(64);
  mpfr_const_pi(two_pi_low.get(), MPFR_RNDD);
  mpfr_mul_2si(two_pi_low.get(), two_pi_low.get(), 1, MPFR_RNDD);
  Real denom(64);
  mpfr_pow_si(denom.get(), two_pi_low.get(), 2 * m, MPFR_RNDD);
  Real remainder(64);
  mpfr_set_z(remainder.get(), rising_2m.get_mpz_t(), MPFR_RNDU);
  mpfr_mul_2si(remainder.get(), remainder.get(), 2, MPFR_RNDU);
  remainder = upward::div(remainder, denom);
  Real npow(64);
  mpfr_set_si(npow.get(), n_direct, MPFR_RNDN);
  mpfr_pow_si(npow.get(), npow.get(), 1 - s - 2 * m, MPFR_RNDU);
  remainder = upward::mul(remainder, npow);
  remainder = upward::div(remainder, Real(s + 2 * m - 1, 64));

  // Rounding: each of the ~N + M operations loses at most a few ulp of a value <= 2.
  Real rounding = upward::mul(ulp(Real(2L, prec)), Real(4 * (n_direct + m + 8), 64));
  CertifiedReal out(std::move(sum), upward::add(remainder, rounding),
                    static_cast<std::size_t>(n_direct + m));
  return out;
}

GoldenRatio golden_ratio(const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  CertifiedReal root5 = sqrt(CertifiedReal::exact(5, prec));
  CertifiedReal phi = scale(root5 - CertifiedReal::exact(1, prec), mpq_class(1, 2));
  CertifiedReal phi2 = scale(CertifiedReal::exact(3, prec) - root5, mpq_class(1, 2));
  CertifiedReal lphi = log(phi);
  return GoldenRatio{std::move(phi), std::move(phi2), std::move(lphi)};
}

}  // namespace polyapery
