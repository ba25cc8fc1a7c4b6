#include "polyapery/real.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <stdexcept>

namespace polyapery {

namespace {

constexpr mpfr_prec_t kBoundBits = 64;

// Raise the precision of `lhs` (preserving its value) when rhs is wider.
void widen(Real& lhs, const Real& rhs) {
  if (rhs.precision() > lhs.precision()) {
    mpfr_prec_round(lhs.get(), rhs.precision(), MPFR_RNDN);
  }
}

}  // namespace

Real Real::from_string(const std::string& text, mpfr_prec_t prec) {
  Real r(prec);
  if (text.empty() || mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: '" + text + "'");
  }
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::exp2(long exp, mpfr_prec_t prec) {
  Real r(1L, prec);
  mpfr_mul_2si(r.v_, r.v_, exp, MPFR_RNDN);
  return r;
}

long Real::exponent() const {
  if (mpfr_zero_p(v_)) return LONG_MIN;
  return mpfr_get_exp(v_);
}

std::string Real::to_string(int digits) const {
  if (digits < 1) digits = 1;
  if (mpfr_zero_p(v_)) return "0";
  char* buf = nullptr;
  // Fixed notation for moderate magnitudes, scientific otherwise.
  const long e = mpfr_get_exp(v_);
  if (e > -30 && e < 60) {
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  } else {
    mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  }
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real Real::with_precision(mpfr_prec_t prec) const {
  Real r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& rhs) {
  widen(*this, rhs);
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen(*this, rhs);
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen(*this, rhs);
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen(*this, rhs);
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real abs(const Real& x) {
  Real r(x);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  Real r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

namespace upward {

Real add(const Real& a, const Real& b) {
  Real r(kBoundBits);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real mul(const Real& a, const Real& b) {
  Real r(kBoundBits);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real div(const Real& a, const Real& b) {
  Real r(kBoundBits);
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real scale2(const Real& x, long exp) {
  Real r(kBoundBits);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  mpfr_mul_2si(r.get(), r.get(), exp, MPFR_RNDU);
  return r;
}

Real magnitude(const Real& x) {
  Real r(kBoundBits);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  return r;
}

}  // namespace upward

Real ulp(const Real& x) {
  if (x.is_zero()) return Real(kBoundBits);
  // |x| < 2^e, so one ulp is at most 2^(e - prec).
  return Real::exp2(x.exponent() - static_cast<long>(x.precision()), kBoundBits);
}

}  // namespace polyapery
