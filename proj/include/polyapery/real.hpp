#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>

namespace polyapery {

/// Owning wrapper around an MPFR variable.
///
/// Every value carries its own binary precision. Binary operations produce a
/// result at the larger of the two operand precisions, so there is no
/// process-wide default precision to manage.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(long value, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, value, MPFR_RNDN); }
  Real(int value, mpfr_prec_t prec) : Real(static_cast<long>(value), prec) {}
  Real(double value, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, value, MPFR_RNDN); }
  Real(const mpz_class& value, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
  }
  Real(const mpq_class& value, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
  }

  Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Real(Real&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
  }
  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  /// Parses a decimal literal ("0.25", "-3", "1e-5"). Throws std::invalid_argument.
  static Real from_string(const std::string& text, mpfr_prec_t prec);
  static Real pi(mpfr_prec_t prec);
  /// 2^exp exactly.
  static Real exp2(long exp, mpfr_prec_t prec = 64);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Base-2 exponent e such that 0.5 <= |x| / 2^e < 1; LONG_MIN for zero.
  long exponent() const;

  /// Decimal rendering with `digits` significant digits.
  std::string to_string(int digits) const;

  /// Copy rounded to a different precision.
  Real with_precision(mpfr_prec_t prec) const;

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator*(Real lhs, long rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, long rhs) { return lhs /= rhs; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real pow(const Real& x, long n);

/// Arithmetic rounded toward +infinity, used for error-bound bookkeeping.
namespace upward {
Real add(const Real& a, const Real& b);
Real mul(const Real& a, const Real& b);
Real div(const Real& a, const Real& b);
/// |x| * 2^exp, rounded up.
Real scale2(const Real& x, long exp);
/// Upper bound for |x| at 64 bits.
Real magnitude(const Real& x);
}  // namespace upward

/// Unit in the last place of x at its own precision (upper bound).
Real ulp(const Real& x);

}  // namespace polyapery
