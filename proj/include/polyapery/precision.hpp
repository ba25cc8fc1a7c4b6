#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "polyapery/real.hpp"

namespace polyapery {

/// Thrown when a request exceeds a configured size limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an argument lies outside the domain of an evaluator
/// (divergent series, unsupported branch, inadmissible index).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr long kMaxTargetDigits = 1'000'000;
inline constexpr long kDefaultGuardBits = 32;

/// Precision requested by a caller, plus the derived working precision and the
/// absolute truncation threshold every series must certify against.
class PrecisionContext {
 public:
  long target_digits() const { return target_digits_; }
  mpfr_prec_t working_bits() const { return working_bits_; }
  long guard_bits() const { return guard_bits_; }
  /// Absolute truncation threshold (a power of two below 10^-(digits+2)).
  const Real& epsilon() const { return epsilon_; }
  long epsilon_log2() const { return epsilon_log2_; }

  /// A copy of this context with `extra` more guard bits.
  PrecisionContext with_extra_guard(long extra) const;

  friend PrecisionContext make_context(long target_digits, long guard_bits);

 private:
  PrecisionContext() = default;

  long target_digits_ = 0;
  mpfr_prec_t working_bits_ = 0;
  long guard_bits_ = 0;
  long epsilon_log2_ = 0;
  Real epsilon_;
};

/// Throws CapacityError for target_digits outside [1, 10^6].
PrecisionContext make_context(long target_digits, long guard_bits = kDefaultGuardBits);

/// ceil(digits * log2(10)).
long bits_for_digits(long digits);

// ---------------------------------------------------------------------------

/// A high-precision value together with an absolute error bound.
///
/// Arithmetic propagates bounds conservatively and charges one rounding error
/// of the result on top. `terms` counts series terms spent producing the value.
struct CertifiedReal {
  Real value;
  Real error;  // 64-bit, rounded upward
  std::size_t terms = 0;

  CertifiedReal() = default;
  explicit CertifiedReal(Real v) : value(std::move(v)), error(64) {}
  CertifiedReal(Real v, Real err, std::size_t t = 0)
      : value(std::move(v)), error(std::move(err)), terms(t) {}

  /// Exact value, no error.
  static CertifiedReal exact(long v, mpfr_prec_t prec) { return CertifiedReal(Real(v, prec)); }
  /// Rational at `prec`, error = rounding of the conversion.
  static CertifiedReal from_rational(const mpq_class& q, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return value.precision(); }
  /// Adds `extra` to the error bound.
  CertifiedReal& widen(const Real& extra);
  /// Upper bound for |value| + error.
  Real magnitude_bound() const;
  /// Lower bound for |value| - error (may be negative).
  Real lower_magnitude() const;
};

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b);
CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b);
CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b);
CertifiedReal operator-(const CertifiedReal& a);
CertifiedReal operator*(const CertifiedReal& a, long k);
CertifiedReal scale(const CertifiedReal& a, const mpq_class& q);
CertifiedReal pow(const CertifiedReal& a, long n);
/// Natural log; throws DomainError unless the enclosure is strictly positive.
CertifiedReal log(const CertifiedReal& a);
CertifiedReal sqrt(const CertifiedReal& a);

// ---------------------------------------------------------------------------

/// Exact B_n from t/(e^t - 1) = sum B_n t^n / n!.
mpq_class bernoulli(long n);
/// B_0 .. B_n.
std::vector<mpq_class> bernoulli_table(long n);

/// pi at working precision; error bound 2 ulp.
CertifiedReal pi(const PrecisionContext& ctx);

/// zeta(2k) from Bernoulli numbers and powers of 2*pi.
CertifiedReal zeta_even(long k, const PrecisionContext& ctx);

/// zeta(s) for integer s >= 2 by Euler-Maclaurin summation. DomainError for s <= 1.
CertifiedReal zeta_int(long s, const PrecisionContext& ctx);

/// The golden-ratio constants used throughout: phi = (sqrt5 - 1)/2.
struct GoldenRatio {
  CertifiedReal phi;
  CertifiedReal phi_squared;  // (3 - sqrt5)/2
  CertifiedReal log_phi;
};
GoldenRatio golden_ratio(const PrecisionContext& ctx);

}  // namespace polyapery
