#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "polyapery/mpl.hpp"

namespace polyapery {

/// Harmonic-number factors available as summand weights.
enum class HarmonicFactor {
  kOne,      // 1
  kHn,       // H_n
  kHnm1,     // H_(n-1)
  kH2n,      // H_(2n)
  kH2nm1,    // H_(2n-1)
  kH2Order,  // H^(2)_(n-1) = sum_{k<n} 1/k^2
  kZ11,      // zeta_(n-1)(1,1) = sum_{n>k>j>0} 1/(kj)
  kInvN,     // 1/n
};

std::string to_string(HarmonicFactor f);

struct HarmonicMonomial {
  mpq_class coefficient{1};
  std::vector<HarmonicFactor> factors;  // a product; kOne is absorbed
};

/// A rational linear combination of products of harmonic factors.
class HarmonicWeight {
 public:
  HarmonicWeight() = default;
  explicit HarmonicWeight(std::vector<HarmonicMonomial> terms);
  /// A single factor with coefficient 1.
  static HarmonicWeight of(HarmonicFactor f);

  /// Parses strings such as "H2(n-1)", "10*H(n) - 3/n", "3*H(n-1)^2 + 4*INV_N*H(n-1)".
  /// Recognised factors: 1, H(n), H(n-1), H(2n), H(2n-1), H2(n-1), Z11(n-1), INV_N, 1/n.
  /// Throws std::invalid_argument.
  static HarmonicWeight parse(const std::string& text);

  const std::vector<HarmonicMonomial>& terms() const { return terms_; }
  /// Largest number of logarithmic factors in one monomial (Z11 counts twice).
  int log_degree() const;
  bool needs_double_index() const;
  std::string to_string() const;

  friend HarmonicWeight operator+(const HarmonicWeight& a, const HarmonicWeight& b);
  friend HarmonicWeight operator*(const mpq_class& c, const HarmonicWeight& w);

 private:
  std::vector<HarmonicMonomial> terms_;
};

/// u^n / (n^s C(2n,n)) * weight(n), summed over n >= 1. u = -1 gives the (-1)^n sums.
struct AperySumSpec {
  CertifiedReal u;
  int s = 2;
  HarmonicWeight weight;
};

/// Certified-real tables indexed 0..N: H_n, H^(2)_n, zeta_n(1,1).
struct HarmonicTables {
  std::vector<Real> h;
  std::vector<Real> h2;
  std::vector<Real> z11;
};

struct ExactHarmonicTables {
  std::vector<mpq_class> h;
  std::vector<mpq_class> h2;
  std::vector<mpq_class> z11;
};

inline constexpr long kMaxHarmonicTable = 50'000'000;
inline constexpr long kMaxExactHarmonicTable = 20'000;

HarmonicTables harmonic_tables(long n, const PrecisionContext& ctx);
ExactHarmonicTables harmonic_tables_exact(long n);

/// C(2n, n), exactly.
mpz_class central_binomial(long n);

/// DomainError when |u| >= 4 or s < 1.
CertifiedReal apery_sum(const AperySumSpec& spec, const PrecisionContext& ctx);

/// Partial sum over n <= cutoff with the tail bound at that cutoff.
TruncatedSeries apery_truncated(const AperySumSpec& spec, long cutoff, const PrecisionContext& ctx);

/// rho^(N+1) g(N+1) / (1 - q) with rho = |u|/4, g(n) = 2 sqrt(n) W(n) / n^s and
/// q = rho (1 + 1/(N+1))^D; W bounds the weight, D its log degree.
Real apery_tail_bound(const Real& u_upper, int s, const HarmonicWeight& weight, long cutoff);

/// y = (1 - sqrt(u/(u-4))) / (1 + sqrt(u/(u-4))) for u < 0; DomainError otherwise.
CertifiedReal y_of_u(const CertifiedReal& u, const PrecisionContext& ctx);

/// Which closed form to evaluate: sums weighted by H_(n-1), by H_(2n-1), or
/// by their difference (all with s = 3).
enum class DkKind { kH, kH2, kDiff };

std::string to_string(DkKind k);

/// Closed-form right-hand sides for sum u^n/(n^3 C(2n,n)) * {H_(n-1), H_(2n-1),
/// H_(n-1) - H_(2n-1)} in polylogarithms of y = y(u). Requires u < 0.
CertifiedReal dk_rhs(DkKind kind, const CertifiedReal& u, const PrecisionContext& ctx);

}  // namespace polyapery
