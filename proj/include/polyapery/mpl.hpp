#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "polyapery/precision.hpp"

namespace polyapery {

/// Index (k1, ..., kr) of a multiple polylogarithm; every part is >= 1.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t depth() const { return parts_.size(); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// "3,1"
  std::string to_string() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// Arguments (x1, ..., xr) paired with a Composition of the same depth.
using MplArgument = std::vector<CertifiedReal>;

/// A partial sum of the nested series at a fixed outer cutoff.
struct TruncatedSeries {
  Real partial;
  Real tail_bound;  // upper bound on |full sum - partial|
};

/// Li_k(x) = sum x^n / n^k.
CertifiedReal li(int k, const CertifiedReal& x, const PrecisionContext& ctx);

/// Li_{k1..kr}(x1..xr) = sum_{n1 > ... > nr > 0} x1^n1 ... xr^nr / (n1^k1 ... nr^kr).
///
/// Prefix products |x1...xj| must not exceed 1. When they are all below 1 the
/// series is summed directly with a geometric tail bound. Prefixes of modulus
/// exactly 1 are handled by splitting the iterated-integral representation at
/// 1/2, which leaves only series of ratio at most 1/2.
CertifiedReal mpl(const Composition& idx, std::span<const CertifiedReal> args,
                  const PrecisionContext& ctx);

/// Li_{k1..kr}(x, 1, ..., 1).
CertifiedReal mpl_single(const Composition& idx, const CertifiedReal& x,
                         const PrecisionContext& ctx);

/// zeta(k1..kr) = Li_{k1..kr}(1); requires k1 >= 2.
CertifiedReal mzv(const Composition& idx, const PrecisionContext& ctx);

/// Nielsen S_{a,b}(z) = Li_{a+1, 1^(b-1)}(z) for 0 <= z <= 1.
CertifiedReal nielsen(int a, int b, const CertifiedReal& z, const PrecisionContext& ctx);

/// Direct partial sum over n1 <= cutoff with the rigorous tail bound at that
/// cutoff. Requires every prefix modulus below 1.
TruncatedSeries mpl_truncated(const Composition& idx, std::span<const CertifiedReal> args,
                              long cutoff, const PrecisionContext& ctx);

/// The tail bound used by the direct path:
/// rho^(N+1) (1 + ln(N+1))^(r-1) / ((N+1)^k1 (1 - q)),  q = rho (1 + 1/(N+1))^(r-1).
/// Returns +inf when q >= 1.
Real mpl_tail_bound(const Real& rho_upper, int k1, std::size_t depth, long cutoff);

}  // namespace polyapery
