#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

#include "polyapery/precision.hpp"

namespace polyapery {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Integrand = std::function<Real(const Real&)>;

struct QuadratureOptions {
  /// Absolute tolerance; defaults to 10^-max(35, digits + 3).
  std::optional<Real> tolerance;
  /// Gauss-Legendre points per panel; 0 picks one from the precision.
  int order = 0;
  int max_depth = 400;
  long max_panels = 200'000;
};

/// Adaptive Gauss-Legendre quadrature with panel bisection.
///
/// A panel is accepted when its single-panel estimate agrees with the sum of
/// its two halves to within its share of the tolerance. The returned error is
/// the sum of those disagreements: an estimate, not a rigorous bound. Intended
/// as an independent oracle for the series evaluators. Endpoint singularities
/// of logarithmic type are handled by repeated bisection toward the endpoint.
CertifiedReal quadrature(const Integrand& f, const Real& a, const Real& b, const PrecisionContext& ctx,
                         const QuadratureOptions& options = {});

/// S_{a,b}(z) from (-1)^(a-1+b) / ((a-1)! b!) integral_0^1 ln^(a-1)(t) ln^b(1 - z t) / t dt.
CertifiedReal nielsen_integral(int a, int b, const CertifiedReal& z, const PrecisionContext& ctx);

/// integral_0^{-y} Li_3(x)/(1+x) dx with Li_3 evaluated by series at every node.
CertifiedReal h_m1001_integral(const CertifiedReal& y, const PrecisionContext& ctx);

}  // namespace polyapery
