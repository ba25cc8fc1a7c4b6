#pragma once

#include <map>
#include <string>

#include <gmpxx.h>

#include "polyapery/mpl.hpp"

namespace polyapery {

inline constexpr std::size_t kMaxStuffleDepth = 4;

/// Integer combination of nested partial sums zeta_(n-1)(c) indexed by compositions.
/// zeta_(n-1)(c1..cr) = sum_{n > k1 > ... > kr > 0} 1/(k1^c1 ... kr^cr); the empty
/// composition stands for the constant 1.
class FormalSum {
 public:
  FormalSum() = default;
  /// 1 * c
  explicit FormalSum(const Composition& c) { add(c, 1); }

  void add(const Composition& c, long coefficient);
  long coefficient(const Composition& c) const;
  const std::map<Composition, long>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// "2*(1,1) + (2)"
  std::string to_string() const;

  FormalSum& operator+=(const FormalSum& other);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator*(long c, const FormalSum& s);
  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  std::map<Composition, long> terms_;  // no zero coefficients
};

/// Stuffle product: (a1,a') * (b1,b') = (a1, a' * b) + (b1, a * b') + (a1+b1, a' * b').
/// CapacityError when either factor has depth above kMaxStuffleDepth.
FormalSum quasi_shuffle(const Composition& a, const Composition& b);

/// Bilinear extension.
FormalSum quasi_shuffle(const FormalSum& a, const FormalSum& b);

/// zeta_(n-1)(c), exactly.
mpq_class partial_sum(const Composition& c, long n);

/// Evaluates s at upper bound n-1, exactly.
mpq_class evaluate(const FormalSum& s, long n);

/// Checks zeta_(n-1)(a) zeta_(n-1)(b) = sum over quasi_shuffle(a, b) for every n <= N.
/// N < 1 is a DomainError.
bool verify_stuffle_numeric(const Composition& a, const Composition& b, long n_max);

}  // namespace polyapery
