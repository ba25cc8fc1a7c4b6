#pragma once

#include <cstdint>
#include <string>

#include "polyapery/expr.hpp"
#include "polyapery/precision.hpp"
#include "polyapery/registry.hpp"

namespace testkit {

using polyapery::CertifiedReal;
using polyapery::Real;

/// 10^-e at 64 bits.
Real tenth_power(long e);

Real parse(const char* decimal, mpfr_prec_t prec);

/// |a - b| <= 10^-digits
bool agrees(const Real& a, const Real& b, long digits);
bool agrees(const CertifiedReal& a, const char* decimal, long digits);
bool agrees(const CertifiedReal& a, const CertifiedReal& b, long digits);

/// Evaluates a value token such as "gf^2" or "3/10".
CertifiedReal value(const std::string& token, const polyapery::PrecisionContext& ctx);

struct PropertyResult {
  bool ok = true;
  std::size_t checked = 0;
  std::string detail;  // first counterexample
};

/// Partial sums at random cutoffs stay within the reported tail bound of the
/// fully converged value.
PropertyResult apery_tail_soundness(int count, std::uint64_t seed);
PropertyResult mpl_tail_soundness(int count, std::uint64_t seed);

/// Commutativity of pairs and associativity of triples over every non-empty
/// composition, with total weight at most max_weight.
PropertyResult stuffle_laws(int max_weight);

/// Perturbs every rational literal on the right-hand side of every non-limit
/// case of I1..I22 by 10^-6 and expects FAIL.
PropertyResult mutation_sweep(long digits);

/// 5/108 -> 5/107 in I4.
PropertyResult mutation_i4(long digits);

/// I1..I11: left sides use only apery_sum, right sides never do.
PropertyResult structural_independence();

}  // namespace testkit
