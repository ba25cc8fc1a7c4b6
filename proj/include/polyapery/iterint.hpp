#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyapery/mpl.hpp"

namespace polyapery {

/// Iterated integral over 0 < t_n < ... < t_1 < 1 of w(a_1)(t_1) ... w(a_n)(t_n),
/// with w(0) = dt/t and w(a) = dt/(a - t) otherwise.
///
/// With this orientation Li_{k1..kr}(x) corresponds to the word
/// 0^(k1-1) x^-1 0^(k2-1) x^-1 ... and carries no extra sign, so
/// {0, y^-1, y^-1} evaluates to Li_{2,1}(y) and {2} to Li_1(1/2) = ln 2.
class IteratedWord {
 public:
  /// Validates: non-empty, first letter != 1, last letter != 0, and every
  /// nonzero letter has modulus >= 1. Throws DomainError.
  explicit IteratedWord(std::vector<CertifiedReal> letters);

  const std::vector<CertifiedReal>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  std::string to_string(int digits = 6) const;

 private:
  std::vector<CertifiedReal> letters_;
};

/// Word of the single-variable Li_{idx}(x); rejects x = 0.
IteratedWord word_from_mpl(const Composition& idx, const CertifiedReal& x);
/// Word of the multi-variable Li_{idx}(x1..xr): nonzero letters 1/(x1...xj).
IteratedWord word_from_mpl(const Composition& idx, std::span<const CertifiedReal> args);

/// Inverse of word_from_mpl: x1 = 1/a1, xj = a(j-1)/aj over the nonzero letters.
std::pair<Composition, MplArgument> mpl_from_word(const IteratedWord& word);

CertifiedReal eval_word(const IteratedWord& word, const PrecisionContext& ctx);

/// H_{-1,0,0,1}(-y) = integral_0^{-y} Li_3(x)/(1+x) dx for 0 < y < 1, summed as
/// -Li_{1,3}(y, -1).
CertifiedReal h_m1001(const CertifiedReal& y, const PrecisionContext& ctx);

}  // namespace polyapery
