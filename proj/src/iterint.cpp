#include "polyapery/iterint.hpp"

#include <sstream>

namespace polyapery {

namespace {

bool exactly(const CertifiedReal& x, long v) { return x.error.is_zero() && x.value == v; }

}  // namespace

IteratedWord::IteratedWord(std::vector<CertifiedReal> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw DomainError("empty iterated word");
  if (exactly(letters_.front(), 1)) throw DomainError("word starts with letter 1 (divergent at t = 1)");
  if (letters_.back().value.is_zero()) throw DomainError("word ends with letter 0 (divergent at t = 0)");
  for (const auto& a : letters_) {
    if (a.value.is_zero()) {
      if (!a.error.is_zero()) throw DomainError("letter enclosure contains zero");
      continue;
    }
    if (a.lower_magnitude() < 1 && !(abs(a.value) == 1 && a.error.is_zero())) {
      if (a.magnitude_bound() < 1) {
        throw DomainError("letter of modulus below 1 lies on the integration path");
      }
      throw DomainError("cannot certify |letter| >= 1");
    }
  }
}

std::string IteratedWord::to_string(int digits) const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ", ";
    os << letters_[i].value.to_string(digits);
  }
  os << '}';
  return os.str();
}

IteratedWord word_from_mpl(const Composition& idx, std::span<const CertifiedReal> args) {
  if (idx.empty() || args.size() != idx.depth()) throw DomainError("composition/argument depth mismatch");
  const mpfr_prec_t prec = args[0].precision();
  std::vector<CertifiedReal> letters;
  CertifiedReal prefix = CertifiedReal::exact(1, prec);
  for (std::size_t i = 0; i < idx.depth(); ++i) {
    if (args[i].value.is_zero()) throw DomainError("word_from_mpl: zero argument has no word");
    for (int z = 1; z < idx[i]; ++z) letters.push_back(CertifiedReal::exact(0, prec));
    prefix = prefix * args[i];
    letters.push_back(CertifiedReal::exact(1, prec) / prefix);
  }
  return IteratedWord(std::move(letters));
}

IteratedWord word_from_mpl(const Composition& idx, const CertifiedReal& x) {
  if (x.value.is_zero()) throw DomainError("word_from_mpl: x = 0 has no word");
  if (idx.empty()) throw DomainError("empty composition");
  // The letter is the same 1/x in every block.
  const CertifiedReal letter = CertifiedReal::exact(1, x.precision()) / x;
  std::vector<CertifiedReal> letters;
  for (int k : idx.parts()) {
    for (int z = 1; z < k; ++z) letters.push_back(CertifiedReal::exact(0, x.precision()));
    letters.push_back(letter);
  }
  return IteratedWord(std::move(letters));
}

std::pair<Composition, MplArgument> mpl_from_word(const IteratedWord& word) {
  std::vector<int> parts;
  MplArgument args;
  int zeros = 0;
  const mpfr_prec_t prec = word.letters().front().precision();
  CertifiedReal previous = CertifiedReal::exact(1, prec);
  for (const auto& a : word.letters()) {
    if (a.value.is_zero()) {
      ++zeros;
      continue;
    }
    parts.push_back(zeros + 1);
    // identical letters give an exact 1
    if (a.value == previous.value && a.error == previous.error) {
      args.push_back(CertifiedReal::exact(1, prec));
    } else {
      args.push_back(previous / a);
    }
    previous = a;
    zeros = 0;
  }
  return {Composition(std::move(parts)), std::move(args)};
}

CertifiedReal eval_word(const IteratedWord& word, const PrecisionContext& ctx) {
  auto [idx, args] = mpl_from_word(word);
  return mpl(idx, args, ctx);
}

CertifiedReal h_m1001(const CertifiedReal& y, const PrecisionContext& ctx) {
  if (!(y.value > 0) || !(y.value < 1)) throw DomainError("h_m1001 requires 0 < y < 1");
  // integral_0^{-y} Li3(x)/(1+x) dx = -integral_0^y Li3(-t)/(1-t) dt
  //   = -sum_{n > m > 0} y^n (-1)^m / (n m^3)
  const CertifiedReal args[] = {y, CertifiedReal::exact(-1, y.precision())};
  return -mpl(Composition{1, 3}, args, ctx);
}

}  // namespace polyapery
