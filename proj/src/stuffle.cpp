#include "polyapery/stuffle.hpp"

#include <set>
#include <sstream>

namespace polyapery {

void FormalSum::add(const Composition& c, long coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(c, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

long FormalSum::coefficient(const Composition& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? 0 : it->second;
}

std::string FormalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, k] : terms_) {
    long v = k;
    if (!first) {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    } else if (v < 0) {
      os << '-';
      v = -v;
    }
    if (v != 1) os << v << '*';
    os << '(' << c.to_string() << ')';
    first = false;
  }
  return os.str();
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  for (const auto& [c, k] : other.terms_) add(c, k);
  return *this;
}

FormalSum operator*(long c, const FormalSum& s) {
  FormalSum out;
  for (const auto& [comp, k] : s.terms_) out.add(comp, c * k);
  return out;
}

namespace {

Composition tail(const Composition& c) {
  return Composition(std::vector<int>(c.parts().begin() + 1, c.parts().end()));
}

FormalSum prepend(int head, const FormalSum& s) {
  FormalSum out;
  for (const auto& [c, k] : s.terms()) {
    std::vector<int> parts{head};
    parts.insert(parts.end(), c.parts().begin(), c.parts().end());
    out.add(Composition(std::move(parts)), k);
  }
  return out;
}

FormalSum stuffle(const Composition& a, const Composition& b) {
  if (a.empty()) return FormalSum(b);
  if (b.empty()) return FormalSum(a);
  const Composition ta = tail(a);
  const Composition tb = tail(b);
  FormalSum out = prepend(a[0], stuffle(ta, b));
  out += prepend(b[0], stuffle(a, tb));
  out += prepend(a[0] + b[0], stuffle(ta, tb));
  return out;
}

}  // namespace

FormalSum quasi_shuffle(const Composition& a, const Composition& b) {
  if (a.depth() > kMaxStuffleDepth || b.depth() > kMaxStuffleDepth) {
    throw CapacityError("quasi_shuffle supports depth <= " + std::to_string(kMaxStuffleDepth));
  }
  return stuffle(a, b);
}

FormalSum quasi_shuffle(const FormalSum& a, const FormalSum& b) {
  FormalSum out;
  for (const auto& [ca, ka] : a.terms()) {
    for (const auto& [cb, kb] : b.terms()) out += (ka * kb) * quasi_shuffle(ca, cb);
  }
  return out;
}

namespace {

// Running values of zeta_m over every suffix of a set of compositions.
class PartialSums {
 public:
  void track(const Composition& c) {
    for (std::size_t i = 0; i <= c.depth(); ++i) {
      Composition s(std::vector<int>(c.parts().begin() + static_cast<long>(i), c.parts().end()));
      values_.try_emplace(s, s.empty() ? mpq_class(1) : mpq_class(0));
    }
  }

  // Moves from zeta_(m-1) to zeta_m. Longer suffixes first so each update
  // reads the tail value at m-1.
  void step(long m) {
    for (auto it = by_depth().rbegin(); it != by_depth().rend(); ++it) {
      const Composition& c = it->second;
      mpq_class term = values_.at(tail(c));
      mpz_class power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(c[0]));
      term /= power;
      values_[c] += term;
    }
  }

  const mpq_class& value(const Composition& c) const { return values_.at(c); }

 private:
  const std::multimap<std::size_t, Composition>& by_depth() {
    if (order_.size() + 1 != values_.size()) {
      order_.clear();
      for (const auto& [c, v] : values_) {
        if (!c.empty()) order_.emplace(c.depth(), c);
      }
    }
    return order_;
  }

  std::map<Composition, mpq_class> values_;
  std::multimap<std::size_t, Composition> order_;
};

}  // namespace

mpq_class partial_sum(const Composition& c, long n) {
  if (n < 1) throw DomainError("partial_sum requires n >= 1");
  PartialSums sums;
  sums.track(c);
  for (long m = 1; m < n; ++m) sums.step(m);
  return sums.value(c);
}

mpq_class evaluate(const FormalSum& s, long n) {
  mpq_class total = 0;
  for (const auto& [c, k] : s.terms()) total += partial_sum(c, n) * k;
  return total;
}

bool verify_stuffle_numeric(const Composition& a, const Composition& b, long n_max) {
  if (n_max < 1) throw DomainError("verify_stuffle_numeric requires N >= 1");
  const FormalSum product = quasi_shuffle(a, b);
  PartialSums sums;
  sums.track(a);
  sums.track(b);
  for (const auto& [c, k] : product.terms()) sums.track(c);
  auto holds = [&] {
    mpq_class rhs = 0;
    for (const auto& [c, k] : product.terms()) rhs += sums.value(c) * k;
    return sums.value(a) * sums.value(b) == rhs;
  };
  // n = 1: every sum is over an empty range
  if (!holds()) return false;
  for (long n = 2; n <= n_max; ++n) {
    sums.step(n - 1);
    if (!holds()) return false;
  }
  return true;
}

}  // namespace polyapery
