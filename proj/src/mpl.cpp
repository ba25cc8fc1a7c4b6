#include "polyapery/mpl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

namespace polyapery {

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw DomainError("composition parts must be >= 1");
  }
}

int Composition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

std::string Composition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

namespace {

constexpr long kMaxCutoff = 20'000'000;

bool is_exact(const CertifiedReal& x, long v) { return x.error.is_zero() && x.value == v; }

bool is_unit(const CertifiedReal& x) { return is_exact(x, 1) || is_exact(x, -1); }

enum class Route { kZero, kDirect, kSplit };

struct Classification {
  Route route = Route::kDirect;
  Real rho_upper{64};  // max prefix modulus (upper bound), direct route only
};

Classification classify(const Composition& idx, std::span<const CertifiedReal> args) {
  if (idx.empty()) throw DomainError("empty composition");
  if (args.size() != idx.depth()) {
    throw DomainError("composition of depth " + std::to_string(idx.depth()) + " paired with " +
                      std::to_string(args.size()) + " arguments");
  }
  Classification c;
  for (const auto& x : args) {
    if (x.value.is_zero()) {
      if (!x.error.is_zero()) throw DomainError("argument enclosure contains zero");
      c.route = Route::kZero;
      return c;
    }
  }
  if (idx[0] == 1 && is_exact(args[0], 1)) {
    throw DomainError("inadmissible: k1 = 1 with x1 = 1 diverges");
  }
  const mpfr_prec_t prec = args[0].precision();
  CertifiedReal prefix = CertifiedReal::exact(1, prec);
  bool unit = false;
  for (const auto& x : args) {
    prefix = prefix * x;
    if (is_unit(prefix)) {
      unit = true;
      continue;
    }
    Real upper = prefix.magnitude_bound();
    if (prefix.lower_magnitude() > 1) {
      throw DomainError("divergent: prefix product |x1...xj| exceeds 1");
    }
    if (!(upper < 1)) {
      throw DomainError("cannot certify convergence: prefix product enclosure reaches 1");
    }
    if (upper > c.rho_upper) c.rho_upper = upper;
  }
  c.route = unit ? Route::kSplit : Route::kDirect;
  return c;
}

struct DirectResult {
  Real partial;
  Real abs_sum;       // sum of |terms|, 64-bit
  Real weighted_sum;  // sum of n1 |terms|, 64-bit
};

DirectResult sum_direct(const Composition& idx, std::span<const CertifiedReal> args, long cutoff,
                        mpfr_prec_t prec) {
  const std::size_t r = idx.depth();
  std::vector<Real> sums(r, Real(prec));
  std::vector<Real> powers;
  std::vector<Real> abs_sums(r, Real(64));
  std::vector<Real> abs_powers;
  std::vector<Real> xs;
  std::vector<Real> abs_xs;
  for (const auto& x : args) {
    xs.push_back(x.value.with_precision(prec));
    abs_xs.push_back(abs(x.value).with_precision(64));
  }
  powers.assign(r, Real(1L, prec));
  abs_powers.assign(r, Real(1L, 64));

  Real weighted(64);
  Real term(prec);
  Real abs_term(64);
  for (long n = 1; n <= cutoff; ++n) {
    // Outer levels first so that each reads the inner sum over indices < n.
    for (std::size_t i = 0; i < r; ++i) {
      powers[i] *= xs[i];
      abs_powers[i] *= abs_xs[i];
      mpfr_set(term.get(), powers[i].get(), MPFR_RNDN);
      mpfr_set(abs_term.get(), abs_powers[i].get(), MPFR_RNDN);
      for (int e = 0; e < idx[i]; ++e) {
        mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_div_ui(abs_term.get(), abs_term.get(), static_cast<unsigned long>(n), MPFR_RNDN);
      }
      if (i + 1 < r) {
        mpfr_mul(term.get(), term.get(), sums[i + 1].get(), MPFR_RNDN);
        mpfr_mul(abs_term.get(), abs_term.get(), abs_sums[i + 1].get(), MPFR_RNDN);
      }
      mpfr_add(sums[i].get(), sums[i].get(), term.get(), MPFR_RNDN);
      mpfr_add(abs_sums[i].get(), abs_sums[i].get(), abs_term.get(), MPFR_RNDN);
      if (i == 0) {
        mpfr_mul_ui(abs_term.get(), abs_term.get(), static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_add(weighted.get(), weighted.get(), abs_term.get(), MPFR_RNDN);
      }
    }
  }
  return DirectResult{std::move(sums[0]), std::move(abs_sums[0]), std::move(weighted)};
}

double log_tail_estimate(double rho, int k1, std::size_t depth, long n) {
  const double np1 = static_cast<double>(n) + 1.0;
  const double rm1 = static_cast<double>(depth) - 1.0;
  const double q = rho * std::pow(1.0 + 1.0 / np1, rm1);
  if (q >= 1.0) return std::numeric_limits<double>::infinity();
  return np1 * std::log(rho) + rm1 * std::log(1.0 + std::log(np1)) - k1 * std::log(np1) -
         std::log1p(-q);
}

long choose_cutoff(double rho, int k1, std::size_t depth, double log_target) {
  long hi = 1;
  while (log_tail_estimate(rho, k1, depth, hi) > log_target) {
    hi *= 2;
    if (hi > kMaxCutoff) throw CapacityError("series cutoff exceeds capacity (argument too close to 1)");
  }
  long lo = hi / 2;
  while (lo + 1 < hi) {
    long mid = (lo + hi) / 2;
    if (log_tail_estimate(rho, k1, depth, mid) > log_target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

CertifiedReal certify_direct(const Composition& idx, std::span<const CertifiedReal> args,
                             const DirectResult& d, const Real& tail, long cutoff, mpfr_prec_t prec) {
  const long r = static_cast<long>(idx.depth());
  // rounding: every term carries at most (4 r n + 16) relative ulps
  Real rounding = upward::mul(d.abs_sum, Real(4 * r * cutoff + 16, 64));
  rounding = upward::scale2(rounding, 1 - static_cast<long>(prec));
  // input uncertainty: d term / d x_i = n_i / x_i * term, n_i <= n1
  Real rel(64);
  for (const auto& x : args) {
    if (x.error.is_zero()) continue;
    Real low(64);
    mpfr_abs(low.get(), x.value.get(), MPFR_RNDD);
    mpfr_sub(low.get(), low.get(), x.error.get(), MPFR_RNDD);
    rel = upward::add(rel, upward::div(x.error, low));
  }
  Real propagated = upward::scale2(upward::mul(rel, d.weighted_sum), 1);
  Real err = upward::add(upward::add(tail, rounding), propagated);
  return CertifiedReal(d.partial, std::move(err), static_cast<std::size_t>(cutoff) * idx.depth());
}

CertifiedReal evaluate_direct(const Composition& idx, std::span<const CertifiedReal> args,
                              const Real& rho_upper, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = std::max(ctx.working_bits(), args[0].precision());
  Real rho_d(64);
  mpfr_set(rho_d.get(), rho_upper.get(), MPFR_RNDU);
  const double rho = mpfr_get_d(rho_d.get(), MPFR_RNDU);
  const double log_target = static_cast<double>(ctx.epsilon_log2()) * std::log(2.0) - std::log(4.0);
  long cutoff = choose_cutoff(rho, idx[0], idx.depth(), log_target);
  Real eps_quarter = upward::scale2(ctx.epsilon(), -2);
  Real tail = mpl_tail_bound(rho_upper, idx[0], idx.depth(), cutoff);
  while (tail > eps_quarter) {
    cutoff += cutoff / 8 + 1;
    if (cutoff > kMaxCutoff) throw CapacityError("series cutoff exceeds capacity");
    tail = mpl_tail_bound(rho_upper, idx[0], idx.depth(), cutoff);
  }
  DirectResult d = sum_direct(idx, args, cutoff, prec);
  return certify_direct(idx, args, d, tail, cutoff, prec);
}

// Iterated-integral letters on the path 0 -> 1 with forms dt/t (zero letter)
// and dt/(a - t).
struct Letter {
  std::optional<CertifiedReal> value;  // nullopt = 0
  bool is_zero() const { return !value.has_value(); }
};

// Value of the word on [0, 1] when every prefix of the derived MPL has modulus < 1.
CertifiedReal word_series(const std::vector<Letter>& word, const PrecisionContext& ctx,
                          mpfr_prec_t prec) {
  if (word.empty()) return CertifiedReal::exact(1, prec);
  std::vector<int> parts;
  MplArgument args;
  int zeros = 0;
  CertifiedReal previous = CertifiedReal::exact(1, prec);
  for (const auto& l : word) {
    if (l.is_zero()) {
      ++zeros;
      continue;
    }
    parts.push_back(zeros + 1);
    args.push_back(previous / *l.value);
    previous = *l.value;
    zeros = 0;
  }
  if (zeros != 0) throw DomainError("word ends in a zero letter");
  Composition idx(std::move(parts));
  Classification c = classify(idx, args);
  if (c.route == Route::kZero) return CertifiedReal::exact(0, prec);
  if (c.route == Route::kSplit) throw DomainError("split piece still touches the unit circle");
  return evaluate_direct(idx, args, c.rho_upper, ctx);
}

// I(0; w; 1) = sum_j I(1/2; w_1..w_j; 1) I(0; w_j+1..w_n; 1/2).
// Under t -> 1 - t the top piece becomes I(0; T(w_j)..T(w_1); 1/2) with
// T(0) = 1, T(1) = 0, T(a) = 1 - a and a sign flip per letter outside {0, 1}.
CertifiedReal evaluate_split(const Composition& idx, std::span<const CertifiedReal> args,
                             const PrecisionContext& ctx) {
  const mpfr_prec_t prec = std::max(ctx.working_bits(), args[0].precision());
  std::vector<Letter> word;
  CertifiedReal prefix = CertifiedReal::exact(1, prec);
  for (std::size_t i = 0; i < idx.depth(); ++i) {
    for (int z = 1; z < idx[i]; ++z) word.push_back(Letter{});
    prefix = prefix * args[i];
    word.push_back(Letter{CertifiedReal::exact(1, prec) / prefix});
  }
  const std::size_t n = word.size();
  const CertifiedReal two = CertifiedReal::exact(2, prec);

  CertifiedReal total = CertifiedReal::exact(0, prec);
  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<Letter> top;
    bool negate = false;
    for (std::size_t i = j; i-- > 0;) {
      const Letter& l = word[i];
      if (l.is_zero()) {
        top.push_back(Letter{two});
      } else if (is_exact(*l.value, 1)) {
        top.push_back(Letter{});
      } else {
        top.push_back(Letter{(CertifiedReal::exact(1, prec) - *l.value) * 2});
        negate = !negate;
      }
    }
    std::vector<Letter> bottom;
    for (std::size_t i = j; i < n; ++i) {
      const Letter& l = word[i];
      bottom.push_back(l.is_zero() ? Letter{} : Letter{*l.value * 2});
    }
    CertifiedReal piece = word_series(top, ctx, prec) * word_series(bottom, ctx, prec);
    total = negate ? total - piece : total + piece;
  }
  return total;
}

}  // namespace

Real mpl_tail_bound(const Real& rho_upper, int k1, std::size_t depth, long cutoff) {
  Real inf(64);
  mpfr_set_inf(inf.get(), 1);
  if (rho_upper.is_zero()) return Real(64);
  const long np1 = cutoff + 1;
  const long rm1 = static_cast<long>(depth) - 1;
  // q = rho (1 + 1/(N+1))^(r-1)
  Real q(64);
  mpfr_set_si(q.get(), np1 + 1, MPFR_RNDU);
  mpfr_div_si(q.get(), q.get(), np1, MPFR_RNDU);
  mpfr_pow_si(q.get(), q.get(), rm1, MPFR_RNDU);
  q = upward::mul(q, rho_upper);
  if (!(q < 1)) return inf;
  Real one_minus_q(64);
  mpfr_si_sub(one_minus_q.get(), 1, q.get(), MPFR_RNDD);

  Real bound(64);
  mpfr_pow_si(bound.get(), rho_upper.get(), np1, MPFR_RNDU);
  Real logs(64);
  mpfr_set_si(logs.get(), np1, MPFR_RNDU);
  mpfr_log(logs.get(), logs.get(), MPFR_RNDU);
  mpfr_add_ui(logs.get(), logs.get(), 1, MPFR_RNDU);
  mpfr_pow_si(logs.get(), logs.get(), rm1, MPFR_RNDU);
  bound = upward::mul(bound, logs);
  Real npow(64);
  mpfr_set_si(npow.get(), np1, MPFR_RNDD);
  mpfr_pow_si(npow.get(), npow.get(), k1, MPFR_RNDD);
  bound = upward::div(bound, npow);
  return upward::div(bound, one_minus_q);
}

TruncatedSeries mpl_truncated(const Composition& idx, std::span<const CertifiedReal> args,
                              long cutoff, const PrecisionContext& ctx) {
  Classification c = classify(idx, args);
  const mpfr_prec_t prec = std::max(ctx.working_bits(), args[0].precision());
  if (c.route == Route::kZero) return TruncatedSeries{Real(prec), Real(64)};
  if (c.route == Route::kSplit) throw DomainError("truncated sums require prefix moduli below 1");
  DirectResult d = sum_direct(idx, args, cutoff, prec);
  return TruncatedSeries{std::move(d.partial), mpl_tail_bound(c.rho_upper, idx[0], idx.depth(), cutoff)};
}

CertifiedReal mpl(const Composition& idx, std::span<const CertifiedReal> args,
                  const PrecisionContext& ctx) {
  Classification c = classify(idx, args);
  switch (c.route) {
    case Route::kZero:
      return CertifiedReal::exact(0, ctx.working_bits());
    case Route::kDirect:
      return evaluate_direct(idx, args, c.rho_upper, ctx);
    case Route::kSplit:
      return evaluate_split(idx, args, ctx);
  }
  return CertifiedReal();
}

CertifiedReal li(int k, const CertifiedReal& x, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("li requires k >= 1");
  const CertifiedReal args[] = {x};
  return mpl(Composition{k}, args, ctx);
}

CertifiedReal mpl_single(const Composition& idx, const CertifiedReal& x, const PrecisionContext& ctx) {
  if (idx.empty()) throw DomainError("empty composition");
  MplArgument args;
  args.push_back(x);
  for (std::size_t i = 1; i < idx.depth(); ++i) args.push_back(CertifiedReal::exact(1, x.precision()));
  return mpl(idx, args, ctx);
}

CertifiedReal mzv(const Composition& idx, const PrecisionContext& ctx) {
  if (idx.empty()) throw DomainError("empty composition");
  if (idx[0] < 2) throw DomainError("inadmissible: zeta(k1, ...) requires k1 >= 2");
  return mpl_single(idx, CertifiedReal::exact(1, ctx.working_bits()), ctx);
}

CertifiedReal nielsen(int a, int b, const CertifiedReal& z, const PrecisionContext& ctx) {
  if (a < 1 || b < 1) throw DomainError("nielsen requires a, b >= 1");
  if (z.value.sign() < 0 || z.value > 1) {
    throw DomainError("nielsen: z outside the supported real branch [0, 1]");
  }
  std::vector<int> parts(static_cast<std::size_t>(b), 1);
  parts[0] = a + 1;
  return mpl_single(Composition(std::move(parts)), z, ctx);
}

}  // namespace polyapery
