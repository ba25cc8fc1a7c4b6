#include "polyapery/apery.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "polyapery/iterint.hpp"

namespace polyapery {

std::string to_string(HarmonicFactor f) {
  switch (f) {
    case HarmonicFactor::kOne: return "1";
    case HarmonicFactor::kHn: return "H(n)";
    case HarmonicFactor::kHnm1: return "H(n-1)";
    case HarmonicFactor::kH2n: return "H(2n)";
    case HarmonicFactor::kH2nm1: return "H(2n-1)";
    case HarmonicFactor::kH2Order: return "H2(n-1)";
    case HarmonicFactor::kZ11: return "Z11(n-1)";
    case HarmonicFactor::kInvN: return "INV_N";
  }
  return "?";
}

std::string to_string(DkKind k) {
  switch (k) {
    case DkKind::kH: return "H";
    case DkKind::kH2: return "H2";
    case DkKind::kDiff: return "DIFF";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// HarmonicWeight

HarmonicWeight::HarmonicWeight(std::vector<HarmonicMonomial> terms) : terms_(std::move(terms)) {
  for (auto& t : terms_) {
    std::erase(t.factors, HarmonicFactor::kOne);
    std::sort(t.factors.begin(), t.factors.end());
  }
  std::erase_if(terms_, [](const HarmonicMonomial& t) { return t.coefficient == 0; });
}

HarmonicWeight HarmonicWeight::of(HarmonicFactor f) {
  return HarmonicWeight({HarmonicMonomial{1, {f}}});
}

int HarmonicWeight::log_degree() const {
  int best = 0;
  for (const auto& t : terms_) {
    int d = 0;
    for (auto f : t.factors) {
      if (f == HarmonicFactor::kZ11) {
        d += 2;
      } else if (f != HarmonicFactor::kOne && f != HarmonicFactor::kInvN && f != HarmonicFactor::kH2Order) {
        d += 1;
      }
    }
    best = std::max(best, d);
  }
  return best;
}

bool HarmonicWeight::needs_double_index() const {
  for (const auto& t : terms_) {
    for (auto f : t.factors) {
      if (f == HarmonicFactor::kH2n || f == HarmonicFactor::kH2nm1) return true;
    }
  }
  return false;
}

std::string HarmonicWeight::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    mpq_class c = t.coefficient;
    if (i) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0) {
      os << '-';
      c = -c;
    }
    bool need_star = false;
    if (c != 1 || t.factors.empty()) {
      os << c.get_str();
      need_star = true;
    }
    for (auto f : t.factors) {
      if (need_star) os << '*';
      os << polyapery::to_string(f);
      need_star = true;
    }
  }
  return os.str();
}

HarmonicWeight operator+(const HarmonicWeight& a, const HarmonicWeight& b) {
  std::vector<HarmonicMonomial> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return HarmonicWeight(std::move(terms));
}

HarmonicWeight operator*(const mpq_class& c, const HarmonicWeight& w) {
  std::vector<HarmonicMonomial> terms = w.terms_;
  for (auto& t : terms) t.coefficient *= c;
  return HarmonicWeight(std::move(terms));
}

namespace {

class WeightParser {
 public:
  explicit WeightParser(const std::string& text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }
  }

  HarmonicWeight parse() {
    if (s_.empty()) fail("empty weight");
    std::vector<HarmonicMonomial> terms;
    bool first = true;
    while (pos_ < s_.size()) {
      mpq_class sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      HarmonicMonomial m = term();
      m.coefficient *= sign;
      terms.push_back(std::move(m));
      first = false;
    }
    return HarmonicWeight(std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("weight '" + s_ + "': " + what + " at position " + std::to_string(pos_));
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool accept(const std::string& lit) {
    if (s_.compare(pos_, lit.size(), lit) == 0) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  HarmonicMonomial term() {
    HarmonicMonomial m;
    atom(m);
    while (peek() == '*') {
      ++pos_;
      atom(m);
    }
    return m;
  }

  void atom(HarmonicMonomial& m) {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(digits());
      if (peek() == '/') {
        ++pos_;
        if (accept("n")) {
          m.coefficient *= num;
          m.factors.push_back(HarmonicFactor::kInvN);
          return;
        }
        mpz_class den(digits());
        if (den == 0) fail("zero denominator");
        m.coefficient *= mpq_class(num, den);
        m.coefficient.canonicalize();
        return;
      }
      m.coefficient *= num;
      return;
    }
    HarmonicFactor f;
    if (accept("H(n)")) {
      f = HarmonicFactor::kHn;
    } else if (accept("H(n-1)")) {
      f = HarmonicFactor::kHnm1;
    } else if (accept("H(2n)")) {
      f = HarmonicFactor::kH2n;
    } else if (accept("H(2n-1)")) {
      f = HarmonicFactor::kH2nm1;
    } else if (accept("H2(n-1)")) {
      f = HarmonicFactor::kH2Order;
    } else if (accept("Z11(n-1)")) {
      f = HarmonicFactor::kZ11;
    } else if (accept("INV_N")) {
      f = HarmonicFactor::kInvN;
    } else {
      fail("unknown factor");
    }
    int power = 1;
    if (peek() == '^') {
      ++pos_;
      power = std::stoi(digits());
    }
    for (int i = 0; i < power; ++i) m.factors.push_back(f);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

HarmonicWeight HarmonicWeight::parse(const std::string& text) { return WeightParser(text).parse(); }

// ---------------------------------------------------------------------------
// Tables

HarmonicTables harmonic_tables(long n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("harmonic_tables requires N >= 1");
  if (n > kMaxHarmonicTable) throw CapacityError("harmonic table size exceeds capacity");
  const mpfr_prec_t prec = ctx.working_bits();
  HarmonicTables t;
  t.h.assign(static_cast<std::size_t>(n) + 1, Real(prec));
  t.h2.assign(static_cast<std::size_t>(n) + 1, Real(prec));
  t.z11.assign(static_cast<std::size_t>(n) + 1, Real(prec));
  for (long k = 1; k <= n; ++k) {
    Real inv(1L, prec);
    inv /= k;
    t.h[k] = t.h[k - 1] + inv;
    t.h2[k] = t.h2[k - 1] + inv * inv;
    t.z11[k] = t.z11[k - 1] + t.h[k - 1] * inv;
  }
  return t;
}

ExactHarmonicTables harmonic_tables_exact(long n) {
  if (n < 1) throw DomainError("harmonic_tables requires N >= 1");
  if (n > kMaxExactHarmonicTable) throw CapacityError("exact harmonic table size exceeds capacity");
  ExactHarmonicTables t;
  t.h.assign(static_cast<std::size_t>(n) + 1, mpq_class(0));
  t.h2 = t.h;
  t.z11 = t.h;
  for (long k = 1; k <= n; ++k) {
    const mpq_class inv(1, k);
    t.h[k] = t.h[k - 1] + inv;
    t.h2[k] = t.h2[k - 1] + inv * inv;
    t.z11[k] = t.z11[k - 1] + t.h[k - 1] * inv;
  }
  return t;
}

mpz_class central_binomial(long n) {
  if (n < 0) throw DomainError("central_binomial requires n >= 0");
  mpz_class c = 1;
  // C(2k, k) = C(2k-2, k-1) * 2(2k-1) / k
  for (long k = 1; k <= n; ++k) {
    c *= 2 * (2 * k - 1);
    c /= k;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Apery-like sums

namespace {

void validate(const AperySumSpec& spec) {
  if (spec.s < 2) throw DomainError("apery_sum requires s >= 2");
  if (!(spec.u.magnitude_bound() < 4)) throw DomainError("apery_sum diverges for |u| >= 4");
}

struct AperyPartial {
  Real partial;
  Real abs_sum;       // sum |u^n/(n^s C)| * |W|_abs(n)
  Real weighted_sum;  // sum n * (same)
  Real rounding;      // sum (16n + 32) * (same)
};

AperyPartial sum_terms(const AperySumSpec& spec, long cutoff, mpfr_prec_t prec) {
  const Real u = spec.u.value.with_precision(prec);
  Real ratio(1L, prec);  // u^n / C(2n, n)
  Real h_n(prec), h_nm1(prec), h_2n(prec), h_2nm1(prec), h2_nm1(prec), z11_nm1(prec);
  AperyPartial out{Real(prec), Real(64), Real(64), Real(64)};
  Real base(prec);
  Real factor(prec);
  Real monomial(prec);
  Real weight(prec);
  Real abs_weight(64);
  Real abs_mono(64);
  Real tmp64(64);
  for (long n = 1; n <= cutoff; ++n) {
    // advance harmonic quantities to index n
    if (n >= 2) {
      Real inv_prev(1L, prec);
      inv_prev /= (n - 1);
      z11_nm1 += h_nm1 * inv_prev;  // zeta_(n-1)(1,1) = zeta_(n-2)(1,1) + H_(n-2)/(n-1)
      h2_nm1 += inv_prev * inv_prev;
    }
    h_nm1 = h_n;
    {
      Real inv(1L, prec);
      inv /= n;
      h_n += inv;
      Real inv_odd(1L, prec);
      inv_odd /= (2 * n - 1);
      h_2nm1 = h_2n + inv_odd;
      Real inv_even(1L, prec);
      inv_even /= (2 * n);
      h_2n = h_2nm1 + inv_even;
    }

    mpfr_mul(ratio.get(), ratio.get(), u.get(), MPFR_RNDN);
    mpfr_mul_ui(ratio.get(), ratio.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_div_ui(ratio.get(), ratio.get(), static_cast<unsigned long>(2 * (2 * n - 1)), MPFR_RNDN);
    mpfr_set(base.get(), ratio.get(), MPFR_RNDN);
    for (int e = 0; e < spec.s; ++e) mpfr_div_ui(base.get(), base.get(), static_cast<unsigned long>(n), MPFR_RNDN);

    mpfr_set_zero(weight.get(), 1);
    mpfr_set_zero(abs_weight.get(), 1);
    for (const auto& t : spec.weight.terms()) {
      mpfr_set_q(monomial.get(), t.coefficient.get_mpq_t(), MPFR_RNDN);
      for (auto f : t.factors) {
        switch (f) {
          case HarmonicFactor::kOne: mpfr_set_ui(factor.get(), 1, MPFR_RNDN); break;
          case HarmonicFactor::kHn: mpfr_set(factor.get(), h_n.get(), MPFR_RNDN); break;
          case HarmonicFactor::kHnm1: mpfr_set(factor.get(), h_nm1.get(), MPFR_RNDN); break;
          case HarmonicFactor::kH2n: mpfr_set(factor.get(), h_2n.get(), MPFR_RNDN); break;
          case HarmonicFactor::kH2nm1: mpfr_set(factor.get(), h_2nm1.get(), MPFR_RNDN); break;
          case HarmonicFactor::kH2Order: mpfr_set(factor.get(), h2_nm1.get(), MPFR_RNDN); break;
          case HarmonicFactor::kZ11: mpfr_set(factor.get(), z11_nm1.get(), MPFR_RNDN); break;
          case HarmonicFactor::kInvN:
            mpfr_set_ui(factor.get(), 1, MPFR_RNDN);
            mpfr_div_ui(factor.get(), factor.get(), static_cast<unsigned long>(n), MPFR_RNDN);
            break;
        }
        mpfr_mul(monomial.get(), monomial.get(), factor.get(), MPFR_RNDN);
      }
      mpfr_add(weight.get(), weight.get(), monomial.get(), MPFR_RNDN);
      mpfr_abs(abs_mono.get(), monomial.get(), MPFR_RNDU);
      mpfr_add(abs_weight.get(), abs_weight.get(), abs_mono.get(), MPFR_RNDU);
    }
    mpfr_mul(base.get(), base.get(), weight.get(), MPFR_RNDN);
    mpfr_add(out.partial.get(), out.partial.get(), base.get(), MPFR_RNDN);

    // |u^n/(n^s C)| * |W|_abs
    mpfr_abs(tmp64.get(), ratio.get(), MPFR_RNDU);
    for (int e = 0; e < spec.s; ++e) mpfr_div_ui(tmp64.get(), tmp64.get(), static_cast<unsigned long>(n), MPFR_RNDU);
    mpfr_mul(tmp64.get(), tmp64.get(), abs_weight.get(), MPFR_RNDU);
    mpfr_add(out.abs_sum.get(), out.abs_sum.get(), tmp64.get(), MPFR_RNDU);
    Real scaled(64);
    mpfr_mul_ui(scaled.get(), tmp64.get(), static_cast<unsigned long>(n), MPFR_RNDU);
    mpfr_add(out.weighted_sum.get(), out.weighted_sum.get(), scaled.get(), MPFR_RNDU);
    mpfr_mul_ui(scaled.get(), tmp64.get(), static_cast<unsigned long>(16 * n + 32), MPFR_RNDU);
    mpfr_add(out.rounding.get(), out.rounding.get(), scaled.get(), MPFR_RNDU);
  }
  return out;
}

double log_weight_bound(const HarmonicWeight& w, double n) {
  const double lg = 1.0 + std::log(2.0 * n);
  double total = 0;
  for (const auto& t : w.terms()) {
    double m = std::abs(t.coefficient.get_d());
    for (auto f : t.factors) {
      switch (f) {
        case HarmonicFactor::kOne: break;
        case HarmonicFactor::kH2Order: m *= 2; break;
        case HarmonicFactor::kZ11: m *= lg * lg / 2; break;
        case HarmonicFactor::kInvN: m /= n; break;
        default: m *= lg; break;
      }
    }
    total += m;
  }
  return std::log(std::max(total, std::numeric_limits<double>::min()));
}

long choose_cutoff(double rho, int s, const HarmonicWeight& w, double log_target) {
  const int degree = w.log_degree();
  auto log_tail = [&](long n) {
    const double np1 = static_cast<double>(n) + 1;
    const double q = rho * std::pow(1 + 1 / np1, degree);
    if (q >= 1) return std::numeric_limits<double>::infinity();
    return np1 * std::log(rho) + std::log(2.0) + (0.5 - s) * std::log(np1) + log_weight_bound(w, np1) -
           std::log1p(-q);
  };
  long hi = 1;
  while (log_tail(hi) > log_target) {
    hi *= 2;
    if (hi > kMaxHarmonicTable) throw CapacityError("apery_sum cutoff exceeds capacity");
  }
  long lo = hi / 2;
  while (lo + 1 < hi) {
    long mid = (lo + hi) / 2;
    if (log_tail(mid) > log_target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

}  // namespace

Real apery_tail_bound(const Real& u_upper, int s, const HarmonicWeight& weight, long cutoff) {
  Real inf(64);
  mpfr_set_inf(inf.get(), 1);
  const long np1 = cutoff + 1;
  Real rho = upward::div(upward::magnitude(u_upper), Real(4L, 64));
  Real q(64);
  mpfr_set_si(q.get(), np1 + 1, MPFR_RNDU);
  mpfr_div_si(q.get(), q.get(), np1, MPFR_RNDU);
  mpfr_pow_si(q.get(), q.get(), weight.log_degree(), MPFR_RNDU);
  q = upward::mul(q, rho);
  if (!(q < 1)) return inf;
  Real one_minus_q(64);
  mpfr_si_sub(one_minus_q.get(), 1, q.get(), MPFR_RNDD);

  // W(N+1) with H-type factors bounded by 1 + ln(2n)
  Real lg(64);
  mpfr_set_si(lg.get(), 2 * np1, MPFR_RNDU);
  mpfr_log(lg.get(), lg.get(), MPFR_RNDU);
  mpfr_add_ui(lg.get(), lg.get(), 1, MPFR_RNDU);
  Real w_bound(64);
  for (const auto& t : weight.terms()) {
    Real m(64);
    mpfr_set_q(m.get(), t.coefficient.get_mpq_t(), MPFR_RNDU);
    mpfr_abs(m.get(), m.get(), MPFR_RNDU);
    for (auto f : t.factors) {
      switch (f) {
        case HarmonicFactor::kOne: break;
        case HarmonicFactor::kH2Order: mpfr_mul_ui(m.get(), m.get(), 2, MPFR_RNDU); break;
        case HarmonicFactor::kZ11:
          m = upward::mul(m, upward::mul(lg, lg));
          mpfr_div_ui(m.get(), m.get(), 2, MPFR_RNDU);
          break;
        case HarmonicFactor::kInvN: mpfr_div_si(m.get(), m.get(), np1, MPFR_RNDU); break;
        default: m = upward::mul(m, lg); break;
      }
    }
    w_bound = upward::add(w_bound, m);
  }

  Real bound(64);
  mpfr_pow_si(bound.get(), rho.get(), np1, MPFR_RNDU);
  Real g(64);
  mpfr_set_si(g.get(), np1, MPFR_RNDU);
  mpfr_sqrt(g.get(), g.get(), MPFR_RNDU);
  mpfr_mul_ui(g.get(), g.get(), 2, MPFR_RNDU);
  Real npow(64);
  mpfr_set_si(npow.get(), np1, MPFR_RNDD);
  mpfr_pow_si(npow.get(), npow.get(), s, MPFR_RNDD);
  g = upward::div(g, npow);
  bound = upward::mul(upward::mul(bound, g), w_bound);
  return upward::div(bound, one_minus_q);
}

TruncatedSeries apery_truncated(const AperySumSpec& spec, long cutoff, const PrecisionContext& ctx) {
  validate(spec);
  const mpfr_prec_t prec = std::max(ctx.working_bits(), spec.u.precision());
  AperyPartial p = sum_terms(spec, cutoff, prec);
  return TruncatedSeries{std::move(p.partial),
                         apery_tail_bound(spec.u.magnitude_bound(), spec.s, spec.weight, cutoff)};
}

CertifiedReal apery_sum(const AperySumSpec& spec, const PrecisionContext& ctx) {
  validate(spec);
  const mpfr_prec_t prec = std::max(ctx.working_bits(), spec.u.precision());
  if (spec.u.value.is_zero() && spec.u.error.is_zero()) return CertifiedReal::exact(0, prec);
  if (spec.weight.terms().empty()) return CertifiedReal::exact(0, prec);

  const Real u_upper = spec.u.magnitude_bound();
  Real rho64 = upward::div(u_upper, Real(4L, 64));
  const double rho = mpfr_get_d(rho64.get(), MPFR_RNDU);
  const double log_target = static_cast<double>(ctx.epsilon_log2()) * std::log(2.0) - std::log(4.0);
  long cutoff = choose_cutoff(rho, spec.s, spec.weight, log_target);
  const Real eps_quarter = upward::scale2(ctx.epsilon(), -2);
  Real tail = apery_tail_bound(u_upper, spec.s, spec.weight, cutoff);
  while (tail > eps_quarter) {
    cutoff += cutoff / 8 + 1;
    tail = apery_tail_bound(u_upper, spec.s, spec.weight, cutoff);
  }
  AperyPartial p = sum_terms(spec, cutoff, prec);

  Real err = upward::add(tail, upward::scale2(p.rounding, -static_cast<long>(prec)));
  if (!spec.u.error.is_zero()) {
    // d/du of u^n is n u^(n-1); relative sensitivity n * du/|u|
    Real low = spec.u.lower_magnitude();
    if (!(low > 0)) throw DomainError("apery_sum: u enclosure contains zero");
    Real rel = upward::div(spec.u.error, low);
    err = upward::add(err, upward::scale2(upward::mul(rel, p.weighted_sum), 1));
  }
  return CertifiedReal(std::move(p.partial), std::move(err), static_cast<std::size_t>(cutoff));
}

// ---------------------------------------------------------------------------
// DK substitution and right-hand sides

CertifiedReal y_of_u(const CertifiedReal& u, const PrecisionContext& ctx) {
  if (!(u.value < 0) || !(u.magnitude_bound() > 0) || !(u.lower_magnitude() > 0)) {
    if (u.value > 4) throw DomainError("y(u) for u > 4 needs the complex branch (unsupported)");
    throw DomainError("y(u) is defined only for u < 0 on the supported branch");
  }
  const mpfr_prec_t prec = std::max(ctx.working_bits(), u.precision());
  const CertifiedReal one = CertifiedReal::exact(1, prec);
  CertifiedReal r = sqrt(u / (u - CertifiedReal::exact(4, prec)));
  return (one - r) / (one + r);
}

namespace {

struct Combination {
  CertifiedReal total;
  explicit Combination(mpfr_prec_t prec) : total(CertifiedReal::exact(0, prec)) {}
  Combination& add(const mpq_class& c, const CertifiedReal& x) {
    total = total + scale(x, c);
    return *this;
  }
};

}  // namespace

CertifiedReal dk_rhs(DkKind kind, const CertifiedReal& u, const PrecisionContext& ctx) {
  const CertifiedReal y = y_of_u(u, ctx);
  const mpfr_prec_t prec = y.precision();
  const CertifiedReal one = CertifiedReal::exact(1, prec);
  const CertifiedReal my = -y;
  const CertifiedReal y2 = y * y;
  const CertifiedReal ly = log(y);
  const CertifiedReal l1 = log(one - y);
  const CertifiedReal z2 = zeta_int(2, ctx);
  const CertifiedReal z3 = zeta_int(3, ctx);
  const CertifiedReal z4 = zeta_int(4, ctx);

  const Composition c31{3, 1};
  const Composition c21{2, 1};
  const CertifiedReal li31_y = mpl_single(c31, y, ctx);
  const CertifiedReal li4_y = li(4, y, ctx);
  const CertifiedReal li21_y = mpl_single(c21, y, ctx);
  const CertifiedReal li3_y = li(3, y, ctx);
  const CertifiedReal li2_y = li(2, y, ctx);
  const CertifiedReal ly2 = ly * ly;
  const CertifiedReal ly3 = ly2 * ly;
  const CertifiedReal ly4 = ly2 * ly2;

  Combination c(prec);
  if (kind == DkKind::kDiff) {
    c.add(4, li31_y).add(-4, li4_y).add(1, li2_y * li2_y).add(-4, li21_y * ly);
    c.add(2, li3_y * ly).add(mpq_class(-1, 2), li2_y * ly2).add(4, li3_y * l1);
    c.add(-2, li2_y * ly * l1).add(mpq_class(-1, 6), ly3 * l1).add(mpq_class(1, 48), ly4);
    c.add(-2, z2 * li2_y).add(mpq_class(1, 2), z2 * ly2).add(-2, z2 * ly * l1);
    c.add(-4, z3 * l1).add(2, z3 * ly).add(mpq_class(11, 2), z4);
    return c.total;
  }

  const CertifiedReal h = h_m1001(y, ctx);
  const CertifiedReal li31_y2 = mpl_single(c31, y2, ctx);
  const CertifiedReal li31_my = mpl_single(c31, my, ctx);
  const CertifiedReal li4_my = li(4, my, ctx);
  const CertifiedReal li21_my = mpl_single(c21, my, ctx);
  const CertifiedReal li21_y2 = mpl_single(c21, y2, ctx);
  const CertifiedReal li3_my = li(3, my, ctx);
  const CertifiedReal li2_my = li(2, my, ctx);

  if (kind == DkKind::kH) {
    c.add(4, h).add(1, li31_y2).add(-4, li31_y).add(-4, li31_my).add(-6, li4_my);
    c.add(-2, li4_y).add(4, li21_my * ly).add(4, li21_y * ly).add(-2, li21_y2 * ly);
    c.add(4, li3_my * l1).add(2, li3_my * ly).add(2, li3_y * ly).add(-1, li2_y * ly2);
    c.add(-4, li2_my * ly * l1).add(mpq_class(-1, 3), ly3 * l1).add(mpq_class(1, 24), ly4);
    c.add(2, z2 * li2_y).add(mpq_class(-1, 2), z2 * ly2).add(2, z2 * ly * l1);
    c.add(6, z3 * l1).add(-3, z3 * ly).add(-4, z4);
    return c.total;
  }

  c.add(4, h).add(1, li31_y2).add(-8, li31_y).add(-4, li31_my).add(-6, li4_my);
  c.add(2, li4_y).add(-1, li2_y * li2_y).add(4, li21_my * ly).add(8, li21_y * ly);
  c.add(-2, li21_y2 * ly).add(mpq_class(1, 48), ly4).add(4, li3_my * l1).add(-4, li3_y * l1);
  c.add(2, li3_my * ly).add(-4, li2_my * ly * l1).add(2, li2_y * ly * l1);
  c.add(mpq_class(-1, 2), li2_y * ly2).add(mpq_class(-1, 6), ly3 * l1).add(4, z2 * ly * l1);
  c.add(-1, z2 * ly2).add(10, z3 * l1).add(-5, z3 * ly).add(4, z2 * li2_y);
  c.add(mpq_class(-19, 2), z4);
  return c.total;
}

}  // namespace polyapery
