#include "polyapery/expr.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "polyapery/iterint.hpp"
#include "polyapery/quadrature.hpp"

namespace polyapery {

std::string to_string(Primitive p) {
  switch (p) {
    case Primitive::kLi: return "li";
    case Primitive::kMplSingle: return "mpl_single";
    case Primitive::kMpl: return "mpl";
    case Primitive::kMzv: return "mzv";
    case Primitive::kNielsen: return "nielsen";
    case Primitive::kNielsenQuad: return "nielsen_quad";
    case Primitive::kEvalWord: return "eval_word";
    case Primitive::kHm1001: return "h_m1001";
    case Primitive::kHm1001Quad: return "h_m1001_quad";
    case Primitive::kAperySum: return "apery_sum";
    case Primitive::kDkRhs: return "dk_rhs";
    case Primitive::kZetaInt: return "zeta_int";
    case Primitive::kZetaEven: return "zeta_even";
    case Primitive::kYOfU: return "y_of_u";
  }
  return "?";
}

namespace {

using Kind = ExprNode::Kind;

ConstExpr make(ExprNode node) { return ConstExpr(std::make_shared<const ExprNode>(std::move(node))); }

ConstExpr binary(Kind kind, const ConstExpr& a, const ConstExpr& b) {
  if (!a || !b) throw EvalError("empty operand");
  ExprNode n;
  n.kind = kind;
  n.args = {a, b};
  return make(std::move(n));
}

ConstExpr call(Primitive p, std::vector<IntArg> ints, std::vector<ConstExpr> args) {
  ExprNode n;
  n.kind = Kind::kCall;
  n.primitive = p;
  n.ints = std::move(ints);
  n.args = std::move(args);
  return make(std::move(n));
}

std::vector<IntArg> fixed(const std::vector<int>& v) {
  std::vector<IntArg> out;
  for (int x : v) out.push_back(IntArg{x, {}, 1});
  return out;
}

}  // namespace

ConstExpr::ConstExpr(long v) : ConstExpr(expr::lit(mpq_class(v))) {}
ConstExpr::ConstExpr(const mpq_class& q) : ConstExpr(expr::lit(q)) {}

ConstExpr operator+(const ConstExpr& a, const ConstExpr& b) { return binary(Kind::kAdd, a, b); }
ConstExpr operator-(const ConstExpr& a, const ConstExpr& b) { return binary(Kind::kSub, a, b); }
ConstExpr operator*(const ConstExpr& a, const ConstExpr& b) { return binary(Kind::kMul, a, b); }
ConstExpr operator/(const ConstExpr& a, const ConstExpr& b) { return binary(Kind::kDiv, a, b); }
ConstExpr operator-(const ConstExpr& a) {
  ExprNode n;
  n.kind = Kind::kNeg;
  n.args = {a};
  return make(std::move(n));
}

namespace expr {

ConstExpr lit(const mpq_class& q) {
  ExprNode n;
  n.kind = Kind::kLiteral;
  n.literal = q;
  n.literal.canonicalize();
  return make(std::move(n));
}

ConstExpr lit(long num, long den) { return lit(mpq_class(num, den)); }

ConstExpr constant(NamedConstant c) {
  ExprNode n;
  n.kind = Kind::kConstant;
  n.constant = c;
  return make(std::move(n));
}

ConstExpr pi() { return constant(NamedConstant::kPi); }
ConstExpr gf() { return constant(NamedConstant::kGf); }
ConstExpr ln_gf() { return constant(NamedConstant::kLnGf); }
ConstExpr zeta3() { return constant(NamedConstant::kZeta3); }

ConstExpr param(const std::string& name) {
  ExprNode n;
  n.kind = Kind::kParam;
  n.param = name;
  return make(std::move(n));
}

ConstExpr log(const ConstExpr& x) {
  ExprNode n;
  n.kind = Kind::kLog;
  n.args = {x};
  return make(std::move(n));
}

ConstExpr pow(const ConstExpr& x, long e) {
  ExprNode n;
  n.kind = Kind::kPow;
  n.args = {x};
  n.exponent = e;
  return make(std::move(n));
}

ConstExpr li(int k, const ConstExpr& x) { return call(Primitive::kLi, fixed({k}), {x}); }
ConstExpr mpl_single(const Composition& idx, const ConstExpr& x) {
  return call(Primitive::kMplSingle, fixed(idx.parts()), {x});
}
ConstExpr mpl(const Composition& idx, std::vector<ConstExpr> args) {
  return call(Primitive::kMpl, fixed(idx.parts()), std::move(args));
}
ConstExpr mzv(const Composition& idx) { return call(Primitive::kMzv, fixed(idx.parts()), {}); }
ConstExpr nielsen(int a, int b, const ConstExpr& z) { return call(Primitive::kNielsen, fixed({a, b}), {z}); }
ConstExpr nielsen_quad(int a, int b, const ConstExpr& z) {
  return call(Primitive::kNielsenQuad, fixed({a, b}), {z});
}
ConstExpr word(std::vector<ConstExpr> letters) { return call(Primitive::kEvalWord, {}, std::move(letters)); }
ConstExpr h_m1001(const ConstExpr& y) { return call(Primitive::kHm1001, {}, {y}); }
ConstExpr h_m1001_quad(const ConstExpr& y) { return call(Primitive::kHm1001Quad, {}, {y}); }

ConstExpr apery(const ConstExpr& u, int s, const HarmonicWeight& weight) {
  ExprNode n;
  n.kind = Kind::kCall;
  n.primitive = Primitive::kAperySum;
  n.ints = fixed({s});
  n.args = {u};
  n.weight = weight;
  return make(std::move(n));
}

ConstExpr apery(const ConstExpr& u, int s, const std::string& weight) {
  return apery(u, s, HarmonicWeight::parse(weight));
}

ConstExpr dk_rhs(DkKind kind, const ConstExpr& u) {
  ExprNode n;
  n.kind = Kind::kCall;
  n.primitive = Primitive::kDkRhs;
  n.args = {u};
  n.dk = kind;
  return make(std::move(n));
}

ConstExpr zeta(IntArg s) { return call(Primitive::kZetaInt, {std::move(s)}, {}); }
ConstExpr zeta_even(IntArg k) { return call(Primitive::kZetaEven, {std::move(k)}, {}); }
ConstExpr y_of_u(const ConstExpr& u) { return call(Primitive::kYOfU, {}, {u}); }

}  // namespace expr

// ---------------------------------------------------------------------------
// Evaluation

namespace {

class Evaluator {
 public:
  Evaluator(const PrecisionContext& ctx, const ParamPoint& params) : ctx_(ctx), params_(params) {}

  CertifiedReal eval(const ConstExpr& e, const std::string& path) {
    if (!e) throw EvalError("ill-formed expression: empty node at " + path);
    const ExprNode& n = *e;
    const mpfr_prec_t prec = ctx_.working_bits();
    auto child = [&](std::size_t i) {
      if (i >= n.args.size()) throw EvalError("ill-formed expression: missing operand at " + path);
      return eval(n.args[i], path + "/" + std::to_string(i));
    };
    try {
      switch (n.kind) {
        case Kind::kLiteral: return CertifiedReal::from_rational(n.literal, prec);
        case Kind::kConstant: return constant(n.constant);
        case Kind::kParam: {
          auto it = params_.reals.find(n.param);
          if (it == params_.reals.end()) throw EvalError("unbound parameter '" + n.param + "' at " + path);
          return eval(it->second, path + "{" + n.param + "}");
        }
        case Kind::kAdd: return child(0) + child(1);
        case Kind::kSub: return child(0) - child(1);
        case Kind::kMul: return child(0) * child(1);
        case Kind::kDiv: return child(0) / child(1);
        case Kind::kNeg: return -child(0);
        case Kind::kPow: return pow(child(0), n.exponent);
        case Kind::kLog: return log(child(0));
        case Kind::kCall: return primitive(n, path);
      }
    } catch (const EvalError&) {
      throw;
    } catch (const std::exception& ex) {
      throw EvalError(std::string(ex.what()) + " (at " + path + ")");
    }
    throw EvalError("ill-formed expression: unknown node at " + path);
  }

 private:
  CertifiedReal constant(NamedConstant c) {
    switch (c) {
      case NamedConstant::kPi: return pi(ctx_);
      case NamedConstant::kGf: return golden_ratio(ctx_).phi;
      case NamedConstant::kLnGf: return golden_ratio(ctx_).log_phi;
      case NamedConstant::kZeta3: return zeta_int(3, ctx_);
    }
    throw EvalError("unknown constant");
  }

  long resolve(const IntArg& a) const {
    if (a.param.empty()) return a.value;
    auto it = params_.ints.find(a.param);
    if (it == params_.ints.end()) throw EvalError("unbound integer parameter '" + a.param + "'");
    return a.scale * it->second;
  }

  CertifiedReal primitive(const ExprNode& n, const std::string& parent) {
    const std::string path = parent + ":" + to_string(n.primitive);
    std::vector<CertifiedReal> args;
    for (std::size_t i = 0; i < n.args.size(); ++i) args.push_back(eval(n.args[i], path + "/" + std::to_string(i)));
    std::vector<int> ints;
    for (const auto& a : n.ints) ints.push_back(static_cast<int>(resolve(a)));
    auto need = [&](std::size_t nargs, std::size_t nints) {
      if (args.size() != nargs || ints.size() != nints) {
        throw EvalError("ill-formed expression: wrong arity for " + to_string(n.primitive) + " at " + path);
      }
    };
    try {
      switch (n.primitive) {
        case Primitive::kLi: need(1, 1); return li(ints[0], args[0], ctx_);
        case Primitive::kMplSingle:
          if (args.size() != 1) need(1, ints.size());
          return mpl_single(Composition(ints), args[0], ctx_);
        case Primitive::kMpl:
          if (args.size() != ints.size()) need(ints.size(), ints.size());
          return mpl(Composition(ints), args, ctx_);
        case Primitive::kMzv:
          if (!args.empty()) need(0, ints.size());
          return mzv(Composition(ints), ctx_);
        case Primitive::kNielsen: need(1, 2); return nielsen(ints[0], ints[1], args[0], ctx_);
        case Primitive::kNielsenQuad: need(1, 2); return nielsen_integral(ints[0], ints[1], args[0], ctx_);
        case Primitive::kEvalWord: return eval_word(IteratedWord(args), ctx_);
        case Primitive::kHm1001: need(1, 0); return h_m1001(args[0], ctx_);
        case Primitive::kHm1001Quad: need(1, 0); return h_m1001_integral(args[0], ctx_);
        case Primitive::kAperySum: need(1, 1); return apery_sum(AperySumSpec{args[0], ints[0], n.weight}, ctx_);
        case Primitive::kDkRhs: need(1, 0); return dk_rhs(n.dk, args[0], ctx_);
        case Primitive::kZetaInt: need(0, 1); return zeta_int(ints[0], ctx_);
        case Primitive::kZetaEven: need(0, 1); return zeta_even(ints[0], ctx_);
        case Primitive::kYOfU: need(1, 0); return y_of_u(args[0], ctx_);
      }
    } catch (const EvalError&) {
      throw;
    } catch (const std::exception& ex) {
      throw EvalError(std::string(ex.what()) + " (at " + path + ")");
    }
    throw EvalError("unknown primitive at " + path);
  }

  const PrecisionContext& ctx_;
  const ParamPoint& params_;
};

}  // namespace

CertifiedReal eval_expr(const ConstExpr& e, const PrecisionContext& ctx, const ParamPoint& params) {
  return Evaluator(ctx, params).eval(e, "root");
}

std::size_t depth(const ConstExpr& e) {
  if (!e) return 0;
  std::size_t d = 0;
  for (const auto& a : e->args) d = std::max(d, depth(a));
  return d + 1;
}

std::set<Primitive> collect_primitives(const ConstExpr& e) {
  std::set<Primitive> out;
  std::function<void(const ConstExpr&)> walk = [&](const ConstExpr& x) {
    if (!x) return;
    if (x->kind == Kind::kCall) out.insert(x->primitive);
    for (const auto& a : x->args) walk(a);
  };
  walk(e);
  return out;
}

std::string to_string(const ConstExpr& e) {
  if (!e) return "<empty>";
  const ExprNode& n = *e;
  auto join_args = [&] {
    std::string s;
    for (std::size_t i = 0; i < n.args.size(); ++i) s += (i ? ", " : "") + to_string(n.args[i]);
    return s;
  };
  switch (n.kind) {
    case Kind::kLiteral: return n.literal.get_str();
    case Kind::kConstant:
      switch (n.constant) {
        case NamedConstant::kPi: return "pi";
        case NamedConstant::kGf: return "gf";
        case NamedConstant::kLnGf: return "ln_gf";
        case NamedConstant::kZeta3: return "zeta3";
      }
      return "?";
    case Kind::kParam: return n.param;
    case Kind::kAdd: return "(" + to_string(n.args[0]) + " + " + to_string(n.args[1]) + ")";
    case Kind::kSub: return "(" + to_string(n.args[0]) + " - " + to_string(n.args[1]) + ")";
    case Kind::kMul: return to_string(n.args[0]) + "*" + to_string(n.args[1]);
    case Kind::kDiv: return to_string(n.args[0]) + "/" + to_string(n.args[1]);
    case Kind::kNeg: return "-" + to_string(n.args[0]);
    case Kind::kPow: return to_string(n.args[0]) + "^" + std::to_string(n.exponent);
    case Kind::kLog: return "log(" + to_string(n.args[0]) + ")";
    case Kind::kCall: {
      std::string ints;
      for (std::size_t i = 0; i < n.ints.size(); ++i) {
        const auto& a = n.ints[i];
        ints += (i ? "," : "");
        if (a.param.empty()) {
          ints += std::to_string(a.value);
        } else {
          ints += (a.scale != 1 ? std::to_string(a.scale) : "") + a.param;
        }
      }
      std::string s = to_string(n.primitive) + "(";
      if (!ints.empty()) s += "[" + ints + "]";
      if (n.primitive == Primitive::kAperySum) s += ";" + n.weight.to_string();
      if (n.primitive == Primitive::kDkRhs) s += polyapery::to_string(n.dk);
      if (!n.args.empty()) s += (ints.empty() && n.primitive != Primitive::kDkRhs ? "" : "; ") + join_args();
      return s + ")";
    }
  }
  return "?";
}

std::size_t count_literals(const ConstExpr& e) {
  if (!e) return 0;
  std::size_t c = e->kind == Kind::kLiteral ? 1 : 0;
  for (const auto& a : e->args) c += count_literals(a);
  return c;
}

namespace {

ConstExpr perturb(const ConstExpr& e, std::size_t& index, const mpq_class& delta) {
  if (!e) return e;
  if (e->kind == Kind::kLiteral) {
    if (index-- == 0) return expr::lit(e->literal + delta);
    return e;
  }
  if (e->args.empty()) return e;
  ExprNode copy = *e;
  for (auto& a : copy.args) a = perturb(a, index, delta);
  return make(std::move(copy));
}

}  // namespace

ConstExpr perturb_literal(const ConstExpr& e, std::size_t index, const mpq_class& delta) {
  if (index >= count_literals(e)) throw std::out_of_range("perturb_literal: index out of range");
  return perturb(e, index, delta);
}

// ---------------------------------------------------------------------------
// Value tokens

namespace {

class ValueParser {
 public:
  explicit ValueParser(const std::string& text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }
  }

  ConstExpr parse() {
    if (s_.empty()) fail("empty value");
    ConstExpr v = sum();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("value '" + s_ + "': " + what + " at position " + std::to_string(pos_));
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  static bool literal(const ConstExpr& e) { return e->kind == Kind::kLiteral; }

  ConstExpr sum() {
    ConstExpr v;
    if (peek() == '-') {
      ++pos_;
      ConstExpr t = product();
      v = literal(t) ? expr::lit(-t->literal) : -t;
    } else {
      v = product();
    }
    while (peek() == '+' || peek() == '-') {
      const char op = s_[pos_++];
      ConstExpr t = product();
      if (literal(v) && literal(t)) {
        v = expr::lit(op == '+' ? mpq_class(v->literal + t->literal) : mpq_class(v->literal - t->literal));
      } else {
        v = op == '+' ? v + t : v - t;
      }
    }
    return v;
  }

  ConstExpr product() {
    ConstExpr v = power();
    while (peek() == '*' || peek() == '/') {
      const char op = s_[pos_++];
      ConstExpr t = power();
      if (literal(v) && literal(t)) {
        if (op == '/' && t->literal == 0) fail("division by zero");
        v = expr::lit(op == '*' ? mpq_class(v->literal * t->literal) : mpq_class(v->literal / t->literal));
      } else {
        v = op == '*' ? v * t : v / t;
      }
    }
    return v;
  }

  ConstExpr power() {
    ConstExpr v = atom();
    if (peek() == '^') {
      ++pos_;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      const long e = std::stol(digits()) * (neg ? -1 : 1);
      if (literal(v)) {
        mpq_class base = v->literal;
        if (e < 0) {
          if (base == 0) fail("zero to a negative power");
          base = 1 / base;
        }
        mpq_class r = 1;
        for (long i = 0; i < std::abs(e); ++i) r *= base;
        return expr::lit(r);
      }
      return expr::pow(v, e);
    }
    return v;
  }

  ConstExpr atom() {
    if (peek() == '(') {
      ++pos_;
      ConstExpr v = sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') return number();
    const std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    const std::string name = s_.substr(start, pos_ - start);
    if (name == "gf") return expr::gf();
    if (name == "pi") return expr::pi();
    if (name == "ln_gf") return expr::ln_gf();
    if (name == "zeta3") return expr::zeta3();
    pos_ = start;
    fail(name.empty() ? "expected a value" : "unknown constant '" + name + "'");
  }

  ConstExpr number() {
    std::string int_part = peek() == '.' ? "0" : digits();
    std::string frac_part;
    if (peek() == '.') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) frac_part = digits();
    }
    long exp10 = -static_cast<long>(frac_part.size());
    if (peek() == 'e' || peek() == 'E') {
      ++pos_;
      bool neg = false;
      if (peek() == '+' || peek() == '-') neg = s_[pos_++] == '-';
      const long e = std::stol(digits());
      exp10 += neg ? -e : e;
    }
    mpz_class mant(int_part + frac_part, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exp10)));
    mpq_class q = exp10 >= 0 ? mpq_class(mant * scale) : mpq_class(mant, scale);
    q.canonicalize();
    return expr::lit(q);
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

ConstExpr parse_value(const std::string& text) { return ValueParser(text).parse(); }

}  // namespace polyapery
