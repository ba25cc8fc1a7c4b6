#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "polyapery/apery.hpp"
#include "polyapery/mpl.hpp"

namespace polyapery {

/// Raised by eval_expr; the message carries the path to the failing node.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class NamedConstant { kPi, kGf, kLnGf, kZeta3 };

enum class Primitive {
  kLi,           // ints {k}, args {x}
  kMplSingle,    // ints = composition, args {x}
  kMpl,          // ints = composition, args x1..xr
  kMzv,          // ints = composition
  kNielsen,      // ints {a, b}, args {z}
  kNielsenQuad,  // same, by quadrature
  kEvalWord,     // args = letters
  kHm1001,       // args {y}
  kHm1001Quad,   // args {y}, by quadrature
  kAperySum,     // ints {s}, args {u}, weight
  kDkRhs,        // args {u}, dk kind
  kZetaInt,      // ints {s}
  kZetaEven,     // ints {k}
  kYOfU,         // args {u}
};

std::string to_string(Primitive p);

/// An integer argument: a fixed value, or scale * (integer parameter).
struct IntArg {
  long value = 0;
  std::string param;
  long scale = 1;
};

struct ExprNode;

/// Immutable expression tree over rationals, named constants, parameters and
/// evaluator primitives.
class ConstExpr {
 public:
  ConstExpr() = default;
  ConstExpr(long v);                // NOLINT: literals read naturally in formulas
  ConstExpr(const mpq_class& q);    // NOLINT
  explicit ConstExpr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

  const ExprNode* get() const { return node_.get(); }
  const ExprNode& operator*() const { return *node_; }
  const ExprNode* operator->() const { return node_.get(); }
  explicit operator bool() const { return static_cast<bool>(node_); }

  friend ConstExpr operator+(const ConstExpr& a, const ConstExpr& b);
  friend ConstExpr operator-(const ConstExpr& a, const ConstExpr& b);
  friend ConstExpr operator*(const ConstExpr& a, const ConstExpr& b);
  friend ConstExpr operator/(const ConstExpr& a, const ConstExpr& b);
  friend ConstExpr operator-(const ConstExpr& a);

 private:
  std::shared_ptr<const ExprNode> node_;
};

struct ExprNode {
  enum class Kind { kLiteral, kConstant, kParam, kCall, kAdd, kSub, kMul, kDiv, kNeg, kPow, kLog };
  Kind kind = Kind::kLiteral;
  mpq_class literal;
  NamedConstant constant = NamedConstant::kPi;
  std::string param;
  Primitive primitive = Primitive::kLi;
  std::vector<IntArg> ints;
  std::vector<ConstExpr> args;  // operands or primitive arguments
  HarmonicWeight weight;
  DkKind dk = DkKind::kH;
  long exponent = 1;
};

/// Values bound to parameter names for one evaluation.
struct ParamPoint {
  std::string label;  // "u=-1/2"
  std::map<std::string, ConstExpr> reals;
  std::map<std::string, long> ints;
};

namespace expr {

ConstExpr lit(const mpq_class& q);
ConstExpr lit(long num, long den);
ConstExpr constant(NamedConstant c);
ConstExpr pi();
ConstExpr gf();
ConstExpr ln_gf();
ConstExpr zeta3();
ConstExpr param(const std::string& name);
ConstExpr log(const ConstExpr& x);
ConstExpr pow(const ConstExpr& x, long n);

ConstExpr li(int k, const ConstExpr& x);
ConstExpr mpl_single(const Composition& idx, const ConstExpr& x);
ConstExpr mpl(const Composition& idx, std::vector<ConstExpr> args);
ConstExpr mzv(const Composition& idx);
ConstExpr nielsen(int a, int b, const ConstExpr& z);
ConstExpr nielsen_quad(int a, int b, const ConstExpr& z);
ConstExpr word(std::vector<ConstExpr> letters);
ConstExpr h_m1001(const ConstExpr& y);
ConstExpr h_m1001_quad(const ConstExpr& y);
ConstExpr apery(const ConstExpr& u, int s, const HarmonicWeight& weight);
ConstExpr apery(const ConstExpr& u, int s, const std::string& weight);
ConstExpr dk_rhs(DkKind kind, const ConstExpr& u);
ConstExpr zeta(IntArg s);
ConstExpr zeta_even(IntArg k);
ConstExpr y_of_u(const ConstExpr& u);

}  // namespace expr

/// Bottom-up evaluation with error propagation. Throws EvalError.
CertifiedReal eval_expr(const ConstExpr& e, const PrecisionContext& ctx, const ParamPoint& params = {});

std::size_t depth(const ConstExpr& e);
std::set<Primitive> collect_primitives(const ConstExpr& e);
std::string to_string(const ConstExpr& e);

/// Number of rational literal nodes, in a fixed traversal order.
std::size_t count_literals(const ConstExpr& e);
/// Copy of e with the index-th literal q replaced by q + delta.
ConstExpr perturb_literal(const ConstExpr& e, std::size_t index, const mpq_class& delta);

/// Parses a value token: integers, fractions ("-1/2"), decimals ("0.999",
/// "1e-4"), the constants gf, pi, ln_gf, zeta3, an optional integer power
/// ("gf^-2") and sums or differences of these ("1-1e-4").
/// Throws std::invalid_argument.
ConstExpr parse_value(const std::string& text);

}  // namespace polyapery
