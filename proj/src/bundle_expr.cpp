#include "hirz/bundle_expr.hpp"

namespace hirz::replay {

DivisorClass curve_class(Curve c) { return c == Curve::Section ? DivisorClass::section() : DivisorClass::fiber(); }

const char* curve_name(Curve c) { return c == Curve::Section ? "C" : "fiber"; }

DegreeForm intersect(const SurfaceContext& ctx, const ParamClass& x, DivisorClass curve) {
  // (aC + bF).(cC + dF) = -e*a*c + a*d + b*c
  return (checked_mul(-ctx.e(), curve.a) + curve.b) * x.a + curve.a * x.b;
}

std::string pretty_class(const ParamClass& c) {
  auto coeff = [](const DegreeForm& f, const char* gen) -> std::string {
    if (f == DegreeForm::constant(0)) return "";
    if (f == DegreeForm::constant(1)) return gen;
    if (f == DegreeForm::constant(-1)) return std::string("-") + gen;
    if (f.is_constant() || (f.c0 == 0 && (f.cb == 0 || f.cl == 0))) return p1::pretty_form(f) + gen;
    return "(" + p1::pretty_form(f) + ")" + gen;
  };
  std::string a = coeff(c.a, "C"), b = coeff(c.b, "F");
  if (a.empty() && b.empty()) return "0";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + (b.front() == '-' ? "" : "+") + b;
}

namespace {

// rank of S^m of a rank-r bundle
Int sym_rank(Int r, Int m) {
  if (m == 0) return 1;
  if (r == 0) return 0;
  return binomial(checked_add(r, m) - 1, m);
}

}  // namespace

struct RankExpr::Node {
  Int value = 0;
  std::shared_ptr<const Node> inner;  // null for a constant
  DegreeForm exponent;
};

RankExpr RankExpr::constant(Int r) {
  RankExpr out;
  out.node_ = std::make_shared<const Node>(Node{r, nullptr, {}});
  return out;
}

RankExpr RankExpr::sym(RankExpr inner, DegreeForm exponent) {
  if (!inner.node_->inner && exponent.is_constant()) return constant(sym_rank(inner.node_->value, exponent.c0));
  RankExpr out;
  out.node_ = std::make_shared<const Node>(Node{0, std::move(inner.node_), exponent});
  return out;
}

Int RankExpr::eval(Int beta, Int l) const {
  if (!node_->inner) return node_->value;
  RankExpr inner;
  inner.node_ = node_->inner;
  const Int r = inner.eval(beta, l);
  return sym_rank(r, node_->exponent.eval(beta, l));
}

std::string RankExpr::str() const {
  if (!node_->inner) return std::to_string(node_->value);
  RankExpr inner;
  inner.node_ = node_->inner;
  const std::string m = p1::pretty_form(node_->exponent);
  if (!node_->inner->inner) {
    const Int r = node_->inner->value;
    return "binom(" + p1::pretty_form(node_->exponent + DegreeForm::constant(r - 1)) + ", " + m + ")";
  }
  return "binom(" + inner.str() + " + " + m + " - 1, " + m + ")";
}

struct ExtLeaf {
  ExtensionDatum ext;
};
struct SymNode {
  std::shared_ptr<const BundleExpr::Node> child;
  DegreeForm exponent;
};
struct TwistNode {
  std::shared_ptr<const BundleExpr::Node> child;
  ParamClass by;
};
struct FrobNode {
  std::shared_ptr<const BundleExpr::Node> child;
  Int q;
};

struct BundleExpr::Node {
  std::variant<ExtLeaf, SymNode, TwistNode, FrobNode> v;
};

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

using NodePtr = std::shared_ptr<const BundleExpr::Node>;

SplittingType restrict_leaf(const SurfaceContext& ctx, const ExtensionDatum& ext, Curve curve) {
  const DivisorClass cc = curve_class(curve);
  return p1::classify_extension(intersect(ctx, ext.sub, cc), intersect(ctx, ext.quot, cc), ext.nonsplit);
}

SplittingType restrict_numeric(const SurfaceContext& ctx, const NodePtr& n, Curve curve, Int beta, Int l) {
  return std::visit(
      overloaded{
          [&](const ExtLeaf& x) { return restrict_leaf(ctx, x.ext, curve); },
          [&](const SymNode& x) {
            const Int m = x.exponent.eval(beta, l);
            return p1::sym_power(restrict_numeric(ctx, x.child, curve, beta, l), m);
          },
          [&](const TwistNode& x) {
            const Int d = hirz::intersect(ctx, x.by.at(beta, l), curve_class(curve));
            return p1::twist(restrict_numeric(ctx, x.child, curve, beta, l), d);
          },
          [&](const FrobNode& x) { return p1::frobenius_pullback(restrict_numeric(ctx, x.child, curve, beta, l), x.q); },
      },
      n->v);
}

ParametricType restrict_param(const SurfaceContext& ctx, const NodePtr& n, Curve curve) {
  return std::visit(
      overloaded{
          [&](const ExtLeaf& x) -> ParametricType {
            SplittingType s = restrict_leaf(ctx, x.ext, curve);
            if (!s.is_balanced() || s.empty())
              throw SymbolicUnsupported("symbolic mode unsupported; use numeric sweep (restriction of E to " +
                                        std::string(curve_name(curve)) + " is " + p1::format_split(s) + ", not balanced)");
            return {DegreeForm::constant(s.min_degree()), RankExpr::constant(s.rank())};
          },
          [&](const SymNode& x) -> ParametricType {
            ParametricType inner = restrict_param(ctx, x.child, curve);
            if (x.exponent.cl != 0 || (x.exponent.c0 < 0) || (x.exponent.cb < 0))
              throw SymbolicUnsupported("symbolic mode unsupported; use numeric sweep (Sym exponent " +
                                        p1::pretty_form(x.exponent) + " may be negative or depends on l)");
            DegreeForm degree;
            if (inner.degree.is_constant())
              degree = inner.degree.c0 * x.exponent;
            else if (x.exponent.is_constant())
              degree = x.exponent.c0 * inner.degree;
            else
              throw SymbolicUnsupported("symbolic mode unsupported; use numeric sweep (degree would not be affine)");
            return {degree, RankExpr::sym(inner.rank, x.exponent)};
          },
          [&](const TwistNode& x) -> ParametricType {
            ParametricType inner = restrict_param(ctx, x.child, curve);
            return {inner.degree + intersect(ctx, x.by, curve_class(curve)), inner.rank};
          },
          [&](const FrobNode& x) -> ParametricType {
            ParametricType inner = restrict_param(ctx, x.child, curve);
            return {x.q * inner.degree, inner.rank};
          },
      },
      n->v);
}

std::string describe(const NodePtr& n) {
  return std::visit(overloaded{
                        [](const ExtLeaf&) -> std::string { return "E"; },
                        [](const SymNode& x) -> std::string {
                          const std::string m = p1::pretty_form(x.exponent);
                          return "S^" + (m.size() == 1 ? m : "{" + m + "}") + "(" + describe(x.child) + ")";
                        },
                        [](const TwistNode& x) -> std::string { return describe(x.child) + "(" + pretty_class(x.by) + ")"; },
                        [](const FrobNode& x) -> std::string { return "Frob_" + std::to_string(x.q) + "^*(" + describe(x.child) + ")"; },
                    },
                    n->v);
}

}  // namespace

BundleExpr BundleExpr::extension(ExtensionDatum ext) {
  return BundleExpr(std::make_shared<const Node>(Node{ExtLeaf{ext}}));
}

BundleExpr BundleExpr::sym(DegreeForm exponent) const {
  return BundleExpr(std::make_shared<const Node>(Node{SymNode{node_, exponent}}));
}

BundleExpr BundleExpr::twist(ParamClass by) const {
  return BundleExpr(std::make_shared<const Node>(Node{TwistNode{node_, by}}));
}

BundleExpr BundleExpr::frob(Int q) const {
  if (q < 2 || !is_prime_power(q)) throw std::invalid_argument("Frobenius power q must be a prime power >= 2, got " + std::to_string(q));
  return BundleExpr(std::make_shared<const Node>(Node{FrobNode{node_, q}}));
}

std::string BundleExpr::str() const { return describe(node_); }

SplittingType BundleExpr::restrict_to(const SurfaceContext& ctx, Curve curve, Int beta, Int l) const {
  return restrict_numeric(ctx, node_, curve, beta, l);
}

ParametricType BundleExpr::restrict_symbolic(const SurfaceContext& ctx, Curve curve) const {
  return restrict_param(ctx, node_, curve);
}

}  // namespace hirz::replay
