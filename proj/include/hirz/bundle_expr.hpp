#pragma once

/**
 * @file bundle_expr.hpp
 * @brief Symbolic bundles built from an extension E on F_e.
 *
 * A BundleExpr is a tree whose leaf is the middle term E of an extension
 * 0 -> O(sub) -> E -> O(quot) -> 0 and whose nodes are symmetric powers,
 * twists and Frobenius pullbacks. Exponents and twist coefficients are affine
 * in the parameters (beta, l). Expressions are evaluated by restriction to
 * the section C or to a fiber, where everything splits.
 */

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

#include "hirz/divisor.hpp"
#include "hirz/splitting.hpp"

namespace hirz::replay {

using p1::DegreeForm;
using p1::SplittingType;

struct ExtensionDatum {
  DivisorClass sub;
  DivisorClass quot;
  bool nonsplit = false;
  Int ext_dim = 0;  ///< dim Ext^1(O(quot), O(sub)) = h^1(sub - quot)
};

enum class Curve { Section, Fiber };

DivisorClass curve_class(Curve c);
const char* curve_name(Curve c);

/// Divisor class aC + bF with coefficients affine in (beta, l).
struct ParamClass {
  DegreeForm a;
  DegreeForm b;

  static ParamClass fixed(DivisorClass d) { return {DegreeForm::constant(d.a), DegreeForm::constant(d.b)}; }
  DivisorClass at(Int beta, Int l) const { return {a.eval(beta, l), b.eval(beta, l)}; }
  friend bool operator==(const ParamClass&, const ParamClass&) = default;
};

/// Parametric intersection number with a fixed curve class.
DegreeForm intersect(const SurfaceContext& ctx, const ParamClass& x, DivisorClass curve);
std::string pretty_class(const ParamClass& c);

/// Rank of a parametric restricted bundle: a constant, or binomial(r + m - 1, m)
/// applied to an inner rank for S^m.
class RankExpr {
 public:
  static RankExpr constant(Int r);
  static RankExpr sym(RankExpr inner, DegreeForm exponent);

  Int eval(Int beta, Int l) const;
  std::string str() const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

/// All summands share one degree form; this is the symbolic restriction.
struct ParametricType {
  DegreeForm degree;
  RankExpr rank;
};

class SymbolicUnsupported : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BundleExpr {
 public:
  static BundleExpr extension(ExtensionDatum ext);

  BundleExpr sym(DegreeForm exponent) const;
  BundleExpr sym(Int exponent) const { return sym(DegreeForm::constant(exponent)); }
  BundleExpr twist(ParamClass by) const;
  BundleExpr twist(DivisorClass by) const { return twist(ParamClass::fixed(by)); }
  BundleExpr frob(Int q) const;

  std::string str() const;

  /// Numeric restriction at concrete parameters.
  SplittingType restrict_to(const SurfaceContext& ctx, Curve curve, Int beta, Int l) const;

  /// Symbolic restriction, valid for every (beta, l). Requires every Sym and
  /// Frob to act on a balanced type with an affine result; throws
  /// SymbolicUnsupported otherwise.
  ParametricType restrict_symbolic(const SurfaceContext& ctx, Curve curve) const;

  struct Node;

 private:
  explicit BundleExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace hirz::replay
