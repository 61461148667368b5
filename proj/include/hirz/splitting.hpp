#pragma once

/**
 * @file splitting.hpp
 * @brief Vector bundles on P^1 in Grothendieck normal form.
 *
 * Every bundle on P^1 is a direct sum of line bundles O(d). A SplittingType
 * stores that multiset as sorted (degree, multiplicity) runs, so that
 * symmetric powers of large rank stay cheap: S^200 of O(-4)^5 is one run of
 * length binomial(204, 4).
 */

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hirz/checked.hpp"

namespace hirz::p1 {

class SplittingType {
 public:
  struct Run {
    Int degree;
    Int multiplicity;
    friend bool operator==(const Run&, const Run&) = default;
  };

  SplittingType() = default;  ///< the zero bundle
  SplittingType(std::initializer_list<Int> degrees);
  explicit SplittingType(std::span<const Int> degrees);

  /// Build from arbitrary runs; merges equal degrees and drops empty runs.
  static SplittingType from_runs(std::vector<Run> runs);
  /// O(d)^{rank}
  static SplittingType balanced(Int degree, Int rank);

  Int rank() const;
  bool empty() const noexcept { return runs_.empty(); }
  /// All summands have the same degree (vacuously true for the zero bundle).
  bool is_balanced() const noexcept { return runs_.size() <= 1; }

  const std::vector<Run>& runs() const noexcept { return runs_; }
  Int min_degree() const;
  Int max_degree() const;

  /// Expanded ascending degree list. Throws std::length_error past max_rank.
  std::vector<Int> degrees(Int max_rank = 1 << 20) const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<Run> runs_;  // strictly increasing degree, multiplicity > 0
};

Int h0(const SplittingType& s);
Int h1(const SplittingType& s);

SplittingType twist(const SplittingType& s, Int d);

/// m-th symmetric power; S^0 of anything (including the zero bundle) is O.
SplittingType sym_power(const SplittingType& s, Int m);

/// Pullback along the q-th power Frobenius, q a prime power.
SplittingType frobenius_pullback(const SplittingType& s, Int q);

bool is_nef_split(const SplittingType& s);

class AmbiguousExtension : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * Middle term of an extension 0 -> O(sub) -> V -> O(quot) -> 0 on P^1.
 *
 * Split requests return {sub, quot}. A nonsplit request with
 * Ext^1(O(quot), O(sub)) = 0 is forced to split. A nonsplit request with
 * sub - quot = -2 returns the balanced type {sub+1, quot-1}. Anything else
 * is not determined by nonsplitness alone and throws AmbiguousExtension.
 */
SplittingType classify_extension(Int sub_deg, Int quot_deg, bool nonsplit);

/// "[-1,-1]"; the zero bundle is "[]".
std::string format_split(const SplittingType& s);
/// Run-length form "[-4^5]" for types too large to print expanded.
std::string format_split_compact(const SplittingType& s);
SplittingType parse_split(std::string_view text);

/// Affine form c0 + cb*b + cl*l in the replay parameters (beta, l).
struct DegreeForm {
  Int c0 = 0;
  Int cb = 0;
  Int cl = 0;

  static constexpr DegreeForm constant(Int c) { return {c, 0, 0}; }
  static constexpr DegreeForm beta(Int k = 1) { return {0, k, 0}; }
  static constexpr DegreeForm ell(Int k = 1) { return {0, 0, k}; }

  bool is_constant() const noexcept { return cb == 0 && cl == 0; }
  Int eval(Int beta, Int l) const;

  friend bool operator==(const DegreeForm&, const DegreeForm&) = default;
};

DegreeForm operator+(const DegreeForm& x, const DegreeForm& y);
DegreeForm operator-(const DegreeForm& x, const DegreeForm& y);
DegreeForm operator*(Int k, const DegreeForm& x);

/// Exact decision of c0 + cb*b + cl*l < 0 for every beta >= 1, l >= 0.
bool form_is_negative_on_region(const DegreeForm& d);

/**
 * A point (beta, l) of the region where d is nonnegative, if one exists.
 * Returns the lexicographically smallest-beta such point along the edge the
 * decision rule fails on; std::nullopt iff form_is_negative_on_region(d).
 */
std::optional<std::pair<Int, Int>> nonnegative_witness(const DegreeForm& d);

/// Canonical text "c0 + cb*b + cl*l", e.g. "0 + -1*b + -2*l".
std::string format_form(const DegreeForm& d);
/// Human form, e.g. "-b - 2l".
std::string pretty_form(const DegreeForm& d);
DegreeForm parse_form(std::string_view text);

}  // namespace hirz::p1
