#pragma once

/**
 * @file divisor.hpp
 * @brief Picard lattice of the Hirzebruch surface F_e.
 *
 * Pic(F_e) is free of rank two, generated by the negative section C
 * (C.C = -e) and a fiber F of the ruling F_e -> P^1. A class is stored as
 * the integer pair (a, b) meaning aC + bF.
 */

#include <stdexcept>
#include <string>
#include <string_view>

#include "hirz/checked.hpp"

namespace hirz {

/// The surface F_e = P(O + O(-e)) over P^1.
class SurfaceContext {
 public:
  explicit SurfaceContext(Int e = 2);

  Int e() const noexcept { return e_; }

  friend bool operator==(const SurfaceContext&, const SurfaceContext&) = default;

 private:
  Int e_;
};

struct DivisorClass {
  Int a = 0;  ///< coefficient of C
  Int b = 0;  ///< coefficient of F

  static constexpr DivisorClass section() { return {1, 0}; }
  static constexpr DivisorClass fiber() { return {0, 1}; }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(DivisorClass x, DivisorClass y);
DivisorClass operator-(DivisorClass x, DivisorClass y);
DivisorClass operator-(DivisorClass x);
DivisorClass operator*(Int n, DivisorClass x);

/// Intersection pairing: C.C = -e, C.F = 1, F.F = 0.
Int intersect(const SurfaceContext& ctx, DivisorClass x, DivisorClass y);

/// K = -2C - (e+2)F.
DivisorClass canonical_class(const SurfaceContext& ctx);

// Cone membership. The Mori cone and the effective cone of F_e are both
// spanned by C and F; the nef cone is dual to it.
bool is_nef(const SurfaceContext& ctx, DivisorClass d);
bool is_ample(const SurfaceContext& ctx, DivisorClass d);
bool is_psef(const SurfaceContext& ctx, DivisorClass d);
bool is_big(const SurfaceContext& ctx, DivisorClass d);

class DivisorParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Parse `[n]C[+-][m]F`. Either term may be omitted, coefficients are
 * optional (default 1), whitespace is ignored and a lone "0" is the zero
 * class. Each of C and F may appear at most once.
 */
DivisorClass parse_class(std::string_view text);

/// Inverse of parse_class: "C+3F", "-2C-4F", "3F", "0".
std::string format_class(DivisorClass d);

}  // namespace hirz
