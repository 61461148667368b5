#pragma once

/**
 * @file cohomology.hpp
 * @brief Exact line-bundle cohomology on F_e.
 *
 * For a >= -1 the higher direct image R^1 f_* O(aC + bF) vanishes, so h^0 and
 * h^1 come from the splitting type of f_* O(aC + bF) on P^1 (Leray). h^2 is
 * h^0(K - D) by Serre duality, and the remaining h^1 (a <= -2) is recovered
 * from Riemann-Roch. All values are characteristic-independent.
 */

#include <optional>
#include <stdexcept>

#include "hirz/divisor.hpp"
#include "hirz/splitting.hpp"

namespace hirz::coh {

/// f_* O(aC + bF) = sum_{i=0..a} O(b - e*i); std::nullopt when a < 0 (f_* = 0).
std::optional<p1::SplittingType> pushforward_splitting(const SurfaceContext& ctx, DivisorClass d);

Int h0(const SurfaceContext& ctx, DivisorClass d);
Int h1(const SurfaceContext& ctx, DivisorClass d);
Int h2(const SurfaceContext& ctx, DivisorClass d);

/// chi(D) = 1 + (D.D - D.K)/2.
Int chi_rr(const SurfaceContext& ctx, DivisorClass d);

struct Cohomology {
  Int h0 = 0, h1 = 0, h2 = 0, chi = 0;
};
Cohomology cohomology(const SurfaceContext& ctx, DivisorClass d);

class OracleBoundExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr Int kOracleBound = 10'000;

/**
 * Count lattice points {(u, v) : 0 <= v <= a, 0 <= u <= b - e*v} one by one.
 * These are the torus-weight monomials spanning H^0 of the toric line bundle;
 * the count shares no formula with h0(). Requires |a|, |b| <= kOracleBound.
 */
Int brute_force_h0(const SurfaceContext& ctx, DivisorClass d);

}  // namespace hirz::coh
