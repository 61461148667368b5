#include "hirz/cohomology.hpp"

#include <cstdlib>
#include <string>

namespace hirz::coh {

std::optional<p1::SplittingType> pushforward_splitting(const SurfaceContext& ctx, DivisorClass d) {
  if (d.a < 0) return std::nullopt;
  std::vector<p1::SplittingType::Run> runs;
  runs.reserve(static_cast<std::size_t>(d.a) + 1);
  for (Int i = 0; i <= d.a; ++i) runs.push_back({checked_sub(d.b, checked_mul(ctx.e(), i)), 1});
  return p1::SplittingType::from_runs(std::move(runs));
}

Int h0(const SurfaceContext& ctx, DivisorClass d) {
  auto push = pushforward_splitting(ctx, d);
  return push ? p1::h0(*push) : 0;
}

Int h2(const SurfaceContext& ctx, DivisorClass d) { return h0(ctx, canonical_class(ctx) - d); }

Int chi_rr(const SurfaceContext& ctx, DivisorClass d) {
  const Int twice = checked_sub(intersect(ctx, d, d), intersect(ctx, d, canonical_class(ctx)));
  // D.D - D.K = D.(D - K) is even on any surface (Wu formula)
  if (twice % 2 != 0) throw std::logic_error("Riemann-Roch numerator is odd");
  return checked_add(1, twice / 2);
}

Int h1(const SurfaceContext& ctx, DivisorClass d) {
  if (d.a >= 0) return p1::h1(*pushforward_splitting(ctx, d));
  if (d.a == -1) return 0;  // f_* and R^1 f_* both vanish
  return checked_sub(checked_add(h0(ctx, d), h2(ctx, d)), chi_rr(ctx, d));
}

Cohomology cohomology(const SurfaceContext& ctx, DivisorClass d) {
  return {h0(ctx, d), h1(ctx, d), h2(ctx, d), chi_rr(ctx, d)};
}

Int brute_force_h0(const SurfaceContext& ctx, DivisorClass d) {
  if (std::llabs(d.a) > kOracleBound || std::llabs(d.b) > kOracleBound)
    throw OracleBoundExceeded("lattice-point oracle requires |a|, |b| <= " + std::to_string(kOracleBound) + ", got " +
                              format_class(d));
  Int count = 0;
  for (Int v = 0; v <= d.a; ++v)
    for (Int u = 0; u <= d.b - ctx.e() * v; ++u) ++count;
  return count;
}

}  // namespace hirz::coh
