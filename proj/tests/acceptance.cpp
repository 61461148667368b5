// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// All results are exact integers; the only tolerances are wall-clock bounds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hirz/cli.hpp"
#include "hirz/cohomology.hpp"
#include "hirz/verifier.hpp"

using namespace hirz;
using namespace hirz::replay;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double budget_ms, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& ex) {
    o.ok = false;
    o.detail = std::string("exception: ") + ex.what();
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (ms > budget_ms) o.require(false, "runtime " + std::to_string(ms) + " ms exceeds " + std::to_string(budget_ms) + " ms");
  std::printf("[%s] %d. %-28s %9.3f ms (budget %.0f ms)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, ms, budget_ms,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  failures += !o.ok;
}

const SurfaceContext kF2(2);

ReplayOptions options(Int characteristic, Mode mode, Int beta_max = 50) {
  ReplayOptions o;
  o.characteristic = characteristic;
  o.mode = mode;
  o.beta_max = beta_max;
  return o;
}

int run_cli(std::vector<std::string> args, std::string& out) {
  args.insert(args.begin(), "hirz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
  out = o.str();
  return code;
}

}  // namespace

int main() {
  criterion(1, "Ext-group dimension", 1.0, [] {
    Outcome o;
    o.require(coh::h1(kF2, DivisorClass::section()) == 1, "h1(O(C)) != 1");
    o.require(build_extension(kF2).ext_dim == 1, "ext_dim != 1");
    return o;
  });

  criterion(2, "Restriction types", 1.0, [] {
    Outcome o;
    const auto cert = nonsplit_restriction_certificate(kF2, build_extension(kF2));
    o.require(cert.status == Status::Pass, "restriction certificate failed");
    o.require(cert.section_type == p1::SplittingType{-1, -1}, "E|_C != [-1,-1]");
    o.require(cert.fiber_type == p1::SplittingType{0, 1}, "E|_F != [0,1]");
    o.require(cert.fiber_type && p1::is_nef_split(*cert.fiber_type), "E|_F not nef");
    return o;
  });

  criterion(3, "Char-0 replay", 1000.0, [] {
    Outcome o;
    std::string out;
    o.require(run_cli({"verify", "--char", "0", "--mode", "symbolic"}, out) == cli::kExitPass, "verify exit code");
    o.require(out.find("PASS: E is not pseudo-effective") != std::string::npos, "conclusion missing");
    const auto sym = run_full_replay(kF2, options(0, Mode::Symbolic));
    o.require(sym.status == Status::Pass, "symbolic replay failed");
    o.require(sym.find("claim3")->form == DegreeForm{0, -1, -2}, "claim3 form");
    o.require(sym.find("claim4")->form == DegreeForm{0, -1, 0}, "claim4 form");
    o.require(sym.conclusion.find("not pseudo-effective") != std::string::npos, "conclusion text");
    const auto num = run_full_replay(kF2, options(0, Mode::Sweep, 50));
    o.require(num.status == Status::Pass, "sweep failed");
    for (std::size_t i = 0; i < sym.claims.size(); ++i)
      o.require(sym.claims[i].status == num.claims[i].status, "symbolic/sweep disagree on " + sym.claims[i].id);
    return o;
  });

  criterion(4, "Char-p replay", 1000.0, [] {
    Outcome o;
    const Int primes[] = {2, 3, 5, 7, 11};
    const Int exponents[] = {2, 2, 1, 1, 1};
    const Int boundaries[] = {-1, -21, -5, -13, -29};
    for (int i = 0; i < 5; ++i) {
      const auto r = run_full_replay(kF2, options(primes[i], Mode::Symbolic));
      const auto* c = r.find("charp");
      const std::string p = "p=" + std::to_string(primes[i]);
      o.require(r.status == Status::Pass && c && c->status == Status::Pass, p + " failed");
      if (!c) continue;
      o.require(c->values.at("frobenius_exponent") == exponents[i], p + " exponent");
      o.require(c->values.at("boundary_value") == boundaries[i], p + " boundary");
      o.require(c->values.at("boundary_value") <= -1, p + " above bound");
      o.require((c->values.at("boundary_value") == -1) == (primes[i] == 2), p + " bound attainment");
    }
    return o;
  });

  criterion(5, "Remark replay", 1000.0, [] {
    Outcome o;
    const auto c = remark_t_beta_certificate(kF2, build_extension(kF2), options(0, Mode::Symbolic));
    o.require(c.status == Status::Pass, "t_beta certificate failed");
    o.require(c.form == DegreeForm{0, -1, -2}, "form");
    o.require(c.conclusion.find("E is not pseudo-effective") != std::string::npos, "conclusion");
    return o;
  });

  criterion(6, "Oracle equivalence", 2000.0, [] {
    Outcome o;
    int cases = 0, mismatches = 0;
    for (Int e = 0; e <= 3; ++e) {
      const SurfaceContext x(e);
      for (Int a = -10; a <= 10; ++a)
        for (Int b = -10; b <= 10; ++b, ++cases) mismatches += coh::h0(x, {a, b}) != coh::brute_force_h0(x, {a, b});
    }
    o.require(cases == 1764, "case count " + std::to_string(cases));
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    return o;
  });

  criterion(7, "Property suites", 5000.0, [] {
    Outcome o;
    int serre = 0, rr = 0, eff = 0, incl = 0, closure = 0;
    auto check_class = [&](const SurfaceContext& x, DivisorClass d) {
      const auto c = coh::cohomology(x, d);
      const DivisorClass kd = canonical_class(x) - d;
      serre += c.h2 != coh::h0(x, kd) || c.h1 != coh::h1(x, kd);
      rr += c.h0 - c.h1 + c.h2 != c.chi;
      eff += (c.h0 > 0) != is_psef(x, d);
      incl += (is_ample(x, d) && !is_nef(x, d)) || (is_nef(x, d) && !is_psef(x, d)) || (is_ample(x, d) && !is_big(x, d)) ||
              (is_big(x, d) && !is_psef(x, d));
    };
    for (Int e = 0; e <= 3; ++e) {
      const SurfaceContext x(e);
      std::vector<DivisorClass> nef, psef;
      for (Int a = -10; a <= 10; ++a)
        for (Int b = -10; b <= 10; ++b) {
          check_class(x, {a, b});
          if (is_nef(x, {a, b})) nef.push_back({a, b});
          if (is_psef(x, {a, b})) psef.push_back({a, b});
        }
      for (const auto& p : nef)
        for (const auto& q : nef) closure += !is_nef(x, p + q);
      for (const auto& p : psef)
        for (const auto& q : psef) closure += !is_psef(x, p + q);
    }
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<Int> coef(-50, 50), ee(0, 3);
    for (int i = 0; i < 1000; ++i) {
      const SurfaceContext x(ee(rng));
      const DivisorClass d{coef(rng), coef(rng)}, d2{coef(rng), coef(rng)};
      check_class(x, d);
      if (is_nef(x, d) && is_nef(x, d2)) closure += !is_nef(x, d + d2);
      if (is_psef(x, d) && is_psef(x, d2)) closure += !is_psef(x, d + d2);
    }
    o.require(serre == 0, "Serre duality failures: " + std::to_string(serre));
    o.require(rr == 0, "Riemann-Roch failures: " + std::to_string(rr));
    o.require(eff == 0, "effectivity failures: " + std::to_string(eff));
    o.require(incl == 0, "cone inclusion failures: " + std::to_string(incl));
    o.require(closure == 0, "sum-closure failures: " + std::to_string(closure));
    return o;
  });

  criterion(8, "Falsifiability controls", 5000.0, [] {
    Outcome o;
    auto split = options(0, Mode::Sweep, 50);
    split.controls.split_restriction = true;
    const auto rs = run_full_replay(kF2, split);
    const auto* c3 = rs.find("claim3");
    o.require(rs.status == Status::Fail, "split control passed overall");
    o.require(c3->status == Status::Fail && c3->witness && c3->witness_h0 && *c3->witness_h0 > 0,
              "split control: claim3 has no witness");

    auto inflated = options(0, Mode::Symbolic);
    inflated.controls.inflated_twist = true;
    const auto ri = run_full_replay(kF2, inflated);
    const auto* c4 = ri.find("claim4");
    o.require(ri.status == Status::Fail, "inflated control passed overall");
    o.require(c4->status == Status::Fail && c4->witness && c4->witness_h0 && *c4->witness_h0 > 0,
              "inflated control: claim4 has no witness");
    if (o.ok)
      o.detail = "split: claim3 h0=" + std::to_string(*c3->witness_h0) + " at b=1,l=0; inflated: claim4 h0=" +
                 std::to_string(*c4->witness_h0) + " at b=1";
    return o;
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
