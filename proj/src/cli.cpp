#include "hirz/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "hirz/cohomology.hpp"
#include "hirz/report_json.hpp"
#include "hirz/verifier.hpp"

namespace hirz::cli {

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string show_split(const p1::SplittingType& s) {
  return s.rank() <= 64 ? p1::format_split(s) : p1::format_split_compact(s);
}

void print_cones(std::ostream& out, const SurfaceContext& ctx, DivisorClass d) {
  out << "nef=" << yes_no(is_nef(ctx, d)) << " ample=" << yes_no(is_ample(ctx, d)) << " psef=" << yes_no(is_psef(ctx, d))
      << " big=" << yes_no(is_big(ctx, d)) << "\n";
  out << "(ample = very ample on F_e)\n";
}

int cmd_coh(std::ostream& out, Int e, const std::string& text, Int characteristic) {
  const SurfaceContext ctx(e);
  const DivisorClass d = parse_class(text);
  const auto c = coh::cohomology(ctx, d);
  out << "class " << format_class(d) << " on F_" << e << "\n";
  out << "h0=" << c.h0 << " h1=" << c.h1 << " h2=" << c.h2 << " chi=" << c.chi;
  try {
    out << " oracle_h0=" << coh::brute_force_h0(ctx, d);
  } catch (const coh::OracleBoundExceeded&) {
    out << " oracle_h0=n/a";
  }
  out << "\n";
  print_cones(out, ctx, d);
  if (characteristic != 0)
    out << "note: line-bundle cohomology on F_e does not depend on the characteristic (char " << characteristic << ")\n";
  return kExitPass;
}

int cmd_cone(std::ostream& out, Int e, const std::string& text) {
  const SurfaceContext ctx(e);
  const DivisorClass d = parse_class(text);
  out << "class " << format_class(d) << " on F_" << e << "\n";
  out << "D.C=" << intersect(ctx, d, DivisorClass::section()) << " D.F=" << intersect(ctx, d, DivisorClass::fiber())
      << " D.D=" << intersect(ctx, d, d) << " D.K=" << intersect(ctx, d, canonical_class(ctx)) << "\n";
  print_cones(out, ctx, d);
  return kExitPass;
}

p1::SplittingType apply_op(const p1::SplittingType& s, const std::string& op) {
  const auto colon = op.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("operation", "expected name:value, got '" + op + "'");
  const std::string name = op.substr(0, colon);
  Int value = 0;
  try {
    std::size_t used = 0;
    value = std::stoll(op.substr(colon + 1), &used);
    if (used != op.size() - colon - 1) throw std::invalid_argument(op);
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("operation", "bad integer in '" + op + "'");
  }
  if (name == "sym") return p1::sym_power(s, value);
  if (name == "twist") return p1::twist(s, value);
  if (name == "frob") return p1::frobenius_pullback(s, value);
  throw CLI::ValidationError("operation", "unknown operation '" + name + "' (use sym:m, twist:d, frob:q)");
}

int cmd_split(std::ostream& out, const std::string& type_text, const std::vector<std::string>& ops,
              const std::vector<Int>& extension, bool split_ext) {
  p1::SplittingType s;
  if (!extension.empty()) {
    if (extension.size() != 2) throw CLI::ValidationError("--extension", "expects SUB,QUOT");
    s = p1::classify_extension(extension[0], extension[1], !split_ext);
  } else {
    s = p1::parse_split(type_text);
  }
  for (const auto& op : ops) s = apply_op(s, op);
  out << show_split(s) << "\n";
  out << "rank=" << s.rank() << " h0=" << p1::h0(s) << " h1=" << p1::h1(s) << " nef=" << yes_no(p1::is_nef_split(s)) << "\n";
  return kExitPass;
}

void print_report(std::ostream& out, const replay::VerificationReport& r) {
  using replay::Status;
  const auto& o = r.options;
  out << "replay on F_" << r.surface_e << ", characteristic " << o.characteristic << ", " << replay::mode_name(o.mode) << " mode";
  if (o.mode == replay::Mode::Sweep) out << ", beta <= " << o.beta_max;
  out << "\n";
  if (o.controls.split_restriction) out << "control: split extension\n";
  if (o.controls.inflated_twist) out << "control: inflated twist in claim4\n";
  if (r.extension)
    out << "extension  0 -> O_X(C) -> E -> O_X -> 0, dim Ext^1 = " << r.extension->ext_dim << "\n";
  if (r.restriction) {
    const auto& c = *r.restriction;
    out << "[" << replay::status_name(c.status) << "] restriction  h1(O_X)=" << c.h1_structure_sheaf
        << " h1(O_C(C))=" << c.h1_normal;
    if (c.section_type) out << " E|_C=" << show_split(*c.section_type);
    if (c.fiber_type) out << " E|_F=" << show_split(*c.fiber_type);
    out << "\n";
    if (c.status != Status::Pass) out << "      " << c.reason << "\n";
  }
  int certified = 0, evidence = 0;
  for (const auto& c : r.claims) {
    out << "[" << replay::status_name(c.status) << "] " << std::left << std::setw(11) << c.id << c.certifies << "\n";
    if (!c.bundle.empty()) out << "      bundle  " << c.bundle << "\n";
    if (c.form) {
      out << "      degree  " << p1::pretty_form(*c.form) << "  (" << p1::format_form(*c.form) << ")\n";
    }
    if (!c.rank.empty()) out << "      rank    " << c.rank << "\n";
    if (!c.region.empty()) out << "      region  " << c.region << "\n";
    for (const auto& [k, v] : c.values) out << "      " << k << " = " << v << "\n";
    if (c.evaluations > 0) out << "      h0 evaluations  " << c.evaluations << "\n";
    for (const auto& ch : c.checks)
      if (!ch.pass) out << "      failed check: " << ch.name << ": observed " << ch.observed << ", expected " << ch.expected << "\n";
    if (c.witness) {
      out << "      witness b=" << c.witness->first << " l=" << c.witness->second;
      if (c.witness_h0) out << " h0=" << *c.witness_h0;
      out << "\n";
    }
    if (c.status != Status::Pass)
      for (const auto& n : c.notes) out << "      note: " << n << "\n";
    if (c.status == Status::Pass) (c.id == "almost_nef" ? evidence : certified)++;
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "claims certified: " << certified << ", evidence records: " << evidence << "\n";
  out << replay::status_name(r.status) << ": " << r.conclusion << "\n";
  if (!r.first_failure.empty()) out << "first failure: " << r.first_failure << "\n";
}

int cmd_verify(std::ostream& out, std::ostream& err, Int e, Int characteristic, const std::string& mode,
               std::optional<Int> beta_max, const std::string& json_path, const std::vector<std::string>& controls) {
  replay::ReplayOptions opts;
  if (characteristic != 0 && !is_prime(characteristic))
    throw CLI::ValidationError("--char", "characteristic must be 0 or a prime, got " + std::to_string(characteristic));
  opts.characteristic = characteristic;
  opts.mode = mode == "sweep" ? replay::Mode::Sweep : replay::Mode::Symbolic;
  if (opts.mode == replay::Mode::Sweep && !beta_max) throw CLI::ValidationError("--beta-max", "required with --mode sweep");
  if (beta_max) {
    if (*beta_max < 1) throw CLI::ValidationError("--beta-max", "must be >= 1");
    opts.beta_max = *beta_max;
  }
  for (const auto& c : controls) {
    if (c == "split") opts.controls.split_restriction = true;
    else if (c == "twist") opts.controls.inflated_twist = true;
  }
  const auto report = replay::run_full_replay(SurfaceContext(e), opts);
  print_report(out, report);
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    if (!f) {
      err << "cannot write " << json_path << "\n";
      return kExitUsage;
    }
    f << replay::to_json(report).dump(2) << "\n";
  }
  return report.status == replay::Status::Pass ? kExitPass : kExitClaimFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Line-bundle cohomology on Hirzebruch surfaces and replay of a non-pseudo-effective extension", "hirz"};
  app.require_subcommand(0, 1);

  Int e = 2;
  Int characteristic = 0;
  std::string class_text, type_text, mode = "symbolic", json_path;
  std::optional<Int> beta_max;
  std::vector<std::string> ops, controls;
  std::vector<Int> extension;
  bool split_ext = false;

  auto* coh_cmd = app.add_subcommand("coh", "cohomology and cone membership of a divisor class aC+bF");
  coh_cmd->add_option("-e", e, "Hirzebruch invariant e")->check(CLI::NonNegativeNumber);
  coh_cmd->add_option("--char", characteristic, "characteristic (does not change the result)")->check(CLI::NonNegativeNumber);
  coh_cmd->add_option("class", class_text, "divisor class, e.g. C+3F (put -- before a leading minus)")->required();

  auto* cone_cmd = app.add_subcommand("cone", "intersection numbers and cone membership of a class");
  cone_cmd->add_option("-e", e, "Hirzebruch invariant e")->check(CLI::NonNegativeNumber);
  cone_cmd->add_option("class", class_text, "divisor class")->required();

  auto* split_cmd = app.add_subcommand("split", "operate on a splitting type on P^1");
  split_cmd->add_option("type", type_text, "splitting type, e.g. [-1,-1]");
  split_cmd->add_option("ops", ops, "operations applied left to right: sym:m twist:d frob:q");
  split_cmd->add_option("--extension", extension, "start from the extension of O(QUOT) by O(SUB)")->delimiter(',')->expected(2);
  split_cmd->add_flag("--split-ext", split_ext, "take the split extension instead of a nonsplit one");

  auto* verify_cmd = app.add_subcommand("verify", "replay the non-pseudo-effectivity certificates");
  verify_cmd->add_option("-e", e, "Hirzebruch invariant e")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--char", characteristic, "0 or a prime");
  verify_cmd->add_option("--mode", mode, "symbolic or sweep")->check(CLI::IsMember({"symbolic", "sweep"}));
  verify_cmd->add_option("--beta-max", beta_max, "largest beta in sweep mode");
  verify_cmd->add_option("--json", json_path, "write the JSON report here");
  verify_cmd->add_option("--control", controls, "falsifiability control: split or twist")->check(CLI::IsMember({"split", "twist"}));

  try {
    app.parse(argc, argv);
    if (*coh_cmd) return cmd_coh(out, e, class_text, characteristic);
    if (*cone_cmd) return cmd_cone(out, e, class_text);
    if (*split_cmd) {
      if (type_text.empty() && extension.empty()) throw CLI::ValidationError("type", "a splitting type or --extension is required");
      // with --extension every positional is an operation
      if (!extension.empty() && !type_text.empty()) ops.insert(ops.begin(), type_text);
      return cmd_split(out, type_text, ops, extension, split_ext);
    }
    return cmd_verify(out, err, e, characteristic, mode, beta_max, json_path, controls);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitClaimFailure;
  }
}

}  // namespace hirz::cli
