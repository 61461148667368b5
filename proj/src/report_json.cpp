#include "hirz/report_json.hpp"

namespace hirz::replay {

namespace {

using nlohmann::json;

json form_json(const DegreeForm& f) {
  return {{"c0", f.c0}, {"cb", f.cb}, {"cl", f.cl}, {"text", p1::format_form(f)}};
}

json opt_split(const std::optional<SplittingType>& s) {
  if (!s) return nullptr;
  return s->rank() <= 64 ? p1::format_split(*s) : p1::format_split_compact(*s);
}

json claim_json(const ClaimRecord& c) {
  json checks = json::array();
  for (const auto& ch : c.checks)
    checks.push_back({{"name", ch.name}, {"observed", ch.observed}, {"expected", ch.expected}, {"pass", ch.pass}});
  json out = {
      {"id", c.id},
      {"certifies", c.certifies},
      {"bundle", c.bundle},
      {"region", c.region},
      {"checks", checks},
      {"values", c.values},
      {"evaluations", c.evaluations},
      {"conclusion", c.conclusion},
      {"notes", c.notes},
      {"status", status_name(c.status)},
  };
  out["degree_form"] = c.form ? form_json(*c.form) : json(nullptr);
  out["rank"] = c.rank.empty() ? json(nullptr) : json(c.rank);
  out["witness"] = c.witness ? json{{"beta", c.witness->first}, {"l", c.witness->second}} : json(nullptr);
  out["witness_h0"] = c.witness_h0 ? json(*c.witness_h0) : json(nullptr);
  return out;
}

}  // namespace

json to_json(const VerificationReport& r) {
  json out;
  out["schema"] = VerificationReport::kSchema;
  out["surface_e"] = r.surface_e;
  out["characteristic"] = r.options.characteristic;
  out["mode"] = mode_name(r.options.mode);
  out["beta_max"] = r.options.mode == Mode::Sweep ? json(r.options.beta_max) : json(nullptr);
  out["controls"] = {{"split_restriction", r.options.controls.split_restriction},
                     {"inflated_twist", r.options.controls.inflated_twist}};
  if (r.extension) {
    out["extension"] = {{"sub", format_class(r.extension->sub)},
                        {"quot", format_class(r.extension->quot)},
                        {"nonsplit", r.extension->nonsplit},
                        {"ext_dim", r.extension->ext_dim}};
  } else {
    out["extension"] = nullptr;
  }
  if (r.restriction) {
    const auto& c = *r.restriction;
    out["restriction"] = {{"h1_structure_sheaf", c.h1_structure_sheaf},
                          {"h1_normal", c.h1_normal},
                          {"section_type", opt_split(c.section_type)},
                          {"fiber_type", opt_split(c.fiber_type)},
                          {"reason", c.reason},
                          {"status", status_name(c.status)}};
  } else {
    out["restriction"] = nullptr;
  }
  json claims = json::object();
  json order = json::array();
  for (const auto& c : r.claims) {
    claims[c.id] = claim_json(c);
    order.push_back(c.id);
  }
  out["claims"] = claims;
  out["claim_order"] = order;
  out["notes"] = r.notes;
  out["conclusion"] = r.conclusion;
  out["first_failure"] = r.first_failure.empty() ? json(nullptr) : json(r.first_failure);
  out["status"] = status_name(r.status);
  return out;
}

}  // namespace hirz::replay
