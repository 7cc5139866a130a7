#include "sigma/serialize.hpp"

#include <array>

#include "sigma/error.hpp"

namespace sigma {

json to_json(complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const CoefficientSet& s) {
  return {{"elements", std::vector<double>(s.elements().begin(), s.elements().end())},
          {"exact_integer", s.exact_integer()}};
}

json to_json(const Witness& w) {
  json j{{"preperiod", w.preperiod}, {"period", w.period}};
  if (!w.rule.empty()) j["rule"] = w.rule;
  if (w.max_abs_q > 0.0) j["max_abs_q"] = w.max_abs_q;
  return j;
}

json to_json(const Certificate& c) {
  return {{"depth_exhausted", c.depth_exhausted},
          {"branches_pruned", c.branches_pruned},
          {"nodes", c.nodes},
          {"modulo_rounding", c.modulo_rounding},
          {"budget_exceeded", c.budget_exceeded}};
}

json to_json(const Decision& d) {
  json j{{"verdict", to_string(d.verdict)}, {"depth", d.depth}, {"exact", d.exact}};
  if (d.witness) j["witness"] = to_json(*d.witness);
  if (d.certificate) j["certificate"] = to_json(*d.certificate);
  if (!d.note.empty()) j["note"] = d.note;
  return j;
}

json to_json(const ReplayResult& r) {
  return {{"coefficients_valid", r.coefficients_valid},
          {"bounded", r.bounded},
          {"max_abs_q", r.max_abs_q},
          {"threshold", r.threshold},
          {"steps", r.steps}};
}

json to_json(const SearchConfig& c) {
  return {{"max_depth", c.max_depth},         {"slack", c.slack},
          {"variant", to_string(c.variant)},  {"first_coeff", to_string(c.first_coeff)},
          {"exact", c.exact},                 {"node_budget", c.node_budget},
          {"exact_memo", c.exact_memo}};
}

json to_json(const ConnectednessVerdict& v) {
  return {{"sigma", to_string(v.sigma)}, {"sigma_one", to_string(v.sigma_one)}, {"total_gap", v.total_gap}};
}

json to_json(const DepthReport& r) {
  json theta = json::array();
  for (auto [t, b] : r.rho_theta) theta.push_back({{"theta", t}, {"lower_bound", b}});
  json j{{"M", r.M},
         {"outer_annulus_low", r.outer_annulus_low},
         {"rho_out_low", r.rho_out_low},
         {"rho_out_low_exclusive", true},
         {"rho_out_high", r.rho_out_high},
         {"rho_out_k", r.rho_out_k},
         {"rho_theta", theta}};
  j["rho_inn_high"] = r.rho_inn_high ? json(*r.rho_inn_high) : json(nullptr);
  return j;
}

json to_json(const RigidityReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"k", e.k}, {"in_set", e.in_set}, {"agrees", e.agrees}, {"decision", to_json(e.decision)}});
  return {{"M", r.M}, {"probes", entries}, {"violations", r.violations}};
}

json to_json(const QuasiRigidityReport& r) {
  json j{{"k", r.k},
         {"sigma", r.sigma},
         {"x", r.x},
         {"expected_in", r.expected_in},
         {"search", to_json(r.search)},
         {"verdict", to_string(r.verdict)},
         {"agrees", r.agrees}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (r.replay) j["replay"] = to_json(*r.replay);
  return j;
}

json to_json(const Gap3Report& r) {
  auto bracket = [](const BracketPoint& b) {
    return json{{"x", b.x}, {"witness", to_json(b.witness)}, {"replay", to_json(b.replay)}};
  };
  return {{"s", r.s_low},        {"s_next", r.s_high},          {"r", r.r},
          {"x", r.x},            {"decision", to_json(r.decision)}, {"lower", bracket(r.lower)},
          {"upper", bracket(r.upper)}, {"pass", r.pass}};
}

json to_json(const ProductReport& r) {
  return {{"polynomials", r.polynomials},   {"violations", r.violations},
          {"max_product", r.max_product},   {"max_poly", r.max_poly},
          {"violating_polys", r.violating_polys}, {"tau_ineq", r.tau_ineq}};
}

json to_json(const MinModulusReport& r) {
  return {{"modulus", r.modulus}, {"z", to_json(r.z)}, {"poly", r.poly}, {"polynomials", r.polynomials}};
}

json to_json(const CrossCheckReport& r) {
  json bad = json::array();
  for (const auto& c : r.contradictions)
    bad.push_back({{"z", to_json(c.z)}, {"poly", c.poly}, {"decision", to_json(c.decision)}});
  return {{"polynomials_checked", r.polynomials_checked},
          {"roots_checked", r.roots_checked},
          {"in_like", r.in_like},
          {"unknown", r.unknown},
          {"contradictions", bad}};
}

json to_json(const SpikeCountReport& r) {
  return {{"count", r.count}, {"present", r.present}, {"absent", r.absent}};
}

json to_json(const SpikeBand& b) {
  return {{"k", b.k},
          {"r_range", {b.r_low, b.r_high}},
          {"cos_range_at_r_low", {b.cos_low(b.r_low), b.cos_high(b.r_low)}},
          {"cos_range_at_r_high", {b.cos_low(b.r_high), b.cos_high(b.r_high)}}};
}

json to_json(const RasterSpec& s) {
  return {{"x_range", {s.x_min, s.x_max}},
          {"y_range", {s.y_min, s.y_max}},
          {"width", s.width},
          {"height", s.height},
          {"cfg", to_json(s.cfg)},
          {"shortcuts", {{"certified_annulus", s.shortcuts.certified_annulus}, {"outer_cutoff", s.shortcuts.outer_cutoff}}},
          {"auto_deepen", s.auto_deepen}};
}

json raster_metadata(const Raster& r) {
  std::array<long long, 4> hist{};
  for (auto c : r.codes) ++hist[c < 4 ? c : 2];
  return {{"spec", to_json(r.spec)},
          {"set", r.set_elements},
          {"set_digest", r.set_digest},
          {"codes", {{"In", hist[0]}, {"PresumedIn", hist[1]}, {"Unknown", hist[2]}, {"Out", hist[3]}}}};
}

CoefficientSet set_from_json(const json& j) {
  try {
    return CoefficientSet::from_values(j.at("elements").get<std::vector<double>>(), j.value("exact_integer", false));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("bad set JSON: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace sigma
