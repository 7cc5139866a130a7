#include "sigma/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sigma/error.hpp"

namespace sigma {

namespace {

SuiteResult prod_ineq(const SuiteOptions& o) {
  const ProductReport rep = verify_product_inequality(o.set, o.degree, o.oracle);
  const double bound = o.set.max_abs();
  SuiteResult r;
  r.cases.push_back({"no-violations", rep.violations == 0, to_json(rep)});
  r.cases.push_back({"max-product-within-bound", rep.max_product <= bound + rep.tau_ineq,
                     {{"max_product", rep.max_product}, {"bound", bound}}});
  return r;
}

SuiteResult real_strip(const SuiteOptions& o) {
  SuiteResult r;
  const double lo = 1.0 / (o.set.max_abs() + 1.0), hi = 0.99;
  const int n = std::max(1, o.samples);
  for (int i = 0; i < n; ++i) {
    const double x = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    CaseResult c;
    c.name = "x=" + std::to_string(x);
    try {
      const Decision d = witness_real_interval(o.set, x, o.steps);
      c.pass = d.verdict == Verdict::In && d.witness->max_abs_q <= 1.0;
      c.detail = {{"x", x}, {"max_abs_q", d.witness->max_abs_q}};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::GreedyFailed) throw;
      c.pass = false;
      c.detail = {{"x", x}, {"error", e.what()}};
    }
    r.cases.push_back(std::move(c));
  }
  return r;
}

SuiteResult annulus(const SuiteOptions& o) {
  SuiteResult r;
  const double lo = 1.0 / std::sqrt(o.set.max_abs());
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> mod(lo, 0.99);
  std::uniform_real_distribution<double> angle(0.0, Candidate::kPi / 2);
  for (int i = 0; i < std::max(1, o.samples); ++i) {
    double theta = 0.0;
    while (theta == 0.0) theta = angle(rng);
    const double m = mod(rng);
    const Candidate cand = Candidate::polar(1.0 / m, theta);
    const Decision d = witness_bounded_greedy(o.set, cand, o.steps, GreedyTarget::UnitInterval);
    CaseResult c;
    c.name = "lambda#" + std::to_string(i);
    c.pass = d.verdict == Verdict::In;
    c.detail = {{"modulus", m}, {"theta", theta}, {"decision", to_json(d)}};
    r.cases.push_back(std::move(c));
  }
  return r;
}

SuiteResult rigidity(const SuiteOptions& o) {
  const RigidityReport rep = rigidity_probe(o.set);
  SuiteResult r;
  for (const auto& e : rep.entries)
    r.cases.push_back({"k=" + std::to_string(e.k), e.agrees,
                       {{"in_set", e.in_set}, {"verdict", to_string(e.decision.verdict)}}});
  return r;
}

SuiteResult quasirigidity(const SuiteOptions& o) {
  SuiteResult r;
  const int M = static_cast<int>(o.set.max_abs());
  std::vector<int> ks;
  if (o.k != 0) ks.push_back(o.k);
  else
    for (int k = 2; k < M; ++k) ks.push_back(k);
  for (int k : ks) {
    const QuasiRigidityReport rep = quasirigidity_probe(o.set, k, o.cfg);
    r.cases.push_back({"k=" + std::to_string(k), rep.agrees, to_json(rep)});
  }
  return r;
}

SuiteResult gap3(const SuiteOptions& o) {
  const Gap3Report rep = gap3_disconnection_candidate(o.set, o.cfg);
  SuiteResult r;
  r.cases.push_back({"probe-out", rep.decision.verdict == Verdict::Out, to_json(rep.decision)});
  r.cases.push_back({"lower-bracket-in", rep.lower.replay.coefficients_valid && rep.lower.replay.bounded,
                     to_json(rep.lower.replay)});
  r.cases.push_back({"upper-bracket-in", rep.upper.replay.coefficients_valid && rep.upper.replay.bounded,
                     to_json(rep.upper.replay)});
  r.cases.push_back({"ordering", rep.lower.x < rep.x && rep.x < rep.upper.x,
                     {{"lower", rep.lower.x}, {"x", rep.x}, {"upper", rep.upper.x}}});
  return r;
}

SuiteResult conn_class(const SuiteOptions& o) {
  const ConnectednessVerdict v = classify_connectedness(o.set);
  const ConnGraph g = connectivity_graph(o.set);
  SuiteResult r;
  const bool gap_large = v.total_gap >= 3.0 - kSetTolerance;
  const bool gap_small = v.total_gap <= 2.0 + kSetTolerance;
  bool consistent = true;
  if (gap_large) consistent = v.sigma == Connectedness::Disconnected && v.sigma_one == Connectedness::Disconnected;
  if (gap_small) consistent = v.sigma != Connectedness::Disconnected && v.sigma_one == Connectedness::ConnectedLC;
  r.cases.push_back({"classification", consistent, to_json(v)});
  if (gap_small)
    r.cases.push_back({"graph-connected", g.connected,
                       {{"vertices", g.vertices.size()}, {"edges", g.edges.size()}}});
  return r;
}

SuiteResult cross_check(const SuiteOptions& o) {
  const CrossCheckReport rep = cross_check_decide(o.set, o.degree, o.samples, o.cfg, o.oracle);
  SuiteResult r;
  r.cases.push_back({"no-contradictions", rep.contradictions.empty(), to_json(rep)});
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"prod-ineq", "real-strip", "annulus",    "rigidity",
                                              "quasirigidity", "gap3",   "conn-class", "cross-check"};
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& opts) {
  SuiteResult r;
  if (name == "prod-ineq") r = prod_ineq(opts);
  else if (name == "real-strip") r = real_strip(opts);
  else if (name == "annulus") r = annulus(opts);
  else if (name == "rigidity") r = rigidity(opts);
  else if (name == "quasirigidity") r = quasirigidity(opts);
  else if (name == "gap3") r = gap3(opts);
  else if (name == "conn-class") r = conn_class(opts);
  else if (name == "cross-check") r = cross_check(opts);
  else throw Error(ErrorKind::InvalidInput, "unknown suite '" + std::string(name) + "'");
  r.suite = std::string(name);
  r.pass = !r.cases.empty() && std::all_of(r.cases.begin(), r.cases.end(), [](const CaseResult& c) { return c.pass; });
  return r;
}

json to_json(const SuiteResult& r) {
  json cases = json::array();
  long long failed = 0;
  for (const auto& c : r.cases) {
    cases.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    if (!c.pass) ++failed;
  }
  return {{"suite", r.suite}, {"pass", r.pass}, {"cases", cases.size()}, {"failed", failed}, {"detail", cases}};
}

}  // namespace sigma
