// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sigma/coeffset.hpp"
#include "sigma/decide.hpp"
#include "sigma/error.hpp"
#include "sigma/geometry.hpp"
#include "sigma/oracle.hpp"
#include "sigma/render.hpp"

using namespace sigma;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

CoefficientSet ints(std::vector<long long> v) { return CoefficientSet::from_integers(v); }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Outcome rigidity() {
  const auto t0 = Clock::now();
  const auto s = CoefficientSet::span(10);
  int correct = 0;
  std::ostringstream os;
  for (int k = 2; k <= 7; ++k) {
    const double drop[] = {double(k)};
    const Verdict with = decide_exact_quadratic(s, -(k + 1), 10 + k, FirstCoeff::AnyNonzero).verdict;
    const Verdict without = decide_exact_quadratic(s.without_pm(drop), -(k + 1), 10 + k, FirstCoeff::AnyNonzero).verdict;
    correct += (with == Verdict::In) + (without == Verdict::Out);
    os << " k=" << k << ":" << to_string(with) << "/" << to_string(without);
  }
  const double t = seconds_since(t0);
  os << " (" << correct << "/12 exact, " << t << " s)";
  return {correct == 12 && t < 1.0, os.str()};
}

Outcome spikes() {
  const auto t0 = Clock::now();
  RasterSpec spec;
  spec.width = spec.height = 256;
  spec.x_max = spec.y_max = 1 / std::sqrt(10.0);
  spec.cfg.max_depth = 12;
  const auto s = CoefficientSet::span(10);
  const double two[] = {2};
  const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
  const Raster a1 = render(s, spec, 1);
  const Raster an = render(s, spec, static_cast<int>(hw));
  const Raster b = render(s.without_pm(two), spec, 0);
  const int full = count_spikes(a1, 10);
  const int minus_two = count_spikes(b, 10);
  const bool identical = a1.codes == an.codes && a1.lead == an.lead;
  const double t = seconds_since(t0);
  std::ostringstream os;
  os << "span10=" << full << " minus +-2=" << minus_two << " threads 1 vs " << hw
     << (identical ? " identical" : " DIFFER") << " (" << t << " s)";
  return {full == 8 && minus_two == 7 && identical && t < 300, os.str()};
}

Outcome product() {
  const auto t0 = Clock::now();
  const ProductReport a = verify_product_inequality(ints({-1, 1}), 8);
  const ProductReport b = verify_product_inequality(CoefficientSet::span(2), 6);
  const double t = seconds_since(t0);
  std::ostringstream os;
  os << "{+-1} deg<=8: " << a.polynomials << " polys, " << a.violations << " violations, max " << a.max_product
     << "; {0,+-1,+-2} deg<=6: " << b.polynomials << " polys, " << b.violations << " violations, max " << b.max_product
     << " (" << t << " s)";
  return {a.violations == 0 && b.violations == 0 && a.max_product <= 1 + 1e-7 && b.max_product <= 2 + 1e-7 && t < 30,
          os.str()};
}

Outcome depth_bounds() {
  const auto t0 = Clock::now();
  OracleConfig cfg;
  cfg.budget = 100'000'000;
  const MinModulusReport a = min_modulus_nonreal(ints({-1, 1}), 10, FirstCoeff::AnyNonzero, cfg);
  // Roots with |p_0| >= 2 have modulus above 1/(sqrt(M/2) + 1), so p_0 = 1 is
  // enough once its minimum falls below that.
  const MinModulusReport b = min_modulus_nonreal(CoefficientSet::span(4), 8, FirstCoeff::One, cfg);
  const double other_p0_floor = 1 / (std::sqrt(2.0) + 1);
  const bool a_ok = a.modulus > 0.5 && a.modulus <= 1 / std::sqrt(2.0) + 0.05;
  const bool b_ok = b.modulus > 1.0 / 3 && b.modulus <= 1 / std::sqrt(8.0) + 0.05 && b.modulus < other_p0_floor;
  std::ostringstream os;
  os.precision(10);
  os << "{+-1} deg<=10 min " << a.modulus << " in (0.5, " << 1 / std::sqrt(2.0) + 0.05 << "]; {0,+-1..+-4} deg<=8 min "
     << b.modulus << " in (1/3, " << 1 / std::sqrt(8.0) + 0.05 << "] (" << seconds_since(t0) << " s)";
  return {a_ok && b_ok, os.str()};
}

Outcome real_strip() {
  const auto t0 = Clock::now();
  int failures = 0, runs = 0;
  for (const auto& s : {CoefficientSet::span(1), ints({-3, -1, 0, 1, 3})}) {
    const double lo = 1 / (s.max_abs() + 1);
    for (int i = 0; i < 100; ++i) {
      const double x = lo + (0.99 - lo) * i / 99.0;
      ++runs;
      try {
        const Decision d = witness_real_interval(s, x, 10000);
        if (d.verdict != Verdict::In || d.witness->max_abs_q > 1.0) ++failures;
      } catch (const Error&) {
        ++failures;
      }
    }
  }
  const double t = seconds_since(t0);
  std::ostringstream os;
  os << runs << " points, " << failures << " failures (" << t << " s)";
  return {failures == 0 && t < 5, os.str()};
}

Outcome annulus() {
  const auto t0 = Clock::now();
  const auto s = CoefficientSet::span(5);
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> mod(1 / std::sqrt(5.0), 0.99);
  std::uniform_real_distribution<double> ang(0.0, Candidate::kPi / 2);
  int failures = 0, runs = 0;
  while (runs < 200) {
    const double theta = ang(rng);
    if (theta <= 0.0) continue;
    ++runs;
    const Decision d = witness_bounded_greedy(s, Candidate::polar(1 / mod(rng), theta), 10000, GreedyTarget::UnitInterval);
    if (d.verdict != Verdict::In) ++failures;
  }
  std::ostringstream os;
  os << runs << " points, " << failures << " failures (" << seconds_since(t0) << " s)";
  return {failures == 0, os.str()};
}

bool same(const std::vector<double>& a, std::initializer_list<double> b) { return a == std::vector<double>(b); }

Outcome disconnection() {
  SearchConfig cfg;
  const Gap3Report r = gap3_disconnection_candidate(ints({-4, -1, 0, 1, 4}), cfg);
  const bool witnesses = same(r.lower.witness.preperiod, {-1}) && same(r.lower.witness.period, {4}) &&
                         same(r.upper.witness.preperiod, {1, -4}) && same(r.upper.witness.period, {0});
  std::ostringstream os;
  os.precision(10);
  os << "x=" << r.x << " " << to_string(r.decision.verdict) << " at depth " << r.decision.depth << "; 1/5 "
     << (r.lower.replay.bounded ? "bounded" : "UNBOUNDED") << ", 1/4 " << (r.upper.replay.bounded ? "bounded" : "UNBOUNDED");
  return {r.decision.verdict == Verdict::Out && r.decision.depth <= 3 && r.lower.x == 0.2 && r.upper.x == 0.25 &&
              r.lower.replay.bounded && r.upper.replay.bounded && witnesses,
          os.str()};
}

Outcome quasirigidity() {
  SearchConfig cfg;
  cfg.slack = 1e-6;
  const QuasiRigidityReport in = quasirigidity_probe(CoefficientSet::span(10), 5, cfg);
  SearchConfig shallow = cfg;
  shallow.max_depth = 3;
  const QuasiRigidityReport out = quasirigidity_probe(ints({-10, -1, 0, 1, 10}), 5, shallow);
  const bool zero_tail = in.witness && same(in.witness->preperiod, {1, -10, -5}) &&
                         (in.witness->period.empty() || same(in.witness->period, {0}));
  std::ostringstream os;
  os << "span10 k=5: " << to_string(in.verdict) << (zero_tail ? " with q2=0 witness" : " WITHOUT q2=0 witness")
     << "; {0,+-1,+-10} k=5: " << to_string(out.verdict) << " at depth " << out.search.depth;
  return {in.verdict == Verdict::In && in.replay && in.replay->bounded && zero_tail && out.verdict == Verdict::Out &&
              out.search.depth <= 3,
          os.str()};
}

Outcome soundness() {
  const auto t0 = Clock::now();
  SearchConfig cfg;
  OracleConfig ocfg;
  ocfg.budget = 100'000'000;
  std::ostringstream os;
  long long bad = 0;
  for (const auto& s : {ints({-1, 1}), ints({-4, -1, 0, 1, 4}), CoefficientSet::span(3)}) {
    const CrossCheckReport r = cross_check_decide(s, 8, 0, cfg, ocfg);
    bad += static_cast<long long>(r.contradictions.size());
    os << "[M=" << s.max_abs() << " |S|=" << s.size() << ": " << r.polynomials_checked << " polys, " << r.roots_checked
       << " roots, " << r.contradictions.size() << " Out] ";
  }
  os << "(" << seconds_since(t0) << " s)";
  return {bad == 0, os.str()};
}

Outcome connectedness() {
  const auto a = classify_connectedness(ints({-4, -1, 0, 1, 4}));
  const auto b = classify_connectedness(CoefficientSet::span(40));
  const auto c = classify_connectedness(ints({-3, -1, 0, 1, 3}));
  std::ostringstream os;
  os << "{0,+-1,+-4} " << to_string(a.sigma) << "; span40 " << to_string(b.sigma) << "; {0,+-1,+-3} "
     << to_string(c.sigma) << " (sigma^1 " << to_string(c.sigma_one) << ")";
  return {a.sigma == Connectedness::Disconnected && b.sigma == Connectedness::ConnectedLC &&
              c.sigma == Connectedness::Unknown && c.sigma_one == Connectedness::ConnectedLC,
          os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"rigidity at M=10", rigidity},
      {"spike count", spikes},
      {"product inequality", product},
      {"depth bounds vs oracle", depth_bounds},
      {"real-strip witnesses", real_strip},
      {"annulus witnesses", annulus},
      {"gap-3 disconnection", disconnection},
      {"quasi-rigidity", quasirigidity},
      {"oracle/engine soundness", soundness},
      {"connectedness classification", connectedness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
