#include "sigma/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sigma/error.hpp"

namespace sigma {

int max_spike_k(int M) {
  if (M < 1) throw Error(ErrorKind::PreconditionViolated, "M must be >= 1");
  // The smallest k with k² >= 4M is the largest with (k - 1)² < 4M.
  int k = 0;
  while (static_cast<long long>(k) * k < 4LL * M) ++k;
  return k;
}

Candidate lambda_k(int M, int k) {
  if (M < 1) throw Error(ErrorKind::PreconditionViolated, "M must be >= 1");
  const long long km1 = k - 1;
  if (k <= 1 || km1 * km1 >= 4LL * M)
    throw Error(ErrorKind::PreconditionViolated, "lambda_k needs 1 < k < 2*sqrt(M) + 1");
  return Candidate::from_quadratic(-(static_cast<long long>(k) + 1), static_cast<long long>(M) + k);
}

double sigma_k(int M, int k) {
  if (M < 1 || k < 1 || k >= M + 1) throw Error(ErrorKind::PreconditionViolated, "sigma_k needs 1 <= k < M + 1");
  const double m = M;
  // Rationalized form of (√(M² + 4k) - M)/2, free of cancellation.
  return 2.0 * k / (std::sqrt(m * m + 4.0 * k) + m);
}

std::vector<double> default_theta_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 8; ++i) grid.push_back(Candidate::kPi * i / 16.0);
  return grid;
}

DepthReport depth_report(const CoefficientSet& s, std::span<const double> thetas) {
  if (!is_normalized(s) || !s.symmetric())
    throw Error(ErrorKind::PreconditionViolated, "depth_report needs a normalized symmetric set");
  DepthReport rep;
  const double M = s.max_abs();
  rep.M = M;
  rep.outer_annulus_low = 1.0 / (M / s.min_abs() + 1.0);
  rep.rho_out_low = 1.0 / (std::sqrt(M) + 1.0);
  const double limit = 2.0 * std::sqrt(M) + 1.0;
  double k = 0.0;
  for (double e : s.elements())
    if (e >= 1.0 - kSetTolerance && e < limit) k = std::max(k, e);
  rep.rho_out_k = k;
  rep.rho_out_high = 1.0 / std::sqrt(M + k);
  if (s.size() >= 2 && M > 1.0 && total_gap(s) <= 1.0 + kSetTolerance) rep.rho_inn_high = 1.0 / std::sqrt(M);
  std::vector<double> grid = thetas.empty() ? default_theta_grid() : std::vector<double>(thetas.begin(), thetas.end());
  for (double theta : grid) {
    if (!(theta > 0.0 && theta <= Candidate::kPi / 2 + 1e-15))
      throw Error(ErrorKind::PreconditionViolated, "rho_theta angles must lie in (0, pi/2]");
    const double c = std::max(0.0, std::cos(theta));
    const double r = c + std::sqrt(c + M + 1.0);
    if (r * r - 2.0 * r * c > 1.0) rep.rho_theta.emplace_back(theta, 1.0 / r);
  }
  return rep;
}

double SpikeBand::e2(double r) const {
  const double d = r - 1.0;
  return M / (d * d);
}

double SpikeBand::cos_low(double r) const { return std::max(-1.0, (k - e2(r)) / (2.0 * r)); }
double SpikeBand::cos_high(double r) const { return std::min(1.0, (k + e2(r)) / (2.0 * r)); }

bool SpikeBand::contains(complex z) const {
  const double mod = std::abs(z);
  if (mod == 0.0) return false;
  const double r = 1.0 / mod;
  if (r < r_low || r > r_high) return false;
  const double c = z.real() / mod;
  return c >= cos_low(r) && c <= cos_high(r);
}

std::vector<SpikeBand> spike_bands(int M) {
  if (M < 1) throw Error(ErrorKind::PreconditionViolated, "M must be >= 1");
  // Band k is complete when its upper edge (k + E₂)/(2r) drops below 1
  // somewhere on the r-range; the edge is smallest at r = √M + 1 where
  // E₂ = 1, giving k < 2√M + 1.
  std::vector<SpikeBand> bands;
  const double rl = std::sqrt(static_cast<double>(M));
  for (int k = 0; k <= max_spike_k(M); ++k) bands.push_back({k, M, rl, rl + 1.0});
  return bands;
}

RigidityReport rigidity_probe(const CoefficientSet& s) {
  if (!s.exact_integer() || !is_normalized(s) || !s.symmetric())
    throw Error(ErrorKind::PreconditionViolated, "rigidity probe needs a normalized symmetric integer set");
  RigidityReport rep;
  rep.M = static_cast<int>(s.max_abs());
  for (int k = 2; k <= max_spike_k(rep.M); ++k) {
    RigidityEntry e;
    e.k = k;
    e.in_set = s.contains(k);
    e.decision = decide_exact_quadratic(s, -(k + 1), rep.M + k, FirstCoeff::AnyNonzero);
    e.agrees = (e.decision.verdict == Verdict::In) == e.in_set;
    if (!e.agrees) ++rep.violations;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

QuasiRigidityReport quasirigidity_probe(const CoefficientSet& s, int k, const SearchConfig& cfg) {
  if (!s.exact_integer() || !is_normalized(s) || !s.symmetric())
    throw Error(ErrorKind::PreconditionViolated, "quasi-rigidity probe needs a normalized symmetric integer set");
  const int M = static_cast<int>(s.max_abs());
  if (!(1 < k && k < M)) throw Error(ErrorKind::PreconditionViolated, "quasi-rigidity probe needs 1 < k < M");

  QuasiRigidityReport rep;
  rep.k = k;
  rep.sigma = sigma_k(M, k);
  rep.x = 1.0 / (M + rep.sigma);
  const double m = M, kk = k;

  // q_0 = 1, p_1 = -M gives q_1 = σ and then q_2 = p_2 + k.
  Witness w;
  if (s.contains(kk)) {
    w.rule = "q2-zero";
    w.preperiod = {1.0, -m, -kk};
    if (!s.contains_zero()) w.period = {-1.0, m, kk, 1.0, -m, -kk};
  } else if (s.contains(kk - 1)) {
    w.rule = "q2-one";
    w.preperiod = {1.0};
    w.period = {-m, -(kk - 1)};
  } else if (s.contains(kk + 1)) {
    w.rule = "q2-minus-one";
    w.preperiod = {1.0};
    w.period = {-m, -(kk + 1), m, kk + 1};
  }
  rep.expected_in = !w.rule.empty();

  SearchConfig local = cfg;
  local.variant = Variant::OneStep;
  local.exact = false;
  rep.search = decide_point(s, Candidate::polar(M + rep.sigma, 0.0), local);

  if (rep.expected_in) {
    // 1/x = M + σ is the larger root of t² - M t - k.
    rep.replay = replay_witness_quadratic(s, M, k, w, 10000);
    w.max_abs_q = rep.replay->max_abs_q;
    rep.witness = w;
    rep.verdict = rep.replay->coefficients_valid && rep.replay->bounded ? Verdict::In : Verdict::Unknown;
    rep.agrees = rep.verdict == Verdict::In && rep.search.verdict != Verdict::Out;
  } else {
    rep.verdict = rep.search.verdict;
    rep.agrees = rep.search.verdict == Verdict::Out;
  }
  return rep;
}

Gap3Report gap3_disconnection_candidate(const CoefficientSet& s, const SearchConfig& cfg) {
  if (!is_normalized(s) || !s.symmetric())
    throw Error(ErrorKind::PreconditionViolated, "gap3 needs a normalized symmetric set");
  if (s.size() < 2 || total_gap(s) < 3.0 - kSetTolerance)
    throw Error(ErrorKind::PreconditionViolated, "gap3 needs total gap >= 3");
  const double M = s.max_abs();
  if (M < 4.0 - kSetTolerance) throw Error(ErrorKind::PreconditionViolated, "gap3 needs M >= 4");

  Gap3Report rep;
  auto e = s.elements();
  bool found = false;
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    if (e[i] > 0.0 && e[i + 1] - e[i] >= 3.0 - kSetTolerance) {
      rep.s_low = e[i];
      rep.s_high = e[i + 1];
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorKind::PreconditionViolated, "no consecutive positive elements at distance >= 3");

  // Positive root of r² + M r - (s + 3/2), written without cancellation.
  const double target = rep.s_low + 1.5;
  rep.r = 2.0 * target / (M + std::sqrt(M * M + 4.0 * target));
  rep.x = 1.0 / (M + rep.r);
  SearchConfig local = cfg;
  local.variant = Variant::OneStep;
  local.exact = false;
  rep.decision = decide_point(s, Candidate::polar(M + rep.r, 0.0), local);

  rep.lower.x = 1.0 / (M + 1.0);
  rep.lower.witness.rule = "series -1 + Mz + Mz^2 + ...";
  rep.lower.witness.preperiod = {-1.0};
  rep.lower.witness.period = {M};
  rep.lower.replay = replay_witness(s, Candidate::polar(M + 1.0, 0.0), rep.lower.witness, Variant::OneStep, 10000);

  rep.upper.x = 1.0 / M;
  rep.upper.witness.rule = "polynomial 1 - Mz";
  rep.upper.witness.preperiod = {1.0, -M};
  if (s.contains_zero()) {
    rep.upper.witness.period = {0.0};
  } else {
    rep.upper.witness.period = {-1.0, M, 1.0, -M};
  }
  rep.upper.replay = replay_witness(s, Candidate::polar(M, 0.0), rep.upper.witness, Variant::OneStep, 10000);

  auto ok = [](const ReplayResult& r) { return r.coefficients_valid && r.bounded; };
  rep.pass = rep.decision.verdict == Verdict::Out && ok(rep.lower.replay) && ok(rep.upper.replay) &&
             rep.lower.x < rep.x && rep.x < rep.upper.x;
  return rep;
}

}  // namespace sigma
