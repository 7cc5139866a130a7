#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sigma/coeffset.hpp"
#include "sigma/decide.hpp"
#include "sigma/recursion.hpp"

namespace sigma {

/// First-quadrant root of 1 - (k+1)z + (M+k)z², modulus 1/√(M+k).
Candidate lambda_k(int M, int k);

/// The root in (0, 1) of (M + σ)σ = k.
double sigma_k(int M, int k);

/// Largest integer k with (k - 1)² < 4M, i.e. k < 2√M + 1.
int max_spike_k(int M);

struct DepthReport {
  double M = 0.0;
  double outer_annulus_low = 0.0;
  /// Exclusive lower bound.
  double rho_out_low = 0.0;
  double rho_out_high = 0.0;
  /// The k in 1/√(M+k).
  double rho_out_k = 0.0;
  std::optional<double> rho_inn_high;
  /// (θ, lower bound on ρ_θ).
  std::vector<std::pair<double, double>> rho_theta;
};

/// θ = π/16, 2π/16, ..., π/2.
std::vector<double> default_theta_grid();

DepthReport depth_report(const CoefficientSet& s, std::span<const double> thetas = {});

/// Points λ = (1/r) e^{iθ} with r ∈ [√M, √M+1] and
/// (k - E₂)/(2r) <= cos θ <= (k + E₂)/(2r), E₂ = M/(r-1)²: the points whose
/// 2-step recursion survives p_0 = 1, p_1 = -k.
struct SpikeBand {
  int k = 0;
  int M = 0;
  double r_low = 0.0;
  double r_high = 0.0;

  double e2(double r) const;
  double cos_low(double r) const;
  double cos_high(double r) const;
  bool contains(complex z) const;
};

std::vector<SpikeBand> spike_bands(int M);

struct RigidityEntry {
  int k = 0;
  bool in_set = false;
  Decision decision;
  bool agrees = false;
};

struct RigidityReport {
  int M = 0;
  std::vector<RigidityEntry> entries;
  int violations = 0;
};

RigidityReport rigidity_probe(const CoefficientSet& s);

struct QuasiRigidityReport {
  int k = 0;
  double sigma = 0.0;
  double x = 0.0;
  bool expected_in = false;
  /// Search verdict at the probe point.
  Decision search;
  /// Explicit witness when one of k, k±1 is in S, replayed exactly.
  std::optional<Witness> witness;
  std::optional<ReplayResult> replay;
  Verdict verdict = Verdict::Unknown;
  bool agrees = false;
};

QuasiRigidityReport quasirigidity_probe(const CoefficientSet& s, int k, const SearchConfig& cfg);

struct BracketPoint {
  double x = 0.0;
  Witness witness;
  ReplayResult replay;
};

struct Gap3Report {
  double s_low = 0.0;
  double s_high = 0.0;
  double r = 0.0;
  double x = 0.0;
  Decision decision;
  BracketPoint lower;
  BracketPoint upper;
  bool pass = false;
};

/// Probe point 1/(M+r) with (M+r)r = s + 3/2 inside the first gap of width
/// >= 3, plus the In points 1/(M+1) and 1/M around it.
Gap3Report gap3_disconnection_candidate(const CoefficientSet& s, const SearchConfig& cfg);

}  // namespace sigma
