#pragma once

#include <complex>
#include <optional>
#include <span>

#include "sigma/coeffset.hpp"

namespace sigma {

using complex = std::complex<double>;

/// λ is a root of 1 + b z + c z² with b² - 4c < 0.
struct QuadAnnihilator {
  long long b = 0;
  long long c = 0;
};

/// A point λ = (1/r) e^{iθ} of the open unit disc, r > 1, θ ∈ [0, π].
/// Points in the lower half-plane are represented by their conjugate, which
/// is harmless because every coefficient set here is real.
class Candidate {
 public:
  static Candidate polar(double r, double theta);
  static Candidate from_point(complex z);
  static Candidate from_quadratic(long long b, long long c);

  double r() const { return r_; }
  double theta() const { return theta_; }
  double modulus() const { return 1.0 / r_; }
  const std::optional<QuadAnnihilator>& quad() const { return quad_; }

  bool is_real() const { return theta_ == 0.0 || theta_ == kPi; }
  complex lambda() const { return std::polar(1.0 / r_, theta_); }
  /// 1/λ, the multiplier of the 1-step recursion.
  complex inverse() const { return std::polar(r_, -theta_); }
  /// Recurrence coefficients of the 2-step recursion; exact for quadratic
  /// candidates (-b and c).
  double two_r_cos() const;
  double r_sq() const;

  static constexpr double kPi = 3.14159265358979323846;

 private:
  Candidate(double r, double theta) : r_(r), theta_(theta) {}
  double r_;
  double theta_;
  std::optional<QuadAnnihilator> quad_;
};

struct State1 {
  complex q;
};

struct State2 {
  double q_prev = 0.0;
  double q_curr = 0.0;
};

/// q' = p + r q.
State1 step1(State1 state, double p, complex r);
inline double step1(double q, double p, double r) { return p + r * q; }

/// (q_j, q_{j+1}) -> (q_{j+1}, p + 2r cos θ q_{j+1} - r² q_j).
State2 step2(State2 state, double p, double two_r_cos, double r_sq);

/// M / (r - 1).
double escape_threshold_1(const CoefficientSet& s, const Candidate& cand);
/// M / (r - 1)²; the candidate must be non-real.
double escape_threshold_2(const CoefficientSet& s, const Candidate& cand);
/// M / (r² - 2r cos θ - 1) for θ ∈ (0, π/2].
double escape_threshold_angled(const CoefficientSet& s, const Candidate& cand);

/// Runs the 1-step recursion with multiplier 1/λ over all coefficients and
/// reports |q_n| <= tol * max(1, max_j |q_j|).
bool polynomial_root_check(std::span<const double> coeffs, const Candidate& cand, double tol = 1e-9);

}  // namespace sigma
