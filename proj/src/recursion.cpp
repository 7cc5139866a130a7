#include "sigma/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sigma/error.hpp"

namespace sigma {

Candidate Candidate::polar(double r, double theta) {
  if (!(r > 1.0) || !std::isfinite(r))
    throw Error(ErrorKind::PreconditionViolated, "candidate needs r > 1 (point strictly inside the unit disc)");
  if (!(theta >= 0.0 && theta <= kPi))
    throw Error(ErrorKind::PreconditionViolated, "candidate angle must lie in [0, pi]");
  return Candidate(r, theta);
}

Candidate Candidate::from_point(complex z) {
  const double mod = std::abs(z);
  if (!(mod > 0.0 && mod < 1.0))
    throw Error(ErrorKind::PreconditionViolated, "point must satisfy 0 < |z| < 1");
  double theta = std::fabs(std::arg(z));
  if (z.imag() == 0.0) theta = z.real() > 0.0 ? 0.0 : kPi;
  return polar(1.0 / mod, theta);
}

Candidate Candidate::from_quadratic(long long b, long long c) {
  if (c < 2 || b * b - 4 * c >= 0)
    throw Error(ErrorKind::PreconditionViolated,
                "quadratic 1 + bz + cz^2 needs c >= 2 and b^2 - 4c < 0 (got b=" + std::to_string(b) +
                    ", c=" + std::to_string(c) + ")");
  const double r = std::sqrt(static_cast<double>(c));
  double cos_theta = -static_cast<double>(b) / (2.0 * r);
  Candidate cand(r, std::acos(std::clamp(cos_theta, -1.0, 1.0)));
  cand.quad_ = QuadAnnihilator{b, c};
  return cand;
}

double Candidate::two_r_cos() const {
  if (quad_) return -static_cast<double>(quad_->b);
  if (theta_ == kPi / 2) return 0.0;
  return 2.0 * r_ * std::cos(theta_);
}

double Candidate::r_sq() const {
  if (quad_) return static_cast<double>(quad_->c);
  return r_ * r_;
}

State1 step1(State1 state, double p, complex r) { return {p + r * state.q}; }

State2 step2(State2 state, double p, double two_r_cos, double r_sq) {
  return {state.q_curr, p + two_r_cos * state.q_curr - r_sq * state.q_prev};
}

double escape_threshold_1(const CoefficientSet& s, const Candidate& cand) { return s.max_abs() / (cand.r() - 1.0); }

double escape_threshold_2(const CoefficientSet& s, const Candidate& cand) {
  if (cand.is_real()) throw Error(ErrorKind::PreconditionViolated, "2-step threshold needs a non-real candidate");
  const double e = cand.r() - 1.0;
  return s.max_abs() / (e * e);
}

double escape_threshold_angled(const CoefficientSet& s, const Candidate& cand) {
  const double theta = cand.theta();
  if (!(theta > 0.0 && theta <= Candidate::kPi / 2 + 1e-15))
    throw Error(ErrorKind::PreconditionViolated, "angled threshold needs theta in (0, pi/2]");
  const double denom = cand.r_sq() - cand.two_r_cos() - 1.0;
  if (std::fabs(denom) < 1e-12)
    throw Error(ErrorKind::DegenerateDenominator, "r^2 - 2r cos(theta) - 1 vanishes");
  return s.max_abs() / denom;
}

bool polynomial_root_check(std::span<const double> coeffs, const Candidate& cand, double tol) {
  if (coeffs.empty() || coeffs[0] == 0.0)
    throw Error(ErrorKind::PreconditionViolated, "polynomial needs a nonzero constant term");
  const complex mult = cand.inverse();
  State1 st{coeffs[0]};
  double scale = std::max(1.0, std::abs(st.q));
  for (std::size_t j = 1; j < coeffs.size(); ++j) {
    st = step1(st, coeffs[j], mult);
    scale = std::max(scale, std::abs(st.q));
  }
  return std::abs(st.q) <= tol * scale;
}

}  // namespace sigma
