#include "sigma/polyroots.hpp"

#include <algorithm>
#include <cmath>

#include "sigma/error.hpp"

namespace sigma {

namespace {

// Value and derivative of P at z by Horner's rule.
void horner(std::span<const double> c, complex z, complex& value, complex& deriv) {
  value = c.back();
  deriv = 0.0;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    deriv = deriv * z + value;
    value = value * z + c[i];
  }
}

}  // namespace

complex evaluate(std::span<const double> coeffs, complex z) {
  complex v = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) v = v * z + coeffs[i];
  return v;
}

std::vector<complex> polynomial_roots(std::span<const double> coeffs) {
  if (coeffs.size() < 2 || coeffs.back() == 0.0)
    throw Error(ErrorKind::PreconditionViolated, "polynomial must have degree >= 1 and nonzero leading coefficient");
  const std::size_t n = coeffs.size() - 1;
  if (n == 1) return {complex(-coeffs[0] / coeffs[1], 0.0)};

  // Zero roots factor out exactly.
  std::size_t zeros = 0;
  while (coeffs[zeros] == 0.0) ++zeros;
  std::span<const double> c = coeffs.subspan(zeros);
  std::vector<complex> roots(zeros, complex(0.0, 0.0));
  const std::size_t m = c.size() - 1;
  if (m == 0) return roots;
  if (m == 1) {
    roots.emplace_back(-c[0] / c[1], 0.0);
    return roots;
  }

  // Initial guesses on the circle of the geometric-mean root modulus.
  const double radius = std::pow(std::fabs(c[0] / c[m]), 1.0 / static_cast<double>(m));
  std::vector<complex> z(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double angle = 2.0 * Candidate::kPi * static_cast<double>(k) / static_cast<double>(m) + 0.4;
    z[k] = std::polar(radius, angle);
  }

  std::vector<bool> done(m, false);
  constexpr int kMaxIter = 500;
  bool converged = false;
  for (int iter = 0; iter < kMaxIter && !converged; ++iter) {
    converged = true;
    for (std::size_t k = 0; k < m; ++k) {
      if (done[k]) continue;
      complex value, deriv;
      horner(c, z[k], value, deriv);
      if (value == 0.0) {
        done[k] = true;
        continue;
      }
      const complex ratio = value / deriv;
      complex sum = 0.0;
      for (std::size_t j = 0; j < m; ++j)
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      const complex step = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z[k]))) done[k] = true;
      else converged = false;
    }
  }
  if (!converged) {
    // Clustered roots converge linearly; accept once the residual is tiny.
    double scale = 0.0;
    for (double v : c) scale = std::max(scale, std::fabs(v));
    for (const complex& zk : z) {
      if (std::abs(evaluate(c, zk)) > 1e-9 * scale * static_cast<double>(m + 1) * std::max(1.0, std::pow(std::abs(zk), m)))
        throw Error(ErrorKind::RootFindingFailure, "Aberth iteration did not converge");
    }
  }

  // Newton polish; a step is kept only when it lowers the residual.
  for (complex& zk : z) {
    for (int it = 0; it < 3; ++it) {
      complex value, deriv;
      horner(c, zk, value, deriv);
      if (deriv == 0.0) break;
      const complex candidate = zk - value / deriv;
      if (std::abs(evaluate(c, candidate)) < std::abs(value)) zk = candidate;
      else break;
    }
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

}  // namespace sigma
