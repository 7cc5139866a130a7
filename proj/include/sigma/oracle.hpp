#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "sigma/coeffset.hpp"
#include "sigma/decide.hpp"
#include "sigma/recursion.hpp"

namespace sigma {

struct OracleConfig {
  /// Maximum number of polynomials a single enumeration may visit.
  long long budget = 10'000'000;
  int threads = 0;
  /// Residual tolerance: |P(z)| <= tau_root * (deg + 1) * max|p_j|.
  double tau_root = 1e-9;
  /// Disc membership cutoff |z| < 1 - disc_margin.
  double disc_margin = 1e-9;
};

struct OracleRoot {
  complex z;
  std::vector<double> poly;
  double residual = 0.0;
};

struct OracleRootSet {
  std::vector<OracleRoot> roots;
  int degree_bound = 0;
  FirstCoeff mode = FirstCoeff::AnyNonzero;
  long long polynomials = 0;
  long long failures = 0;
};

/// Polynomials of exact degree 1..n with coefficients in S and p_0 per
/// `mode`. For symmetric S and AnyNonzero only p_0 > 0 is included, since -P
/// has the same roots. With `reflect` (symmetric S only) one member of each
/// pair P(z), P(-z) is skipped as well. Work is split into chunks that can be
/// visited independently.
class PolynomialFamily {
 public:
  PolynomialFamily(const CoefficientSet& s, int n, FirstCoeff mode, bool reflect = false);

  int degree_bound() const { return n_; }
  /// Polynomial count before any reflection skipping.
  long long size() const { return total_; }
  long long degree_size(int degree) const;
  std::size_t chunk_count() const { return chunks_.size(); }

  /// Coefficient vector number `index` among those of exact degree `degree`.
  std::vector<double> at(int degree, long long index) const;
  /// Calls fn(poly) for each polynomial of the chunk in index order.
  /// True when reflection is on and `poly` is the mirror P(-z) of a kept member.
  bool skipped(std::span<const double> poly) const;
  void for_each_in_chunk(std::size_t chunk, const std::function<void(std::span<const double>)>& fn) const;

 private:
  struct Chunk {
    int degree;
    long long begin;
    long long count;
  };

  std::vector<double> elems_;
  std::vector<double> nonzero_;
  std::vector<double> first_;
  int n_;
  bool reflect_;
  long long total_ = 0;
  std::vector<Chunk> chunks_;
};

struct DiscRoots {
  std::vector<complex> z;
  std::vector<double> residual;
  bool failed = false;
};

/// Validated roots of `poly` with |z| < 1 - disc_margin. Roots failing the
/// residual test are dropped and flag `failed`.
DiscRoots disc_roots(std::span<const double> poly, const OracleConfig& cfg);

/// Disc roots of all polynomials of the family, sorted canonically.
OracleRootSet enumerate_roots(const CoefficientSet& s, int n, FirstCoeff mode, const OracleConfig& cfg = {});

struct ProductReport {
  long long polynomials = 0;
  long long violations = 0;
  double max_product = 0.0;
  std::vector<double> max_poly;
  std::vector<std::vector<double>> violating_polys;
  double tau_ineq = 1e-7;
};

/// Checks prod (1/|λ_j| - 1) <= max_j |p_j| for every polynomial with p_0 = 1.
/// The product is taken over the subset of disc roots that maximizes it.
ProductReport verify_product_inequality(const CoefficientSet& s, int n, const OracleConfig& cfg = {},
                                        double tau_ineq = 1e-7);

struct MinModulusReport {
  double modulus = 0.0;
  complex z;
  std::vector<double> poly;
  long long polynomials = 0;
};

/// Smallest |z| among non-real disc roots (|Im z| > 1e-8).
MinModulusReport min_modulus_nonreal(const CoefficientSet& s, int n, FirstCoeff mode = FirstCoeff::AnyNonzero,
                                     const OracleConfig& cfg = {});

struct Contradiction {
  complex z;
  std::vector<double> poly;
  Decision decision;
};

struct CrossCheckReport {
  long long polynomials_checked = 0;
  long long roots_checked = 0;
  long long in_like = 0;
  long long unknown = 0;
  std::vector<Contradiction> contradictions;
};

/// Runs decide_point on the disc roots of `sample_size` polynomials spread
/// evenly over each degree (0 = every polynomial). Any Out is a contradiction.
CrossCheckReport cross_check_decide(const CoefficientSet& s, int n, long long sample_size, const SearchConfig& cfg,
                                    const OracleConfig& ocfg = {});

/// Candidate for a computed root; |Im z| <= 1e-8 is snapped to the real axis.
Candidate candidate_for_root(complex z);

/// CSV columns re, im, modulus, degree, coeff_vector, residual.
void write_roots_csv(std::ostream& out, const OracleRootSet& set);

}  // namespace sigma
