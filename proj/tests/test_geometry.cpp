#include <gtest/gtest.h>

#include <cmath>

#include "sigma/error.hpp"
#include "sigma/geometry.hpp"
#include "sigma/polyroots.hpp"

using namespace sigma;

namespace {

CoefficientSet ints(std::vector<long long> v) { return CoefficientSet::from_integers(v); }

}  // namespace

TEST(LambdaK, RootOfTheProbeQuadratic) {
  for (int M : {1, 4, 10, 25})
    for (int k = 2; k <= max_spike_k(M); ++k) {
      const complex z = lambda_k(M, k).lambda();
      const double p[] = {1.0, -(k + 1.0), double(M + k)};
      EXPECT_LT(std::abs(evaluate(p, z)), 1e-13);
      EXPECT_NEAR(std::abs(z), 1 / std::sqrt(double(M + k)), 1e-15);
      EXPECT_GT(z.imag(), 0.0);
      EXPECT_GT(z.real(), 0.0);
    }
}

TEST(LambdaK, Values) {
  const complex z2 = lambda_k(10, 2).lambda();
  EXPECT_NEAR(z2.real(), 3.0 / 24, 1e-15);
  EXPECT_NEAR(z2.imag(), std::sqrt(39.0) / 24, 1e-15);
  EXPECT_NEAR(std::abs(lambda_k(10, 7).lambda()), 0.2425, 1e-4);
  EXPECT_NEAR(std::abs(lambda_k(4, 4).lambda()), 1 / std::sqrt(8.0), 1e-15);
  EXPECT_THROW(lambda_k(10, 8), Error);
  EXPECT_THROW(lambda_k(10, 1), Error);
}

TEST(SigmaK, SolvesDefiningEquation) {
  EXPECT_NEAR(sigma_k(10, 2), 0.196152, 1e-6);
  EXPECT_NEAR(sigma_k(4, 1), (std::sqrt(20.0) - 4) / 2, 1e-15);
  EXPECT_NEAR(sigma_k(1, 1), (std::sqrt(5.0) - 1) / 2, 1e-15);
  for (int M = 1; M <= 30; ++M)
    for (int k = 1; k <= M; ++k) {
      const double s = sigma_k(M, k);
      EXPECT_GT(s, 0.0);
      EXPECT_LT(s, 1.0);
      EXPECT_NEAR((M + s) * s, k, 1e-12 * k);
    }
}

TEST(MaxSpikeK, BandCounts) {
  EXPECT_EQ(spike_bands(10).size(), 8u);
  EXPECT_EQ(spike_bands(1).size(), 3u);
  EXPECT_EQ(spike_bands(4).size(), 5u);
  for (int M = 1; M <= 200; ++M) {
    const int k = max_spike_k(M);
    EXPECT_LT((k - 1.0) * (k - 1.0), 4.0 * M);
    EXPECT_GE(k * double(k), 4.0 * M);
  }
}

TEST(DepthReport, SpanTen) {
  const DepthReport r = depth_report(CoefficientSet::span(10));
  EXPECT_DOUBLE_EQ(r.outer_annulus_low, 1.0 / 11);
  EXPECT_NEAR(r.rho_out_low, 1 / (std::sqrt(10.0) + 1), 1e-15);
  EXPECT_NEAR(r.rho_out_high, 1 / std::sqrt(17.0), 1e-15);
  ASSERT_TRUE(r.rho_inn_high);
  EXPECT_NEAR(*r.rho_inn_high, 1 / std::sqrt(10.0), 1e-15);
}

TEST(DepthReport, PlusMinusOne) {
  const double half_pi[] = {Candidate::kPi / 2};
  const DepthReport r = depth_report(ints({-1, 1}), half_pi);
  EXPECT_DOUBLE_EQ(r.outer_annulus_low, 0.5);
  EXPECT_DOUBLE_EQ(r.rho_out_low, 0.5);
  EXPECT_NEAR(r.rho_out_high, 1 / std::sqrt(2.0), 1e-15);
  ASSERT_EQ(r.rho_theta.size(), 1u);
  EXPECT_NEAR(r.rho_theta[0].second, 1 / std::sqrt(2.0), 1e-15);
}

TEST(DepthReport, SkippedTwo) {
  const DepthReport r = depth_report(ints({-3, -1, 0, 1, 3}));
  EXPECT_EQ(r.rho_out_k, 3.0);
  EXPECT_NEAR(r.rho_out_high, 1 / std::sqrt(6.0), 1e-15);
}

TEST(DepthReport, RhoThetaOrdering) {
  // Angled bounds lie in (0, 1) and grow with θ.
  for (int M : {1, 3, 10, 40}) {
    const DepthReport r = depth_report(CoefficientSet::span(M));
    for (const auto& entry : r.rho_theta) {
      EXPECT_GT(entry.second, 0.0);
      EXPECT_LT(entry.second, 1.0);
    }
    for (std::size_t i = 1; i < r.rho_theta.size(); ++i) EXPECT_GE(r.rho_theta[i].second, r.rho_theta[i - 1].second);
  }
}

TEST(SpikeBand, ContainsItsLambda) {
  for (const auto& band : spike_bands(10)) {
    if (band.k < 2) continue;
    EXPECT_TRUE(band.contains(lambda_k(10, band.k).lambda())) << band.k;
  }
}

TEST(Rigidity, SpanTen) {
  const RigidityReport r = rigidity_probe(CoefficientSet::span(10));
  ASSERT_EQ(r.entries.size(), 6u);
  EXPECT_EQ(r.violations, 0);
  for (const auto& e : r.entries) EXPECT_EQ(e.decision.verdict, Verdict::In);
}

TEST(Rigidity, SkippedTwo) {
  const RigidityReport r = rigidity_probe(ints({-3, -1, 0, 1, 3}));
  ASSERT_GE(r.entries.size(), 2u);
  EXPECT_EQ(r.entries[0].k, 2);
  EXPECT_EQ(r.entries[0].decision.verdict, Verdict::Out);
  EXPECT_EQ(r.entries[1].decision.verdict, Verdict::In);
  EXPECT_EQ(r.violations, 0);
}

TEST(Rigidity, PlusMinusOneHasOnlyAbsentProbe) {
  const RigidityReport r = rigidity_probe(ints({-1, 1}));
  for (const auto& e : r.entries) {
    EXPECT_FALSE(e.in_set);
    EXPECT_EQ(e.decision.verdict, Verdict::Out);
  }
}

TEST(QuasiRigidity, InWithZeroTail) {
  SearchConfig cfg;
  const QuasiRigidityReport r = quasirigidity_probe(CoefficientSet::span(10), 5, cfg);
  EXPECT_TRUE(r.expected_in);
  EXPECT_EQ(r.verdict, Verdict::In);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->preperiod, (std::vector<double>{1, -10, -5}));
  EXPECT_TRUE(r.replay->bounded);
  EXPECT_TRUE(r.agrees);
}

TEST(QuasiRigidity, OutWhenNeighboursMissing) {
  SearchConfig cfg;
  cfg.max_depth = 3;
  const QuasiRigidityReport r = quasirigidity_probe(ints({-10, -1, 0, 1, 10}), 5, cfg);
  EXPECT_FALSE(r.expected_in);
  EXPECT_EQ(r.verdict, Verdict::Out);
  EXPECT_LE(r.search.depth, 3);
  EXPECT_TRUE(r.agrees);
}

TEST(QuasiRigidity, NeighbourWitnesses) {
  SearchConfig cfg;
  const QuasiRigidityReport lower = quasirigidity_probe(ints({-10, -4, -1, 0, 1, 4, 10}), 5, cfg);
  EXPECT_EQ(lower.verdict, Verdict::In);
  EXPECT_TRUE(lower.agrees);
  const QuasiRigidityReport upper = quasirigidity_probe(ints({-10, -6, -1, 0, 1, 6, 10}), 5, cfg);
  EXPECT_EQ(upper.verdict, Verdict::In);
  EXPECT_TRUE(upper.agrees);
}

TEST(Gap3, ZeroOneFour) {
  SearchConfig cfg;
  const Gap3Report r = gap3_disconnection_candidate(ints({-4, -1, 0, 1, 4}), cfg);
  EXPECT_NEAR(r.r, (std::sqrt(26.0) - 4) / 2, 1e-12);
  EXPECT_NEAR(r.x, 0.219804, 1e-6);
  EXPECT_EQ(r.decision.verdict, Verdict::Out);
  EXPECT_LE(r.decision.depth, 3);
  EXPECT_DOUBLE_EQ(r.lower.x, 0.2);
  EXPECT_DOUBLE_EQ(r.upper.x, 0.25);
  EXPECT_TRUE(r.lower.replay.bounded);
  EXPECT_TRUE(r.upper.replay.bounded);
  EXPECT_TRUE(r.pass);
}

TEST(Gap3, ZeroOneFive) {
  SearchConfig cfg;
  const Gap3Report r = gap3_disconnection_candidate(ints({-5, -1, 0, 1, 5}), cfg);
  EXPECT_NEAR(r.r, (-5 + std::sqrt(35.0)) / 2, 1e-12);
  EXPECT_NEAR(r.x, 0.18322, 1e-5);
  EXPECT_EQ(r.decision.verdict, Verdict::Out);
  EXPECT_TRUE(r.pass);
}

TEST(Gap3, NeedsAGap) {
  SearchConfig cfg;
  EXPECT_THROW(gap3_disconnection_candidate(CoefficientSet::span(3), cfg), Error);
}
