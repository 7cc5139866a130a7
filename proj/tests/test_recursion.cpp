#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sigma/error.hpp"
#include "sigma/recursion.hpp"

using namespace sigma;

TEST(Step1, ConstantQAtOneHalf) {
  EXPECT_DOUBLE_EQ(step1(1.0, -1.0, 2.0), 1.0);
}

TEST(Step2, ConstantQOnTheInnerCircle) {
  const double M = 10, s = std::sqrt(M);
  const State2 st = step2({1.0, 1.0}, M, 2 * (s + 1), (s + 1) * (s + 1));
  EXPECT_NEAR(st.q_curr, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(st.q_prev, 1.0);
}

// With q_0 = 0 the 1-step state is q_n = λ^{1-n} (p_0 + ... + p_{n-1} λ^{n-1}),
// and the 2-step state equals -Im(q_n / λ) / (r sin θ).
TEST(Recursions, AgreeWithPartialSums) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 50; ++t) {
    const double r = 1.2 + 0.05 * t, theta = 0.1 + 0.05 * t;
    const Candidate c = Candidate::polar(r, theta);
    const complex lam = c.lambda();
    State1 s1{0.0};
    State2 s2{0.0, 0.0};
    complex partial = 0, lam_pow = 1;
    for (int n = 1; n <= 12; ++n) {
      const double p = coef(rng);
      partial += p * lam_pow;
      lam_pow *= lam;
      s1 = step1(s1, p, c.inverse());
      s2 = step2(s2, p, c.two_r_cos(), c.r_sq());
      const complex expected = partial * lam / lam_pow;
      const double scale = std::max(1.0, std::abs(expected)) * r;
      EXPECT_NEAR(std::abs(s1.q - expected), 0.0, 1e-9 * scale);
      EXPECT_NEAR(s2.q_curr, -(c.inverse() * expected).imag() / (r * std::sin(theta)), 1e-8 * scale);
    }
  }
}

TEST(Thresholds, Formulas) {
  const auto s1 = CoefficientSet::from_integers({-1, 1});
  EXPECT_DOUBLE_EQ(escape_threshold_1(s1, Candidate::polar(2.0, 0.0)), 1.0);
  const auto s10 = CoefficientSet::span(10);
  const Candidate c = Candidate::polar(std::sqrt(12.0), 1.0);
  EXPECT_NEAR(escape_threshold_1(s10, c), 10 / (std::sqrt(12.0) - 1), 1e-12);
  EXPECT_NEAR(escape_threshold_1(s10, c), 4.0583, 1e-4);
  EXPECT_NEAR(escape_threshold_2(s10, c), 1.6470, 1e-4);
  EXPECT_NEAR(escape_threshold_angled(s10, Candidate::polar(4.0, Candidate::kPi / 3)), 10.0 / 11.0, 1e-12);
}

TEST(Thresholds, DegenerateDenominator) {
  const auto s = CoefficientSet::span(1);
  EXPECT_THROW(escape_threshold_2(s, Candidate::polar(2.0, 0.0)), Error);
  // r = 2, cos θ = 3/4 makes r² - 2r cos θ - 1 vanish.
  try {
    escape_threshold_angled(s, Candidate::polar(2.0, std::acos(0.75)));
    FAIL() << "expected DegenerateDenominator";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateDenominator);
  }
}

TEST(Candidate, Conventions) {
  EXPECT_THROW(Candidate::polar(1.0, 0.3), Error);
  const Candidate lower = Candidate::from_point({0.2, -0.3});
  EXPECT_GT(lower.theta(), 0.0);
  EXPECT_NEAR(lower.lambda().imag(), 0.3, 1e-15);
  const Candidate q = Candidate::from_quadratic(-3, 12);
  EXPECT_EQ(q.two_r_cos(), 3.0);
  EXPECT_EQ(q.r_sq(), 12.0);
  EXPECT_NEAR(q.modulus(), 1 / std::sqrt(12.0), 1e-15);
  EXPECT_THROW(Candidate::from_quadratic(-4, 4), Error);
}

TEST(PolynomialRootCheck, WeakRigidityRoot) {
  const double poly[] = {1, -3, 12};
  const complex z{3.0 / 24, std::sqrt(39.0) / 24};
  EXPECT_TRUE(polynomial_root_check(poly, Candidate::from_point(z)));
  EXPECT_FALSE(polynomial_root_check(poly, Candidate::from_point({0.3, 0.1})));
  const double golden[] = {1, -1, -1};
  EXPECT_TRUE(polynomial_root_check(golden, Candidate::from_point({(std::sqrt(5.0) - 1) / 2, 0})));
}
