#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sigma/error.hpp"
#include "sigma/serialize.hpp"
#include "sigma/verify.hpp"

using namespace sigma;

TEST(Serialize, SetRoundTrip) {
  for (const auto& s : {CoefficientSet::span(3), CoefficientSet::from_values({1, 1.5, 2}, false)}) {
    EXPECT_EQ(set_from_json(to_json(s)), s);
    EXPECT_EQ(set_from_json(json::parse(dump(to_json(s)))), s);
  }
  EXPECT_THROW(set_from_json(json{{"elements", "x"}}), Error);
}

TEST(Serialize, DoublesRoundTripExactly) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng) / 3.0;
    const json j = json::parse(dump(json{{"x", x}}));
    EXPECT_EQ(j["x"].get<double>(), x);
  }
}

TEST(Serialize, DecisionFields) {
  Decision d;
  d.verdict = Verdict::Out;
  d.depth = 3;
  d.note = "Out modulo rounding";
  d.certificate = Certificate{3, 10, 20, true, false};
  const json j = to_json(d);
  EXPECT_EQ(j["verdict"], "Out");
  EXPECT_EQ(j["depth"], 3);
  EXPECT_EQ(j["certificate"]["modulo_rounding"], true);
  EXPECT_FALSE(j.contains("witness"));
}

TEST(Verify, UnknownSuiteIsInvalidInput) {
  try {
    run_suite("nope", SuiteOptions{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
}

TEST(Verify, SuitesPassOnReferenceSets) {
  SuiteOptions o;
  o.set = CoefficientSet::from_integers({-1, 1});
  EXPECT_TRUE(run_suite("prod-ineq", o).pass);
  o.set = CoefficientSet::span(1);
  o.samples = 20;
  o.steps = 2000;
  EXPECT_TRUE(run_suite("real-strip", o).pass);
  o.set = CoefficientSet::span(5);
  EXPECT_TRUE(run_suite("annulus", o).pass);
  o.set = CoefficientSet::span(10);
  EXPECT_TRUE(run_suite("rigidity", o).pass);
  o.k = 5;
  EXPECT_TRUE(run_suite("quasirigidity", o).pass);
  o.set = CoefficientSet::from_integers({-4, -1, 0, 1, 4});
  EXPECT_TRUE(run_suite("gap3", o).pass);
  EXPECT_TRUE(run_suite("conn-class", o).pass);
}
