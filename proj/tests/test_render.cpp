#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "sigma/error.hpp"
#include "sigma/geometry.hpp"
#include "sigma/pgm.hpp"
#include "sigma/render.hpp"

using namespace sigma;

namespace {

CoefficientSet ints(std::vector<long long> v) { return CoefficientSet::from_integers(v); }

RasterSpec small_spec(int n = 48, int depth = 10) {
  RasterSpec s;
  s.width = n;
  s.height = n;
  s.cfg.max_depth = depth;
  return s;
}

}  // namespace

TEST(Render, DeterministicAcrossThreadCounts) {
  const auto s = CoefficientSet::span(1);
  const Raster a = render(s, small_spec(), 1);
  const Raster b = render(s, small_spec(), 3);
  EXPECT_EQ(a.codes, b.codes);
  EXPECT_EQ(a.lead, b.lead);
  EXPECT_EQ(a.set_digest, b.set_digest);
}

TEST(Render, ScaleInvariant) {
  const Raster a = render(CoefficientSet::span(1), small_spec(32, 8), 1);
  const Raster b = render(ints({-3, 0, 3}), small_spec(32, 8), 1);
  EXPECT_EQ(a.codes, b.codes);
  EXPECT_EQ(a.set_digest, b.set_digest);
}

TEST(Render, MirrorSymmetryForSymmetricSets) {
  RasterSpec left = small_spec(40, 10), right = small_spec(40, 10);
  left.x_min = -1;
  left.x_max = 0;
  right.x_min = 0;
  right.x_max = 1;
  const auto s = CoefficientSet::span(2);
  const Raster a = render(s, left, 1), b = render(s, right, 1);
  for (int row = 0; row < 40; ++row)
    for (int col = 0; col < 40; ++col) EXPECT_EQ(a.at(col, row), b.at(39 - col, row));
}

TEST(Render, OuterRegionOutAndAnnulusIn) {
  const auto s = CoefficientSet::span(1);
  const Raster r = render(s, small_spec(64, 12), 1);
  for (int row = 0; row < r.height(); ++row)
    for (int col = 0; col < r.width(); ++col) {
      const complex z = r.sample_point(col, row);
      if (std::abs(z) < 0.49) {
        EXPECT_EQ(r.at(col, row), Verdict::Out);
      }
      if (std::abs(z) > 0.72 && std::abs(z) < 0.99 && z.imag() > 0) {
        EXPECT_TRUE(in_like(r.at(col, row))) << z;
      }
    }
}

TEST(Render, RealAxisAntenna) {
  // The last row samples the real axis exactly; [1/2, 1) is in the set.
  const Raster r = render(CoefficientSet::span(1), small_spec(64, 12), 1);
  const auto row = real_axis_row(r.spec);
  ASSERT_TRUE(row);
  for (int col = 0; col < r.width(); ++col) {
    const complex z = r.sample_point(col, *row);
    EXPECT_EQ(z.imag(), 0.0);
    if (z.real() > 0.51) {
      EXPECT_TRUE(in_like(r.at(col, *row))) << z;
    }
    if (z.real() < 0.49) {
      EXPECT_EQ(r.at(col, *row), Verdict::Out) << z;
    }
  }
}

TEST(Render, GapThreeShowsRealAxisHole) {
  const Raster r = render(ints({-4, -1, 0, 1, 4}), small_spec(128, 12), 1);
  const auto row = real_axis_row(r.spec);
  ASSERT_TRUE(row);
  const auto px = r.pixel_of({0.2198, 1e-9});
  ASSERT_TRUE(px);
  EXPECT_EQ(r.at(px->col, *row), Verdict::Out);
  const auto hi = r.pixel_of({0.25, 1e-9});
  EXPECT_TRUE(in_like(r.at(hi->col, *row)));
}

TEST(Render, RejectsBadSpecs) {
  RasterSpec s = small_spec();
  s.width = 0;
  EXPECT_THROW(render(CoefficientSet::span(1), s), Error);
  s = small_spec();
  s.x_max = 1.5;
  EXPECT_THROW(render(CoefficientSet::span(1), s), Error);
}

TEST(Diff, RequiresMatchingSpecs) {
  const Raster a = render(CoefficientSet::span(1), small_spec(16, 6), 1);
  const Raster b = render(CoefficientSet::span(1), small_spec(20, 6), 1);
  try {
    diff(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SpecMismatch);
  }
}

TEST(Diff, RemovingTwoOpensTheLambdaTwoComponent) {
  RasterSpec spec = small_spec(160, 12);
  spec.x_max = spec.y_max = 1 / std::sqrt(10.0);
  const auto s = CoefficientSet::span(10);
  const double two[] = {2};
  const Raster a = render(s, spec, 0);
  const Raster b = render(s.without_pm(two), spec, 0);
  const Raster d = diff(a, b);
  const Components c = components(d);
  const auto at = component_at(c, d, lambda_k(10, 2).lambda());
  ASSERT_TRUE(at);
  EXPECT_GT(c.sizes[static_cast<std::size_t>(*at)], 0);
  // Everything in the difference lies in A.
  for (std::size_t i = 0; i < d.codes.size(); ++i)
    if (in_like(static_cast<Verdict>(d.codes[i]))) {
      EXPECT_TRUE(in_like(static_cast<Verdict>(a.codes[i])));
    }
}

TEST(Components, CountsFourConnectedRegions) {
  Raster r;
  r.spec = small_spec(5, 1);
  r.spec.height = 3;
  // In pixels: two blobs touching only diagonally stay separate.
  const std::uint8_t I = 0, O = 3;
  r.codes = {I, O, O, O, I,  //
             O, I, O, O, I,  //
             O, O, O, O, O};
  const Components c = components(r);
  EXPECT_EQ(c.count(), 3);
  EXPECT_EQ(c.label_at(4, 0), c.label_at(4, 1));
  EXPECT_NE(c.label_at(0, 0), c.label_at(1, 1));
  EXPECT_EQ(c.label_at(2, 2), -1);
}

TEST(SpikeCount, SpanTenAndSkippedTwo) {
  RasterSpec spec = small_spec(256, 12);
  spec.x_max = spec.y_max = 1 / std::sqrt(10.0);
  const auto s = CoefficientSet::span(10);
  const double two[] = {2};
  EXPECT_EQ(count_spikes(render(s, spec, 0), 10), 8);
  const SpikeCountReport r = count_spikes_report(render(s.without_pm(two), spec, 0), 10);
  EXPECT_EQ(r.count, 7);
  EXPECT_EQ(r.absent, (std::vector<int>{2}));
}

TEST(SpikeCount, MOneLacksTheMinusTwoSpike) {
  RasterSpec spec = small_spec(128, 12);
  const SpikeCountReport r = count_spikes_report(render(CoefficientSet::span(1), spec, 0), 1);
  EXPECT_EQ(r.count, 2);
  EXPECT_EQ(r.absent, (std::vector<int>{2}));
}

TEST(SpikeCount, NeedsTheFullQuadrant) {
  RasterSpec spec = small_spec(32, 8);
  spec.x_max = 0.2;
  EXPECT_THROW(count_spikes(render(CoefficientSet::span(10), spec, 1), 10), Error);
}

TEST(Pgm, RoundTrip) {
  const Raster r = render(CoefficientSet::span(1), small_spec(24, 8), 1);
  std::stringstream ss;
  write_pgm(ss, r);
  const std::string bytes = ss.str();
  EXPECT_EQ(bytes.substr(0, 2), "P5");
  const GrayImage img = read_pgm(ss);
  ASSERT_EQ(img.pixels.size(), r.codes.size());
  for (std::size_t i = 0; i < img.pixels.size(); ++i)
    EXPECT_EQ(verdict_from_gray(img.pixels[i]), static_cast<Verdict>(r.codes[i]));
}
