#pragma once

#include <climits>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sigma/coeffset.hpp"
#include "sigma/decide.hpp"

namespace sigma {

struct RenderShortcuts {
  /// Gap-1 symmetric sets: |λ| >= 1/√M is In without search.
  bool certified_annulus = true;
  /// |λ| < 1/(M/m + 1) is Out without search.
  bool outer_cutoff = true;
};

struct RasterSpec {
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;
  int width = 256;
  int height = 256;
  SearchConfig cfg;
  RenderShortcuts shortcuts;
  /// Adds 4 to the depth for pixels with |λ| < 1.2/(√M + 1).
  bool auto_deepen = true;

  void validate() const;
  bool operator==(const RasterSpec& o) const;
};

/// Column and row of a pixel; row 0 is the top (y_max) edge.
struct Pixel {
  int col = 0;
  int row = 0;
};

struct Raster {
  RasterSpec spec;
  /// Row-major verdict codes (Verdict numeric values).
  std::vector<std::uint8_t> codes;
  /// p_1 of the surviving branch when it starts with p_0 = 1, else kNoLead.
  std::vector<std::int16_t> lead;
  std::vector<double> set_elements;
  std::string set_digest;

  static constexpr std::int16_t kNoLead = INT16_MIN;

  int width() const { return spec.width; }
  int height() const { return spec.height; }
  Verdict at(int col, int row) const { return static_cast<Verdict>(codes[index(col, row)]); }
  std::size_t index(int col, int row) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(spec.width) + static_cast<std::size_t>(col);
  }
  /// Sample point of a pixel: the cell center, moved onto the real axis for
  /// the row whose cell contains y = 0.
  complex sample_point(int col, int row) const;
  std::optional<Pixel> pixel_of(complex z) const;
};

/// Row of `spec` whose cell [y_low, y_high) contains 0, if any.
std::optional<int> real_axis_row(const RasterSpec& spec);

/// Digest of the normalized set and everything in the spec that affects pixels.
std::string raster_digest(const CoefficientSet& normalized, const RasterSpec& spec);

struct PointVerdict {
  Verdict verdict = Verdict::Unknown;
  std::int16_t lead = Raster::kNoLead;
};

/// Verdict for one point, as render would compute it.
PointVerdict classify_point(const CoefficientSet& normalized, complex z, const RasterSpec& spec, bool on_real_axis);

Raster render(const CoefficientSet& s, const RasterSpec& spec, int threads = 0);

/// In where `a` is In-like and `b` is not, Out elsewhere.
Raster diff(const Raster& a, const Raster& b);

struct Components {
  int width = 0;
  int height = 0;
  /// -1 for pixels that are not In-like, otherwise the component id.
  std::vector<int> labels;
  std::vector<long long> sizes;

  int count() const { return static_cast<int>(sizes.size()); }
  int label_at(int col, int row) const { return labels[static_cast<std::size_t>(row) * width + col]; }
};

/// 4-connected components of In-like pixels, numbered in scan order.
Components components(const Raster& r);
/// Component containing the pixel of z, if that pixel is In-like.
std::optional<int> component_at(const Components& c, const Raster& r, complex z);

/// Tip of spike k: the first-quadrant root of 1 - (k+1)z + (M+k)z².
complex spike_tip(int M, int k);

struct SpikeCountReport {
  int count = 0;
  std::vector<int> present;
  std::vector<int> absent;
};

/// Spike k counts when some In-like pixel inside SpikeBand(k) survives with a
/// branch starting p_0 = 1, p_1 = -k, the choice the band is derived from.
SpikeCountReport count_spikes_report(const Raster& r, int M);
int count_spikes(const Raster& r, int M);

}  // namespace sigma
