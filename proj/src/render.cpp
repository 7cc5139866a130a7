#include "sigma/render.hpp"

#include <cmath>
#include <deque>
#include <sstream>

#include "sigma/digest.hpp"
#include "sigma/error.hpp"
#include "sigma/geometry.hpp"
#include "sigma/parallel.hpp"

namespace sigma {

void RasterSpec::validate() const {
  if (width < 1 || height < 1) throw Error(ErrorKind::InvalidInput, "raster size must be at least 1x1");
  if (!(x_min < x_max) || !(y_min < y_max)) throw Error(ErrorKind::InvalidInput, "raster ranges must be nonempty");
  if (x_min < -1.0 || x_max > 1.0 || y_min < -1.0 || y_max > 1.0)
    throw Error(ErrorKind::InvalidInput, "raster ranges must lie in [-1, 1] x [-1, 1]");
  cfg.validate();
}

bool RasterSpec::operator==(const RasterSpec& o) const {
  return x_min == o.x_min && x_max == o.x_max && y_min == o.y_min && y_max == o.y_max && width == o.width &&
         height == o.height && cfg.max_depth == o.cfg.max_depth && cfg.slack == o.cfg.slack &&
         cfg.first_coeff == o.cfg.first_coeff && cfg.node_budget == o.cfg.node_budget &&
         shortcuts.certified_annulus == o.shortcuts.certified_annulus &&
         shortcuts.outer_cutoff == o.shortcuts.outer_cutoff && auto_deepen == o.auto_deepen;
}

namespace {

// Coordinates written so that mirrored ranges give exactly negated values.
double lerp_center(double lo, double hi, int i, int n) {
  return (lo * (n - i - 0.5) + hi * (i + 0.5)) / n;
}
double row_edge(const RasterSpec& s, int j) { return (s.y_max * (s.height - j) + s.y_min * j) / s.height; }

}  // namespace

std::optional<int> real_axis_row(const RasterSpec& spec) {
  for (int j = 0; j < spec.height; ++j)
    if (row_edge(spec, j + 1) <= 0.0 && 0.0 < row_edge(spec, j)) return j;
  return std::nullopt;
}

complex Raster::sample_point(int col, int row) const {
  const double x = lerp_center(spec.x_min, spec.x_max, col, spec.width);
  auto axis = real_axis_row(spec);
  if (axis && *axis == row) return {x, 0.0};
  return {x, lerp_center(spec.y_max, spec.y_min, row, spec.height)};
}

std::optional<Pixel> Raster::pixel_of(complex z) const {
  const double fx = (z.real() - spec.x_min) / (spec.x_max - spec.x_min) * spec.width;
  const double fy = (spec.y_max - z.imag()) / (spec.y_max - spec.y_min) * spec.height;
  if (!(fx >= 0.0 && fx < spec.width && fy >= 0.0 && fy < spec.height)) return std::nullopt;
  return Pixel{static_cast<int>(fx), static_cast<int>(fy)};
}

std::string raster_digest(const CoefficientSet& normalized, const RasterSpec& spec) {
  std::ostringstream os;
  os.precision(17);
  os << "set";
  for (double e : normalized.elements()) os << ' ' << e;
  os << (normalized.exact_integer() ? " int" : " real");
  os << "|range " << spec.x_min << ' ' << spec.x_max << ' ' << spec.y_min << ' ' << spec.y_max;
  os << "|size " << spec.width << 'x' << spec.height;
  os << "|depth " << spec.cfg.max_depth << " slack " << spec.cfg.slack << " first " << to_string(spec.cfg.first_coeff)
     << " budget " << spec.cfg.node_budget;
  os << "|shortcuts " << spec.shortcuts.certified_annulus << spec.shortcuts.outer_cutoff << " deepen " << spec.auto_deepen;
  return fnv1a_hex(os.str());
}

PointVerdict classify_point(const CoefficientSet& s, complex z, const RasterSpec& spec, bool on_real_axis) {
  if (on_real_axis) z = complex(z.real(), 0.0);
  const double mod = std::abs(z);
  if (!(mod > 0.0) || mod >= 1.0) return {Verdict::Out};
  const double M = s.max_abs();
  if (spec.shortcuts.outer_cutoff && mod < 1.0 / (M / s.min_abs() + 1.0)) return {Verdict::Out};
  if (spec.shortcuts.certified_annulus && M > 1.0 && s.symmetric() && total_gap(s) <= 1.0 + kSetTolerance &&
      mod >= 1.0 / std::sqrt(M))
    return {Verdict::In};
  SearchConfig cfg = spec.cfg;
  if (spec.auto_deepen && mod < 1.2 / (std::sqrt(M) + 1.0)) cfg.max_depth += 4;
  const Candidate cand = Candidate::from_point(z);
  cfg.variant = natural_variant(cand);
  cfg.exact = false;
  const Decision d = decide_point(s, cand, cfg);
  PointVerdict out{d.verdict};
  if (d.witness && d.witness->preperiod.size() >= 2 && d.witness->preperiod[0] == 1.0) {
    const double p1 = d.witness->preperiod[1];
    if (std::floor(p1) == p1 && std::fabs(p1) < 32767.0) out.lead = static_cast<std::int16_t>(p1);
  }
  return out;
}

Raster render(const CoefficientSet& s, const RasterSpec& spec, int threads) {
  spec.validate();
  const CoefficientSet ns = normalize(s).set;
  Raster r;
  r.spec = spec;
  r.set_elements.assign(ns.elements().begin(), ns.elements().end());
  r.set_digest = raster_digest(ns, spec);
  r.codes.assign(static_cast<std::size_t>(spec.width) * static_cast<std::size_t>(spec.height),
                 static_cast<std::uint8_t>(Verdict::Unknown));
  r.lead.assign(r.codes.size(), Raster::kNoLead);
  const auto axis = real_axis_row(spec);
  parallel_for(static_cast<std::size_t>(spec.height), threads, [&](std::size_t row) {
    const int j = static_cast<int>(row);
    const bool real_row = axis && *axis == j;
    for (int i = 0; i < spec.width; ++i) {
      const PointVerdict v = classify_point(ns, r.sample_point(i, j), spec, real_row);
      r.codes[r.index(i, j)] = static_cast<std::uint8_t>(v.verdict);
      r.lead[r.index(i, j)] = v.lead;
    }
  });
  return r;
}

Raster diff(const Raster& a, const Raster& b) {
  if (!(a.spec == b.spec)) throw Error(ErrorKind::SpecMismatch, "diff needs rasters with identical specs");
  Raster out;
  out.spec = a.spec;
  out.set_elements = a.set_elements;
  out.set_digest = fnv1a_hex("diff " + a.set_digest + " " + b.set_digest);
  out.codes.resize(a.codes.size());
  out.lead = a.lead;
  for (std::size_t i = 0; i < a.codes.size(); ++i) {
    const bool keep = in_like(static_cast<Verdict>(a.codes[i])) && !in_like(static_cast<Verdict>(b.codes[i]));
    out.codes[i] = static_cast<std::uint8_t>(keep ? Verdict::In : Verdict::Out);
  }
  return out;
}

Components components(const Raster& r) {
  Components c;
  c.width = r.width();
  c.height = r.height();
  c.labels.assign(r.codes.size(), -1);
  std::deque<std::pair<int, int>> queue;
  for (int row = 0; row < c.height; ++row) {
    for (int col = 0; col < c.width; ++col) {
      const std::size_t idx = r.index(col, row);
      if (c.labels[idx] != -1 || !in_like(r.at(col, row))) continue;
      const int id = c.count();
      c.sizes.push_back(0);
      c.labels[idx] = id;
      queue.emplace_back(col, row);
      while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        ++c.sizes.back();
        const int dx[] = {1, -1, 0, 0};
        const int dy[] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
          const int nx = x + dx[d], ny = y + dy[d];
          if (nx < 0 || ny < 0 || nx >= c.width || ny >= c.height) continue;
          const std::size_t n = r.index(nx, ny);
          if (c.labels[n] != -1 || !in_like(r.at(nx, ny))) continue;
          c.labels[n] = id;
          queue.emplace_back(nx, ny);
        }
      }
    }
  }
  return c;
}

std::optional<int> component_at(const Components& c, const Raster& r, complex z) {
  auto px = r.pixel_of(z);
  if (!px) return std::nullopt;
  const int label = c.label_at(px->col, px->row);
  if (label < 0) return std::nullopt;
  return label;
}

complex spike_tip(int M, int k) {
  const double disc = 4.0 * (M + k) - static_cast<double>(k + 1) * (k + 1);
  if (M < 1 || k < 0 || !(disc > 0.0)) throw Error(ErrorKind::PreconditionViolated, "spike tip needs (k-1)^2 < 4M");
  const double denom = 2.0 * (M + k);
  return {(k + 1) / denom, std::sqrt(disc) / denom};
}

SpikeCountReport count_spikes_report(const Raster& r, int M) {
  if (M < 1 || r.set_elements.empty()) throw Error(ErrorKind::PreconditionViolated, "count_spikes needs M >= 1");
  double max_abs = 0.0;
  for (double e : r.set_elements) {
    if (std::floor(e) != e) throw Error(ErrorKind::PreconditionViolated, "count_spikes needs an integer set");
    max_abs = std::max(max_abs, std::fabs(e));
  }
  if (max_abs != M) throw Error(ErrorKind::PreconditionViolated, "raster set has a different maximum");
  if (r.lead.size() != r.codes.size()) throw Error(ErrorKind::PreconditionViolated, "raster carries no branch data");
  const double rl = std::sqrt(static_cast<double>(M));
  const double reach = (1.0 - 1e-12) / rl;
  if (r.spec.x_min > 0.0 || r.spec.y_min > 0.0 || r.spec.x_max < reach || r.spec.y_max < reach)
    throw Error(ErrorKind::PreconditionViolated, "raster region does not cover the spike moduli");
  SpikeCountReport rep;
  for (const SpikeBand& band : spike_bands(M)) {
    bool found = false;
    for (int row = 0; row < r.height() && !found; ++row) {
      for (int col = 0; col < r.width() && !found; ++col) {
        const std::size_t i = r.index(col, row);
        found = r.lead[i] == -band.k && in_like(r.at(col, row)) && band.contains(r.sample_point(col, row));
      }
    }
    (found ? rep.present : rep.absent).push_back(band.k);
  }
  rep.count = static_cast<int>(rep.present.size());
  return rep;
}

int count_spikes(const Raster& r, int M) { return count_spikes_report(r, M).count; }

}  // namespace sigma
