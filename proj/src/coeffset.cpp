#include "sigma/coeffset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sigma/error.hpp"

namespace sigma {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoNormalization: return "NoNormalization";
    case ErrorKind::SingletonSet: return "SingletonSet";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::RootFindingFailure: return "RootFindingFailure";
    case ErrorKind::EmptyRootSet: return "EmptyRootSet";
    case ErrorKind::GreedyFailed: return "GreedyFailed";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

namespace {

constexpr double kMaxExactInteger = 9007199254740992.0;  // 2^53

bool is_integral(double v) { return std::isfinite(v) && std::floor(v) == v && std::fabs(v) < kMaxExactInteger; }

// Sorted, deduplicated copy (exact or within kSetTolerance).
std::vector<double> sorted_unique(std::vector<double> values, bool exact) {
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) {
    if (!out.empty() && (exact ? v == out.back() : v - out.back() <= kSetTolerance)) continue;
    out.push_back(v);
  }
  return out;
}

bool sorted_contains(std::span<const double> sorted, double value, bool exact) {
  if (exact) return std::binary_search(sorted.begin(), sorted.end(), value);
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value - kSetTolerance);
  return it != sorted.end() && *it <= value + kSetTolerance;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

CoefficientSet CoefficientSet::from_values(std::vector<double> values, bool exact_integer) {
  if (values.empty()) throw Error(ErrorKind::InvalidInput, "coefficient set is empty");
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "coefficient is not finite");
    if (exact_integer && !is_integral(v))
      throw Error(ErrorKind::InvalidInput, "non-integer coefficient " + std::to_string(v) + " in exact-integer set");
  }
  CoefficientSet s;
  s.exact_integer_ = exact_integer;
  s.elements_ = sorted_unique(std::move(values), exact_integer);
  s.finalize();
  return s;
}

CoefficientSet CoefficientSet::from_integers(const std::vector<long long>& values) {
  std::vector<double> v(values.begin(), values.end());
  return from_values(std::move(v), true);
}

CoefficientSet CoefficientSet::span(int max) {
  if (max < 1) throw Error(ErrorKind::InvalidInput, "span maximum must be >= 1");
  std::vector<double> v;
  for (int k = -max; k <= max; ++k) v.push_back(k);
  return from_values(std::move(v), true);
}

void CoefficientSet::finalize() {
  min_abs_ = 0.0;
  max_abs_ = 0.0;
  for (double v : elements_) {
    double a = std::fabs(v);
    if (a == 0.0 || (!exact_integer_ && a <= kSetTolerance)) continue;
    if (min_abs_ == 0.0 || a < min_abs_) min_abs_ = a;
    max_abs_ = std::max(max_abs_, a);
  }
  if (max_abs_ == 0.0) throw Error(ErrorKind::InvalidInput, "coefficient set must not be {0}");
  symmetric_ = std::all_of(elements_.begin(), elements_.end(), [&](double v) { return contains(-v); });
}

bool CoefficientSet::contains(double value) const { return sorted_contains(elements_, value, exact_integer_); }

CoefficientSet CoefficientSet::without_pm(std::span<const double> values) const {
  std::vector<double> kept;
  for (double e : elements_) {
    bool drop = std::any_of(values.begin(), values.end(), [&](double v) {
      return exact_integer_ ? std::fabs(e) == std::fabs(v) : std::fabs(std::fabs(e) - std::fabs(v)) <= kSetTolerance;
    });
    if (!drop) kept.push_back(e);
  }
  return from_values(std::move(kept), exact_integer_);
}

CoefficientSet CoefficientSet::symmetrized() const {
  std::vector<double> v(elements_.begin(), elements_.end());
  for (double e : elements_) v.push_back(-e);
  return from_values(std::move(v), exact_integer_);
}

CoefficientSet CoefficientSet::scaled(double factor) const {
  if (factor == 0.0 || !std::isfinite(factor)) throw Error(ErrorKind::InvalidInput, "scale factor must be finite and nonzero");
  std::vector<double> v;
  v.reserve(elements_.size());
  bool integral = exact_integer_;
  for (double e : elements_) {
    double x = e / factor;
    if (integral && !is_integral(x)) integral = false;
    v.push_back(x);
  }
  return from_values(std::move(v), integral);
}

bool CoefficientSet::operator==(const CoefficientSet& other) const {
  return exact_integer_ == other.exact_integer_ && elements_ == other.elements_;
}

Normalization normalize(const CoefficientSet& s) {
  const double m = s.min_abs();
  for (double divisor : {m, -m}) {
    if (!s.contains(divisor)) continue;
    CoefficientSet out = s.scaled(divisor);
    if (out.contains(1.0)) return {std::move(out), divisor};
  }
  throw Error(ErrorKind::NoNormalization, "neither +m nor -m yields a set containing 1");
}

bool is_normalized(const CoefficientSet& s) {
  return s.contains(1.0) && s.min_abs() >= 1.0 - (s.exact_integer() ? 0.0 : kSetTolerance);
}

double total_gap(const CoefficientSet& s) {
  auto e = s.elements();
  if (e.size() < 2) throw Error(ErrorKind::SingletonSet, "total gap needs at least two elements");
  double gap = 0.0;
  for (std::size_t i = 0; i + 1 < e.size(); ++i) gap = std::max(gap, e[i + 1] - e[i]);
  return gap / s.min_abs();
}

bool is_symmetric(const CoefficientSet& s) { return s.symmetric(); }

std::vector<double> delta_set(const CoefficientSet& s) {
  auto e = s.elements();
  std::vector<double> d;
  d.reserve(e.size() * e.size());
  for (double a : e)
    for (double b : e) d.push_back(a - b);
  return sorted_unique(std::move(d), s.exact_integer());
}

ConnGraph connectivity_graph(const CoefficientSet& s) {
  auto e = s.elements();
  const std::vector<double> delta = delta_set(s);
  ConnGraph g;
  g.vertices.assign(e.begin(), e.end());
  DisjointSets sets(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const double d = e[i] - e[j];
      bool ok = std::all_of(e.begin(), e.end(),
                            [&](double x) { return sorted_contains(delta, d * x, s.exact_integer()); });
      if (ok) {
        g.edges.emplace_back(i, j);
        sets.unite(i, j);
      }
    }
  }
  g.connected = true;
  for (std::size_t i = 1; i < e.size(); ++i)
    if (sets.find(i) != sets.find(0)) g.connected = false;
  return g;
}

ConnectednessVerdict classify_connectedness(const CoefficientSet& s) {
  if (!s.exact_integer() || !is_normalized(s) || !s.symmetric() || !s.contains_zero())
    throw Error(ErrorKind::PreconditionViolated,
                "classification needs a normalized symmetric integer set containing 0");
  const double gap = total_gap(s);
  ConnectednessVerdict v{};
  v.total_gap = gap;
  if (gap >= 3.0) {
    v.sigma = Connectedness::Disconnected;
    v.sigma_one = Connectedness::Disconnected;
  } else {
    v.sigma_one = Connectedness::ConnectedLC;
    v.sigma = s.max_abs() >= 40.0 ? Connectedness::ConnectedLC : Connectedness::Unknown;
  }
  return v;
}

const char* to_string(Connectedness c) {
  switch (c) {
    case Connectedness::Disconnected: return "Disconnected";
    case Connectedness::ConnectedLC: return "ConnectedLC";
    case Connectedness::Unknown: return "Unknown";
  }
  return "Unknown";
}

}  // namespace sigma
