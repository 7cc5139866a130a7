#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace sigma {

/// Absolute tolerance used for membership and equality when a set is not in
/// exact-integer mode.
inline constexpr double kSetTolerance = 1e-9;

/// A finite set of real coefficients. Elements are kept sorted ascending and
/// distinct; the set is never empty and never {0}. Immutable after
/// construction.
class CoefficientSet {
 public:
  /// Sorts and deduplicates `values`. When `exact_integer` is set every value
  /// must be an integer (checked) and comparisons are exact.
  static CoefficientSet from_values(std::vector<double> values, bool exact_integer);
  static CoefficientSet from_integers(const std::vector<long long>& values);
  /// {0, ±1, ..., ±max}.
  static CoefficientSet span(int max);

  std::span<const double> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool exact_integer() const { return exact_integer_; }
  /// Smallest absolute value among nonzero elements.
  double min_abs() const { return min_abs_; }
  /// Largest absolute value (M).
  double max_abs() const { return max_abs_; }
  bool contains(double value) const;
  bool contains_zero() const { return contains(0.0); }
  bool symmetric() const { return symmetric_; }

  /// Elements with {v, -v} removed for every v in `values`.
  CoefficientSet without_pm(std::span<const double> values) const;
  /// S ∪ -S.
  CoefficientSet symmetrized() const;
  CoefficientSet scaled(double factor) const;

  bool operator==(const CoefficientSet& other) const;

 private:
  CoefficientSet() = default;
  void finalize();

  std::vector<double> elements_;
  bool exact_integer_ = false;
  double min_abs_ = 0.0;
  double max_abs_ = 0.0;
  bool symmetric_ = false;
};

struct Normalization {
  CoefficientSet set;
  double scale;
};

/// Divides by +m (preferred) or -m so that the result contains 1.
Normalization normalize(const CoefficientSet& s);
bool is_normalized(const CoefficientSet& s);

/// max |s_j - s_{j+1}| / m over consecutive sorted elements.
double total_gap(const CoefficientSet& s);
bool is_symmetric(const CoefficientSet& s);

/// {a - b : a, b in S}, sorted and deduplicated.
std::vector<double> delta_set(const CoefficientSet& s);

struct ConnGraph {
  std::vector<double> vertices;
  /// Unordered pairs (i, j), i < j, indices into `vertices`.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool connected = false;
};

/// Graph on S with an edge (a, b) whenever (a - b) S ⊆ ΔS.
ConnGraph connectivity_graph(const CoefficientSet& s);

enum class Connectedness { Disconnected, ConnectedLC, Unknown };

/// Classification for both Σ_S and Σ_S¹ (the latter is always decided).
struct ConnectednessVerdict {
  Connectedness sigma;
  Connectedness sigma_one;
  double total_gap;
};

ConnectednessVerdict classify_connectedness(const CoefficientSet& s);

const char* to_string(Connectedness c);

}  // namespace sigma
