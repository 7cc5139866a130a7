#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigma/coeffset.hpp"
#include "sigma/recursion.hpp"

namespace sigma {

/// Numeric values double as raster codes.
enum class Verdict { In = 0, PresumedIn = 1, Unknown = 2, Out = 3 };

const char* to_string(Verdict v);
inline bool in_like(Verdict v) { return v == Verdict::In || v == Verdict::PresumedIn; }

enum class Variant { OneStep, TwoStep };
enum class FirstCoeff { AnyNonzero, One };

const char* to_string(Variant v);
const char* to_string(FirstCoeff f);

/// Coefficient sequence p_0, p_1, ... = preperiod followed by period repeated
/// forever (an empty period means the sequence stops, i.e. a prefix only).
/// Rule-generated witnesses carry a `rule` tag and a sample of the sequence.
struct Witness {
  std::vector<double> preperiod;
  std::vector<double> period;
  std::string rule;
  double max_abs_q = 0.0;
};

struct Certificate {
  int depth_exhausted = 0;
  long long branches_pruned = 0;
  long long nodes = 0;
  bool modulo_rounding = false;
  bool budget_exceeded = false;
};

struct Decision {
  Verdict verdict = Verdict::Unknown;
  int depth = 0;
  bool exact = false;
  std::optional<Witness> witness;
  std::optional<Certificate> certificate;
  std::string note;

  bool in_like() const { return sigma::in_like(verdict); }
};

struct SearchConfig {
  int max_depth = 14;
  /// Guard added to the escape threshold before pruning (ignored in exact mode).
  double slack = 1e-6;
  Variant variant = Variant::OneStep;
  FirstCoeff first_coeff = FirstCoeff::AnyNonzero;
  bool exact = false;
  /// Node cap; 0 means unlimited. Hitting it yields Unknown.
  long long node_budget = 0;
  /// Remember exhausted states; only used when every state is an exact integer.
  bool exact_memo = false;

  void validate() const;
};

/// OneStep for real candidates, TwoStep otherwise.
Variant natural_variant(const Candidate& cand);

/// Depth-limited pruned search over coefficient choices.
Decision decide_point(const CoefficientSet& s, const Candidate& cand, const SearchConfig& cfg);

/// Exact reachability on the integer state graph of the 2-step recursion for a
/// root of 1 + bz + cz². In iff some start state reaches a cycle.
Decision decide_exact_quadratic(const CoefficientSet& s, long long b, long long c, FirstCoeff first);

/// Greedy 1-step witness for a real point x ∈ [1/(M+1), 1) when the total gap
/// is at most 2. Throws GreedyFailed if some |q_j| exceeds 1.
Decision witness_real_interval(const CoefficientSet& s, double x, int steps = 10000);

enum class GreedyTarget {
  Auto,
  /// Keep q_j ∈ [0, 1] (total gap 1, |λ| >= 1/√M).
  UnitInterval,
  /// Keep q_j ∈ [-1, 1] (total gap <= 2, M >= 40).
  SymmetricInterval,
};

/// Greedy 2-step witness starting from p_0 = 1. Failure reports Unknown.
Decision witness_bounded_greedy(const CoefficientSet& s, const Candidate& cand, int steps = 10000,
                                GreedyTarget target = GreedyTarget::Auto);

struct ReplayResult {
  bool coefficients_valid = false;
  bool bounded = false;
  double max_abs_q = 0.0;
  double threshold = 0.0;
  int steps = 0;
};

/// Replays an eventually periodic witness for `steps` coefficients and checks
/// every |q_j| against the escape threshold of `variant` (plus `slack`).
ReplayResult replay_witness(const CoefficientSet& s, const Candidate& cand, const Witness& w, Variant variant,
                            int steps, double slack = 0.0);

/// 1-step replay at the real point 1/ρ, where ρ > 1 is the larger root of
/// t² - u t - v. States a + bρ are tracked exactly as integer pairs, so
/// expanding multipliers do not amplify rounding. S must be exact_integer.
ReplayResult replay_witness_quadratic(const CoefficientSet& s, long long u, long long v, const Witness& w, int steps);

}  // namespace sigma
