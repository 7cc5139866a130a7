#include "sigma/decide.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "sigma/error.hpp"

namespace sigma {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::In: return "In";
    case Verdict::PresumedIn: return "PresumedIn";
    case Verdict::Unknown: return "Unknown";
    case Verdict::Out: return "Out";
  }
  return "Unknown";
}

const char* to_string(Variant v) { return v == Variant::OneStep ? "OneStep" : "TwoStep"; }
const char* to_string(FirstCoeff f) { return f == FirstCoeff::One ? "One" : "AnyNonzero"; }

void SearchConfig::validate() const {
  if (max_depth < 1) throw Error(ErrorKind::InvalidInput, "max_depth must be >= 1");
  if (!(slack >= 0.0)) throw Error(ErrorKind::InvalidInput, "slack must be >= 0");
  if (node_budget < 0) throw Error(ErrorKind::InvalidInput, "node_budget must be >= 0");
}

Variant natural_variant(const Candidate& cand) { return cand.is_real() ? Variant::OneStep : Variant::TwoStep; }

namespace {

__extension__ using i128 = __int128;

bool is_integral(double v) { return std::floor(v) == v && std::fabs(v) < 1e15; }

struct StateKey {
  long long first;
  long long second;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(k.first) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(k.second) + 0x7F4A7C15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Nonzero p_0 choices ordered by |p_0|, ties to the smaller value. For
// symmetric sets -P has the same roots, so only p_0 > 0 is tried.
std::vector<double> first_choices(const CoefficientSet& s, FirstCoeff first) {
  std::vector<double> out;
  if (first == FirstCoeff::One) {
    if (!s.contains(1.0)) throw Error(ErrorKind::PreconditionViolated, "first coefficient 1 is not in S");
    out.push_back(1.0);
    return out;
  }
  for (double e : s.elements()) {
    if (e == 0.0) continue;
    if (s.symmetric() && e < 0.0) continue;
    out.push_back(e);
  }
  std::stable_sort(out.begin(), out.end(), [](double a, double b) {
    return std::fabs(a) < std::fabs(b) || (std::fabs(a) == std::fabs(b) && a < b);
  });
  return out;
}

// Element of the sorted list closest to t; ties resolve to the smaller one.
double nearest_element(std::span<const double> e, double t) {
  auto it = std::lower_bound(e.begin(), e.end(), t);
  if (it == e.end()) return e.back();
  if (it == e.begin()) return *it;
  double hi = *it, lo = *(it - 1);
  return (t - lo) <= (hi - t) ? lo : hi;
}

class PointSearch {
 public:
  PointSearch(const CoefficientSet& s, const Candidate& cand, const SearchConfig& cfg)
      : s_(s), cand_(cand), cfg_(cfg), elems_(s.elements()), m_(s.max_abs()) {
    cfg.validate();
    two_step_ = cfg.variant == Variant::TwoStep;
    if (two_step_ && cand.is_real())
      throw Error(ErrorKind::PreconditionViolated, "TwoStep search needs a non-real candidate");

    if (two_step_) {
      a_ = cand.two_r_cos();
      c_ = cand.r_sq();
      threshold_ = escape_threshold_2(s, cand);
      const double theta = cand.theta();
      const double denom = c_ - a_ - 1.0;
      if (theta > 0.0 && a_ >= 0.0 && denom > 1e-12) {
        angled_ = true;
        threshold_ = std::min(threshold_, m_ / denom);
      }
      integer_states_ = s.exact_integer() && cand.quad().has_value();
    } else {
      if (cand.theta() == 0.0) {
        mult_ = complex(cand.r(), 0.0);
      } else if (cand.theta() == Candidate::kPi) {
        mult_ = complex(-cand.r(), 0.0);
      } else {
        mult_ = cand.inverse();
      }
      threshold_ = escape_threshold_1(s, cand);
      integer_states_ = s.exact_integer() && cand.is_real() && is_integral(cand.r());
    }
    exact_ = cfg.exact && integer_states_;
    memo_ = cfg.exact_memo && integer_states_;
    if (exact_ && two_step_) {
      const auto& q = *cand.quad();
      bound_ = exact_bound(q.b, q.c, static_cast<long long>(m_));
      angled_denom_ = q.b <= 0 ? q.c + q.b - 1 : 0;
    }
    cutoff_ = exact_ ? threshold_ + 1e-9 : threshold_ + cfg.slack;
  }

  Decision run() {
    Decision d;
    d.exact = exact_;
    if (cfg_.exact && !exact_) d.note = "exact mode unavailable for this candidate; float search used";

    const std::vector<double> roots = first_choices(s_, cfg_.first_coeff);
    for (double p0 : roots) {
      Node root = two_step_ ? Node{0.0, p0, p0, 0, 0, 0} : Node{p0, 0.0, p0, 0, 0, 0};
      ++cert_.nodes;
      if (exceeds(root)) {
        ++cert_.branches_pruned;
        continue;
      }
      if (memo_ && dead_.contains(key(root))) continue;
      push(root);
      if (auto result = dfs(d)) return *result;
    }
    d.verdict = Verdict::Out;
    d.depth = cert_.depth_exhausted;
    cert_.modulo_rounding = !exact_;
    d.certificate = cert_;
    if (!exact_) d.note = d.note.empty() ? "Out modulo rounding" : d.note + "; Out modulo rounding";
    return d;
  }

 private:
  // OneStep: (x, y) = (Re q, Im q). TwoStep: (x, y) = (q_prev, q_curr).
  struct Node {
    double x;
    double y;
    double p;
    std::size_t child_begin;
    std::size_t child_end;
    std::size_t next;
  };

  static long long exact_bound(long long b, long long c, long long m) {
    // Largest B with B (sqrt(c) - 1)^2 <= M, decided in integers.
    auto fits = [&](long long bb) {
      if (bb < 0) return true;
      i128 lhs = static_cast<i128>(bb) * (c + 1) - m;
      if (lhs <= 0) return true;
      return lhs * lhs <= static_cast<i128>(4) * bb * bb * c;
    };
    (void)b;
    const double e = std::sqrt(static_cast<double>(c)) - 1.0;
    long long guess = static_cast<long long>(std::floor(static_cast<double>(m) / (e * e)));
    while (!fits(guess)) --guess;
    while (fits(guess + 1)) ++guess;
    return guess;
  }

  double value(const Node& n) const { return two_step_ ? n.y : std::hypot(n.x, n.y); }

  StateKey key(const Node& n) const { return {static_cast<long long>(n.x), static_cast<long long>(n.y)}; }

  bool exceeds(const Node& n) const {
    if (!exact_) return value(n) > cutoff_;
    const double q = std::fabs(two_step_ ? n.y : n.x);
    if (!two_step_) return q * (cand_.r() - 1.0) > m_;
    if (q > static_cast<double>(bound_)) return true;
    return angled_denom_ > 0 && q * static_cast<double>(angled_denom_) > m_;
  }

  Node child(const Node& n, double p, double w_re, double w_im) const {
    if (two_step_) return Node{n.y, p + w_re, p, 0, 0, 0};
    return Node{p + w_re, w_im, p, 0, 0, 0};
  }

  void affine_part(const Node& n, double& w_re, double& w_im) const {
    if (two_step_) {
      w_re = a_ * n.y - c_ * n.x;
      w_im = 0.0;
    } else {
      const complex w = mult_ * complex(n.x, n.y);
      w_re = w.real();
      w_im = w.imag();
    }
  }

  // Appends the coefficients whose child can stay below the cutoff, ordered
  // by increasing |q_{j+1}| with ties to the smaller coefficient.
  void generate_children(Node& n) {
    n.child_begin = children_.size();
    double w_re, w_im;
    affine_part(n, w_re, w_im);
    const double h2 = cutoff_ * cutoff_ - w_im * w_im;
    if (h2 >= 0.0) {
      const double h = std::sqrt(h2) * (1.0 + 1e-12) + 1e-12;
      const double center = -w_re;
      auto lo = std::lower_bound(elems_.begin(), elems_.end(), center - h);
      auto hi = std::upper_bound(elems_.begin(), elems_.end(), center + h);
      auto split = std::lower_bound(lo, hi, center);
      auto left = split, right = split;
      while (left != lo || right != hi) {
        if (left == lo) {
          children_.push_back(*right++);
        } else if (right == hi) {
          children_.push_back(*--left);
        } else if (center - *(left - 1) <= *right - center) {
          children_.push_back(*--left);
        } else {
          children_.push_back(*right++);
        }
      }
    }
    n.child_end = children_.size();
    n.next = n.child_begin;
    cert_.branches_pruned += static_cast<long long>(elems_.size() - (n.child_end - n.child_begin));
  }

  void push(Node n) {
    generate_children(n);
    if (exact_) path_index_.emplace(key(n), path_.size());
    path_.push_back(n);
  }

  void pop() {
    const Node& n = path_.back();
    if (exact_) path_index_.erase(key(n));
    if (memo_) dead_.insert(key(n));
    children_.resize(n.child_begin);
    path_.pop_back();
  }

  std::optional<Decision> dfs(Decision& d) {
    while (!path_.empty()) {
      Node& top = path_.back();
      if (top.next == top.child_end) {
        pop();
        continue;
      }
      const double p = children_[top.next++];
      double w_re, w_im;
      affine_part(top, w_re, w_im);
      Node next = child(top, p, w_re, w_im);
      const int j = static_cast<int>(path_.size());
      cert_.depth_exhausted = std::max(cert_.depth_exhausted, j);
      ++cert_.nodes;
      if (cfg_.node_budget > 0 && cert_.nodes > cfg_.node_budget) {
        d.verdict = Verdict::Unknown;
        d.depth = j;
        cert_.budget_exceeded = true;
        d.certificate = cert_;
        d.note = "node budget exceeded";
        return d;
      }
      if (exceeds(next)) {
        ++cert_.branches_pruned;
        continue;
      }
      if (exact_) {
        auto it = path_index_.find(key(next));
        if (it != path_index_.end()) return finish_cycle(d, it->second, p);
      }
      if (memo_ && dead_.contains(key(next))) {
        ++cert_.branches_pruned;
        continue;
      }
      if (j == cfg_.max_depth) return finish_presumed(d, p);
      push(next);
    }
    return std::nullopt;
  }

  Decision finish_presumed(Decision& d, std::optional<double> last) {
    Witness w;
    for (const Node& n : path_) w.preperiod.push_back(n.p);
    if (last) w.preperiod.push_back(*last);
    w.rule = "surviving-prefix";
    d.verdict = Verdict::PresumedIn;
    d.depth = cfg_.max_depth;
    d.witness = std::move(w);
    d.certificate = cert_;
    return d;
  }

  Decision finish_cycle(Decision& d, std::size_t start, double last) {
    Witness w;
    for (std::size_t i = 0; i <= start; ++i) w.preperiod.push_back(path_[i].p);
    for (std::size_t i = start + 1; i < path_.size(); ++i) w.period.push_back(path_[i].p);
    w.period.push_back(last);
    w.rule = "exact-cycle";
    d.verdict = Verdict::In;
    d.depth = static_cast<int>(path_.size());
    d.witness = std::move(w);
    d.certificate = cert_;
    return d;
  }

  const CoefficientSet& s_;
  const Candidate& cand_;
  const SearchConfig& cfg_;
  std::span<const double> elems_;
  double m_;
  bool two_step_ = false;
  bool angled_ = false;
  bool integer_states_ = false;
  bool exact_ = false;
  bool memo_ = false;
  complex mult_;
  double a_ = 0.0;
  double c_ = 0.0;
  double threshold_ = 0.0;
  double cutoff_ = 0.0;
  long long bound_ = 0;
  long long angled_denom_ = 0;

  std::vector<Node> path_;
  std::vector<double> children_;
  std::unordered_map<StateKey, std::size_t, StateKeyHash> path_index_;
  std::unordered_set<StateKey, StateKeyHash> dead_;
  Certificate cert_;
};

}  // namespace

Decision decide_point(const CoefficientSet& s, const Candidate& cand, const SearchConfig& cfg) {
  PointSearch search(s, cand, cfg);
  return search.run();
}

Decision decide_exact_quadratic(const CoefficientSet& s, long long b, long long c, FirstCoeff first) {
  if (!s.exact_integer()) throw Error(ErrorKind::PreconditionViolated, "exact quadratic decision needs an integer set");
  if (c < 2 || b * b - 4 * c >= 0)
    throw Error(ErrorKind::PreconditionViolated, "need c >= 2 and b^2 - 4c < 0");

  const long long m = static_cast<long long>(s.max_abs());
  // bound = floor(M / (sqrt(c) - 1)^2), compared exactly.
  auto within = [&](long long bb) {
    i128 lhs = static_cast<i128>(bb) * (c + 1) - m;
    return lhs <= 0 || lhs * lhs <= static_cast<i128>(4) * bb * bb * c;
  };
  long long bound = 0;
  while (within(bound + 1)) ++bound;

  const long long width = 2 * bound + 1;
  auto index = [&](long long u, long long v) { return static_cast<std::size_t>((u + bound) * width + (v + bound)); };
  enum : unsigned char { kWhite, kGray, kBlack };
  std::vector<unsigned char> color(static_cast<std::size_t>(width * width), kWhite);

  std::vector<long long> elems;
  for (double e : s.elements()) elems.push_back(static_cast<long long>(e));

  // Successor coefficients of (u, v), sorted by |next| then by p.
  auto successors = [&](long long u, long long v) {
    std::vector<std::pair<long long, long long>> out;  // (p, next)
    for (long long p : elems) {
      long long next = p - b * v - c * u;
      if (next >= -bound && next <= bound) out.emplace_back(p, next);
    }
    std::sort(out.begin(), out.end(), [](auto x, auto y) {
      return std::llabs(x.second) < std::llabs(y.second) || (std::llabs(x.second) == std::llabs(y.second) && x.first < y.first);
    });
    return out;
  };

  struct Frame {
    long long u, v, p_in;
    std::vector<std::pair<long long, long long>> succ;
    std::size_t next;
  };

  Certificate cert;
  Decision d;
  d.exact = true;

  std::vector<long long> p0s;
  for (double e : first_choices(s, first)) p0s.push_back(static_cast<long long>(e));
  std::stable_sort(p0s.begin(), p0s.end(), [](long long x, long long y) { return std::llabs(x) < std::llabs(y); });

  for (long long p0 : p0s) {
    if (std::llabs(p0) > bound) {
      ++cert.branches_pruned;
      continue;
    }
    std::vector<std::pair<long long, long long>> starts;  // (p1, q1)
    for (long long p1 : elems) {
      long long q1 = p1 - b * p0;
      if (q1 >= -bound && q1 <= bound) starts.emplace_back(p1, q1);
      else ++cert.branches_pruned;
    }
    std::stable_sort(starts.begin(), starts.end(), [](auto x, auto y) {
      return std::llabs(x.second) < std::llabs(y.second) || (std::llabs(x.second) == std::llabs(y.second) && x.first < y.first);
    });
    for (auto [p1, q1] : starts) {
      if (color[index(p0, q1)] != kWhite) continue;
      std::vector<Frame> stack;
      stack.push_back({p0, q1, p1, successors(p0, q1), 0});
      color[index(p0, q1)] = kGray;
      ++cert.nodes;
      while (!stack.empty()) {
        cert.depth_exhausted = std::max(cert.depth_exhausted, static_cast<int>(stack.size()) + 1);
        Frame& top = stack.back();
        if (top.next == top.succ.size()) {
          color[index(top.u, top.v)] = kBlack;
          stack.pop_back();
          continue;
        }
        auto [p, next] = top.succ[top.next++];
        const long long nu = top.v, nv = next;
        const unsigned char col = color[index(nu, nv)];
        if (col == kBlack) {
          ++cert.branches_pruned;
          continue;
        }
        if (col == kGray) {
          // Cycle closes at the frame holding (nu, nv).
          std::size_t at = 0;
          while (stack[at].u != nu || stack[at].v != nv) ++at;
          Witness w;
          w.rule = "exact-cycle";
          w.preperiod.push_back(static_cast<double>(p0));
          for (std::size_t i = 0; i <= at; ++i) w.preperiod.push_back(static_cast<double>(stack[i].p_in));
          for (std::size_t i = at + 1; i < stack.size(); ++i) w.period.push_back(static_cast<double>(stack[i].p_in));
          w.period.push_back(static_cast<double>(p));
          w.max_abs_q = static_cast<double>(bound);
          d.verdict = Verdict::In;
          d.depth = static_cast<int>(w.preperiod.size() + w.period.size());
          d.witness = std::move(w);
          d.certificate = cert;
          return d;
        }
        color[index(nu, nv)] = kGray;
        ++cert.nodes;
        stack.push_back({nu, nv, p, successors(nu, nv), 0});
      }
    }
  }
  d.verdict = Verdict::Out;
  d.depth = cert.depth_exhausted;
  d.certificate = cert;
  d.note = "state graph with |q| <= " + std::to_string(bound) + " has no reachable cycle";
  return d;
}

Decision witness_real_interval(const CoefficientSet& s, double x, int steps) {
  if (!is_normalized(s) || !s.symmetric())
    throw Error(ErrorKind::PreconditionViolated, "real-interval witness needs a normalized symmetric set");
  const double m = s.max_abs();
  if (total_gap(s) > 2.0 + kSetTolerance)
    throw Error(ErrorKind::PreconditionViolated, "real-interval witness needs total gap <= 2");
  const double low = 1.0 / (m + 1.0);
  if (!(x >= low * (1.0 - 1e-12) && x < 1.0))
    throw Error(ErrorKind::PreconditionViolated, "x must lie in [1/(M+1), 1)");
  if (steps < 1) throw Error(ErrorKind::InvalidInput, "steps must be >= 1");

  const double r = std::min(1.0 / x, m + 1.0);
  auto e = s.elements();
  Witness w;
  w.rule = "greedy-real";
  double q = 1.0;
  w.preperiod.push_back(1.0);
  double max_q = 1.0;
  for (int j = 1; j <= steps; ++j) {
    const double rq = r * q;
    double p;
    if (std::fabs(rq) >= m) {
      p = rq > 0.0 ? -m : m;
    } else {
      p = nearest_element(e, -rq);
    }
    q = p + rq;
    max_q = std::max(max_q, std::fabs(q));
    if (w.preperiod.size() < 32) w.preperiod.push_back(p);
    if (std::fabs(q) > 1.0)
      throw Error(ErrorKind::GreedyFailed, "greedy real witness left [-1, 1] at step " + std::to_string(j));
  }
  w.max_abs_q = max_q;
  Decision d;
  d.verdict = Verdict::In;
  d.depth = steps;
  d.witness = std::move(w);
  return d;
}

Decision witness_bounded_greedy(const CoefficientSet& s, const Candidate& cand, int steps, GreedyTarget target) {
  if (!is_normalized(s) || !s.symmetric())
    throw Error(ErrorKind::PreconditionViolated, "bounded greedy needs a normalized symmetric set");
  if (cand.is_real()) throw Error(ErrorKind::PreconditionViolated, "bounded greedy needs a non-real candidate");
  if (cand.theta() > Candidate::kPi / 2 + 1e-15)
    throw Error(ErrorKind::PreconditionViolated, "bounded greedy needs cos(theta) >= 0");
  if (steps < 1) throw Error(ErrorKind::InvalidInput, "steps must be >= 1");

  const double m = s.max_abs();
  if (target == GreedyTarget::Auto) {
    const bool gap_one = s.size() >= 2 && total_gap(s) <= 1.0 + kSetTolerance;
    target = gap_one && cand.modulus() >= (1.0 / std::sqrt(m)) * (1.0 - 1e-12) ? GreedyTarget::UnitInterval
                                                                               : GreedyTarget::SymmetricInterval;
  }
  const double lo = target == GreedyTarget::UnitInterval ? 0.0 : -1.0;
  const double hi = 1.0;
  const double centre = (lo + hi) / 2.0;
  constexpr double kTol = 1e-9;

  auto e = s.elements();
  const double a = cand.two_r_cos();
  const double c = cand.r_sq();
  Witness w;
  w.rule = target == GreedyTarget::UnitInterval ? "greedy-2step-[0,1]" : "greedy-2step-[-1,1]";
  w.preperiod.push_back(1.0);
  double q_prev = 0.0, q_curr = 1.0;
  double max_q = 1.0;
  Decision d;
  for (int j = 1; j <= steps; ++j) {
    const double wv = a * q_curr - c * q_prev;
    // Closest to the centre; it lands inside whenever any choice does.
    const double p = nearest_element(e, centre - wv);
    const double q = p + wv;
    q_prev = q_curr;
    q_curr = q;
    max_q = std::max(max_q, std::fabs(q));
    if (w.preperiod.size() < 32) w.preperiod.push_back(p);
    if (q < lo - kTol || q > hi + kTol) {
      w.max_abs_q = max_q;
      d.verdict = Verdict::Unknown;
      d.depth = j;
      d.witness = std::move(w);
      d.note = "GreedyFailed: q left the target interval at step " + std::to_string(j);
      return d;
    }
  }
  w.max_abs_q = max_q;
  d.verdict = Verdict::In;
  d.depth = steps;
  d.witness = std::move(w);
  return d;
}

ReplayResult replay_witness(const CoefficientSet& s, const Candidate& cand, const Witness& w, Variant variant,
                            int steps, double slack) {
  ReplayResult res;
  res.steps = steps;
  const bool implicit_zero_tail = w.period.empty();
  res.coefficients_valid = !w.preperiod.empty() || !w.period.empty();
  for (double p : w.preperiod) res.coefficients_valid &= s.contains(p);
  for (double p : w.period) res.coefficients_valid &= s.contains(p);
  if (implicit_zero_tail) res.coefficients_valid &= s.contains_zero();
  auto coeff = [&](int j) -> double {
    const auto uj = static_cast<std::size_t>(j);
    if (uj < w.preperiod.size()) return w.preperiod[uj];
    if (implicit_zero_tail) return 0.0;
    return w.period[(uj - w.preperiod.size()) % w.period.size()];
  };
  if (!res.coefficients_valid || coeff(0) == 0.0) {
    res.coefficients_valid = false;
    return res;
  }

  double max_q = 0.0;
  if (variant == Variant::OneStep) {
    res.threshold = escape_threshold_1(s, cand);
    complex mult = cand.inverse();
    if (cand.theta() == 0.0) mult = complex(cand.r(), 0.0);
    if (cand.theta() == Candidate::kPi) mult = complex(-cand.r(), 0.0);
    complex q = coeff(0);
    max_q = std::abs(q);
    for (int j = 1; j < steps; ++j) {
      q = coeff(j) + mult * q;
      max_q = std::max(max_q, std::abs(q));
    }
  } else {
    res.threshold = escape_threshold_2(s, cand);
    const double a = cand.two_r_cos(), c = cand.r_sq();
    const double denom = c - a - 1.0;
    if (cand.theta() > 0.0 && a >= 0.0 && denom > 1e-12) res.threshold = std::min(res.threshold, s.max_abs() / denom);
    State2 st{0.0, coeff(0)};
    max_q = std::fabs(st.q_curr);
    for (int j = 1; j < steps; ++j) {
      st = step2(st, coeff(j), a, c);
      max_q = std::max(max_q, std::fabs(st.q_curr));
    }
  }
  res.max_abs_q = max_q;
  res.bounded = max_q <= res.threshold + slack;
  return res;
}

ReplayResult replay_witness_quadratic(const CoefficientSet& s, long long u, long long v, const Witness& w, int steps) {
  if (!s.exact_integer()) throw Error(ErrorKind::PreconditionViolated, "exact replay needs an integer set");
  const double disc = static_cast<double>(u) * static_cast<double>(u) + 4.0 * static_cast<double>(v);
  if (disc <= 0.0) throw Error(ErrorKind::PreconditionViolated, "t^2 - u t - v needs real roots");
  const double rho = (static_cast<double>(u) + std::sqrt(disc)) / 2.0;
  if (!(rho > 1.0)) throw Error(ErrorKind::PreconditionViolated, "larger root must exceed 1");

  ReplayResult res;
  res.steps = steps;
  res.threshold = s.max_abs() / (rho - 1.0);
  const bool zero_tail = w.period.empty();
  res.coefficients_valid = !w.preperiod.empty() || !w.period.empty();
  for (double p : w.preperiod) res.coefficients_valid &= s.contains(p) && is_integral(p);
  for (double p : w.period) res.coefficients_valid &= s.contains(p) && is_integral(p);
  if (zero_tail) res.coefficients_valid &= s.contains_zero();
  if (!res.coefficients_valid) return res;
  auto coeff = [&](int j) -> long long {
    const auto uj = static_cast<std::size_t>(j);
    if (uj < w.preperiod.size()) return static_cast<long long>(w.preperiod[uj]);
    if (zero_tail) return 0;
    return static_cast<long long>(w.period[(uj - w.preperiod.size()) % w.period.size()]);
  };
  if (coeff(0) == 0) {
    res.coefficients_valid = false;
    return res;
  }
  constexpr long long kLimit = 1LL << 50;
  long long a = coeff(0), b = 0;
  double max_q = std::fabs(static_cast<double>(a));
  bool ok = true;
  for (int j = 1; j < steps && ok; ++j) {
    const long long na = coeff(j) + b * v;
    const long long nb = a + b * u;
    a = na;
    b = nb;
    if (std::llabs(a) > kLimit || std::llabs(b) > kLimit) ok = false;
    max_q = std::max(max_q, std::fabs(static_cast<double>(a) + static_cast<double>(b) * rho));
  }
  res.max_abs_q = max_q;
  res.bounded = ok && max_q <= res.threshold;
  return res;
}

}  // namespace sigma
