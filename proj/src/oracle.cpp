#include "sigma/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "sigma/error.hpp"
#include "sigma/parallel.hpp"
#include "sigma/polyroots.hpp"

namespace sigma {

namespace {

constexpr long long kChunkSize = 1 << 15;
constexpr double kImagCut = 1e-8;

long long checked_mul(long long a, long long b) {
  if (a != 0 && b > std::numeric_limits<long long>::max() / a)
    throw Error(ErrorKind::BudgetExceeded, "polynomial family too large to count");
  return a * b;
}

}  // namespace

PolynomialFamily::PolynomialFamily(const CoefficientSet& s, int n, FirstCoeff mode, bool reflect)
    : n_(n), reflect_(reflect) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "degree bound must be >= 1");
  if (reflect && !s.symmetric()) throw Error(ErrorKind::PreconditionViolated, "reflection needs a symmetric set");
  elems_.assign(s.elements().begin(), s.elements().end());
  for (double e : elems_)
    if (e != 0.0) nonzero_.push_back(e);
  if (mode == FirstCoeff::One) {
    if (!s.contains(1.0)) throw Error(ErrorKind::PreconditionViolated, "first coefficient 1 is not in S");
    first_.push_back(1.0);
  } else {
    for (double e : nonzero_)
      if (!s.symmetric() || e > 0.0) first_.push_back(e);
  }
  for (int d = 1; d <= n; ++d) {
    const long long count = degree_size(d);
    for (long long b = 0; b < count; b += kChunkSize) chunks_.push_back({d, b, std::min(kChunkSize, count - b)});
    total_ += count;
  }
}

long long PolynomialFamily::degree_size(int degree) const {
  long long count = static_cast<long long>(first_.size());
  for (int j = 1; j < degree; ++j) count = checked_mul(count, static_cast<long long>(elems_.size()));
  return checked_mul(count, static_cast<long long>(nonzero_.size()));
}

std::vector<double> PolynomialFamily::at(int degree, long long index) const {
  std::vector<double> poly(static_cast<std::size_t>(degree) + 1);
  const auto nf = static_cast<long long>(first_.size());
  const auto ns = static_cast<long long>(elems_.size());
  poly[0] = first_[static_cast<std::size_t>(index % nf)];
  index /= nf;
  for (int j = 1; j < degree; ++j) {
    poly[static_cast<std::size_t>(j)] = elems_[static_cast<std::size_t>(index % ns)];
    index /= ns;
  }
  poly[static_cast<std::size_t>(degree)] = nonzero_[static_cast<std::size_t>(index)];
  return poly;
}

bool PolynomialFamily::skipped(std::span<const double> poly) const {
  if (!reflect_) return false;
  for (std::size_t j = 1; j < poly.size(); j += 2)
    if (poly[j] != 0.0) return poly[j] < 0.0;
  return false;
}

void PolynomialFamily::for_each_in_chunk(std::size_t chunk, const std::function<void(std::span<const double>)>& fn) const {
  const Chunk& c = chunks_.at(chunk);
  const auto d = static_cast<std::size_t>(c.degree);
  // Odometer over digit positions, least significant at p_0.
  std::vector<std::size_t> digit(d + 1);
  std::vector<double> poly = at(c.degree, c.begin);
  {
    long long index = c.begin;
    const auto nf = static_cast<long long>(first_.size());
    const auto ns = static_cast<long long>(elems_.size());
    digit[0] = static_cast<std::size_t>(index % nf);
    index /= nf;
    for (std::size_t j = 1; j < d; ++j) {
      digit[j] = static_cast<std::size_t>(index % ns);
      index /= ns;
    }
    digit[d] = static_cast<std::size_t>(index);
  }
  auto radix = [&](std::size_t j) {
    return j == 0 ? first_.size() : (j == d ? nonzero_.size() : elems_.size());
  };
  auto value = [&](std::size_t j, std::size_t k) { return j == 0 ? first_[k] : (j == d ? nonzero_[k] : elems_[k]); };
  for (long long i = 0; i < c.count; ++i) {
    if (!skipped(poly)) fn(poly);
    for (std::size_t j = 0; j <= d; ++j) {
      if (++digit[j] < radix(j)) {
        poly[j] = value(j, digit[j]);
        break;
      }
      digit[j] = 0;
      poly[j] = value(j, 0);
    }
  }
}

DiscRoots disc_roots(std::span<const double> poly, const OracleConfig& cfg) {
  DiscRoots out;
  std::vector<complex> all;
  try {
    all = polynomial_roots(poly);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::RootFindingFailure) throw;
    out.failed = true;
    return out;
  }
  double scale = 0.0;
  for (double p : poly) scale = std::max(scale, std::fabs(p));
  const double tol = cfg.tau_root * static_cast<double>(poly.size()) * scale;
  for (const complex& z : all) {
    if (!(std::abs(z) < 1.0 - cfg.disc_margin)) continue;
    const double res = std::abs(evaluate(poly, z));
    if (res <= tol) {
      out.z.push_back(z);
      out.residual.push_back(res);
    } else {
      out.failed = true;
    }
  }
  return out;
}

OracleRootSet enumerate_roots(const CoefficientSet& s, int n, FirstCoeff mode, const OracleConfig& cfg) {
  PolynomialFamily family(s, n, mode);
  if (family.size() > cfg.budget)
    throw Error(ErrorKind::BudgetExceeded, "family has " + std::to_string(family.size()) + " polynomials, budget " +
                                               std::to_string(cfg.budget));
  std::vector<std::vector<OracleRoot>> per_chunk(family.chunk_count());
  std::vector<long long> failures(family.chunk_count(), 0);
  parallel_for(family.chunk_count(), cfg.threads, [&](std::size_t c) {
    family.for_each_in_chunk(c, [&](std::span<const double> poly) {
      DiscRoots dr = disc_roots(poly, cfg);
      if (dr.failed) ++failures[c];
      for (std::size_t i = 0; i < dr.z.size(); ++i)
        per_chunk[c].push_back({dr.z[i], std::vector<double>(poly.begin(), poly.end()), dr.residual[i]});
    });
  });
  OracleRootSet set;
  set.degree_bound = n;
  set.mode = mode;
  set.polynomials = family.size();
  for (std::size_t c = 0; c < per_chunk.size(); ++c) {
    set.failures += failures[c];
    for (auto& r : per_chunk[c]) set.roots.push_back(std::move(r));
  }
  std::stable_sort(set.roots.begin(), set.roots.end(), [](const OracleRoot& a, const OracleRoot& b) {
    if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
    if (a.poly != b.poly) return std::lexicographical_compare(a.poly.rbegin(), a.poly.rend(), b.poly.rbegin(), b.poly.rend());
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    return a.z.imag() < b.z.imag();
  });
  return set;
}

ProductReport verify_product_inequality(const CoefficientSet& s, int n, const OracleConfig& cfg, double tau_ineq) {
  PolynomialFamily family(s, n, FirstCoeff::One);
  if (family.size() > cfg.budget) throw Error(ErrorKind::BudgetExceeded, "product inequality family exceeds budget");
  struct Acc {
    long long polys = 0;
    double max_product = 0.0;
    std::vector<double> max_poly;
    std::vector<std::vector<double>> violations;
  };
  std::vector<Acc> acc(family.chunk_count());
  parallel_for(family.chunk_count(), cfg.threads, [&](std::size_t c) {
    Acc& a = acc[c];
    family.for_each_in_chunk(c, [&](std::span<const double> poly) {
      ++a.polys;
      DiscRoots dr = disc_roots(poly, cfg);
      if (dr.z.empty()) return;
      double product = 1.0, best_single = 0.0;
      bool any_large = false;
      for (const complex& z : dr.z) {
        const double f = 1.0 / std::abs(z) - 1.0;
        best_single = std::max(best_single, f);
        if (f >= 1.0) {
          product *= f;
          any_large = true;
        }
      }
      if (!any_large) product = best_single;
      double bound = 0.0;
      for (double p : poly) bound = std::max(bound, std::fabs(p));
      if (product > a.max_product) {
        a.max_product = product;
        a.max_poly.assign(poly.begin(), poly.end());
      }
      if (product > bound + tau_ineq) a.violations.emplace_back(poly.begin(), poly.end());
    });
  });
  ProductReport rep;
  rep.tau_ineq = tau_ineq;
  for (auto& a : acc) {
    rep.polynomials += a.polys;
    if (a.max_product > rep.max_product) {
      rep.max_product = a.max_product;
      rep.max_poly = a.max_poly;
    }
    for (auto& v : a.violations) rep.violating_polys.push_back(std::move(v));
  }
  rep.violations = static_cast<long long>(rep.violating_polys.size());
  return rep;
}

MinModulusReport min_modulus_nonreal(const CoefficientSet& s, int n, FirstCoeff mode, const OracleConfig& cfg) {
  if (!s.symmetric()) throw Error(ErrorKind::PreconditionViolated, "min_modulus_nonreal needs a symmetric set");
  PolynomialFamily family(s, n, mode, true);
  if (family.size() > cfg.budget) throw Error(ErrorKind::BudgetExceeded, "min-modulus family exceeds budget");
  struct Acc {
    double best = std::numeric_limits<double>::infinity();
    complex z;
    std::vector<double> poly;
  };
  std::vector<Acc> acc(family.chunk_count());
  parallel_for(family.chunk_count(), cfg.threads, [&](std::size_t c) {
    Acc& a = acc[c];
    family.for_each_in_chunk(c, [&](std::span<const double> poly) {
      DiscRoots dr = disc_roots(poly, cfg);
      for (const complex& z : dr.z) {
        if (std::fabs(z.imag()) <= kImagCut) continue;
        const double mod = std::abs(z);
        if (mod < a.best) {
          a.best = mod;
          a.z = z;
          a.poly.assign(poly.begin(), poly.end());
        }
      }
    });
  });
  MinModulusReport rep;
  rep.polynomials = family.size();
  rep.modulus = std::numeric_limits<double>::infinity();
  for (auto& a : acc) {
    if (a.best < rep.modulus) {
      rep.modulus = a.best;
      rep.z = a.z;
      rep.poly = a.poly;
    }
  }
  if (!std::isfinite(rep.modulus)) throw Error(ErrorKind::EmptyRootSet, "no non-real disc roots in the family");
  return rep;
}

Candidate candidate_for_root(complex z) {
  if (std::fabs(z.imag()) <= kImagCut) return Candidate::from_point(complex(z.real(), 0.0));
  return Candidate::from_point(z);
}

CrossCheckReport cross_check_decide(const CoefficientSet& s, int n, long long sample_size, const SearchConfig& cfg,
                                    const OracleConfig& ocfg) {
  // For symmetric S, P(-z) is in the family and the search at -z mirrors the
  // one at z exactly, so one polynomial of each reflected pair suffices.
  PolynomialFamily family(s, n, cfg.first_coeff, s.symmetric());
  // Stride sampling per degree, sized proportionally to the degree's share.
  struct Item {
    int degree;
    long long index;
  };
  std::vector<Item> items;
  for (int d = 1; d <= n; ++d) {
    const long long count = family.degree_size(d);
    long long want = count;
    if (sample_size > 0) {
      const double share = static_cast<double>(count) / static_cast<double>(family.size());
      want = std::min(count, std::max<long long>(1, std::llround(share * static_cast<double>(sample_size))));
    }
    for (long long i = 0; i < want; ++i) {
      const long long idx = want == count ? i : static_cast<long long>(static_cast<long double>(i) * static_cast<long double>(count) / static_cast<long double>(want));
      items.push_back({d, idx});
    }
  }
  if (static_cast<long long>(items.size()) > ocfg.budget) throw Error(ErrorKind::BudgetExceeded, "cross-check sample exceeds budget");

  struct Acc {
    long long polys = 0, roots = 0, in_like = 0, unknown = 0;
    std::vector<Contradiction> bad;
  };
  const std::size_t block = 256;
  const std::size_t blocks = (items.size() + block - 1) / block;
  std::vector<Acc> acc(blocks);
  parallel_for(blocks, ocfg.threads, [&](std::size_t b) {
    Acc& a = acc[b];
    for (std::size_t i = b * block; i < std::min(items.size(), (b + 1) * block); ++i) {
      const std::vector<double> poly = family.at(items[i].degree, items[i].index);
      if (family.skipped(poly)) continue;
      ++a.polys;
      DiscRoots dr = disc_roots(poly, ocfg);
      for (const complex& z : dr.z) {
        const Candidate cand = candidate_for_root(z);
        SearchConfig local = cfg;
        local.variant = natural_variant(cand);
        local.exact = false;
        const Decision d = decide_point(s, cand, local);
        ++a.roots;
        if (d.verdict == Verdict::Out) a.bad.push_back({z, poly, d});
        else if (d.verdict == Verdict::Unknown) ++a.unknown;
        else ++a.in_like;
      }
    }
  });
  CrossCheckReport rep;
  for (auto& a : acc) {
    rep.polynomials_checked += a.polys;
    rep.roots_checked += a.roots;
    rep.in_like += a.in_like;
    rep.unknown += a.unknown;
    for (auto& c : a.bad) rep.contradictions.push_back(std::move(c));
  }
  return rep;
}

void write_roots_csv(std::ostream& out, const OracleRootSet& set) {
  std::ostringstream line;
  line.precision(17);
  out << "re,im,modulus,degree,coeff_vector,residual\n";
  for (const OracleRoot& r : set.roots) {
    line.str("");
    line << r.z.real() << ',' << r.z.imag() << ',' << std::abs(r.z) << ',' << (r.poly.size() - 1) << ',';
    for (std::size_t j = 0; j < r.poly.size(); ++j) line << (j ? ";" : "") << r.poly[j];
    line << ',' << r.residual << '\n';
    out << line.str();
  }
}

}  // namespace sigma
