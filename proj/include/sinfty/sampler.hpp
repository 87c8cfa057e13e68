#pragma once

// Monte Carlo estimate of the points at infinity of a map image or of a
// semialgebraic set, and the connectivity obstruction built on it.
//
// Samples are drawn in fixed-size batches. Batch b at radius index r uses its
// own generator seeded from (seed, r, b), and batches are merged in order, so
// the result does not depend on the number of worker threads.

#include "sinfty/clustering.hpp"
#include "sinfty/projective.hpp"
#include "sinfty/regular_map.hpp"
#include "sinfty/text.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace sinfty {

struct SampleConfig {
  std::vector<double> radii{1e4, 1e6, 1e8};
  std::size_t n_samples = 20000;  // per radius
  double eps = 0.05;
  std::uint64_t seed = 42;
  double max_norm = 1e8;  // largest domain norm for map sampling
  std::vector<ProjPoint> candidates;
  unsigned threads = 0;  // 0 = hardware concurrency; never changes the output

  void validate() const {
    if (radii.empty()) throw std::invalid_argument("sample config: radii must be nonempty");
    for (std::size_t i = 0; i < radii.size(); ++i) {
      if (!(radii[i] > 0) || !std::isfinite(radii[i]))
        throw std::invalid_argument("sample config: radii must be positive and finite");
      if (i && !(radii[i] > radii[i - 1])) throw std::invalid_argument("sample config: radii must be strictly increasing");
    }
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("sample config: eps must lie in (0, 1)");
    if (n_samples < 100) throw std::invalid_argument("sample config: n_samples must be at least 100");
    if (!(max_norm > 1) || !std::isfinite(max_norm)) throw std::invalid_argument("sample config: max_norm must exceed 1");
  }
};

struct ClusterInfo {
  std::size_t size = 0;
  std::vector<double> centroid;
  double extent = 0;
  std::optional<ProjPoint> nearest_candidate;
  double candidate_distance = 0;
};

struct RadiusReport {
  double radius = 0;
  std::size_t attempts = 0;
  std::size_t kept = 0;
  std::size_t component_count = 0;
  std::vector<ClusterInfo> clusters;
  double acceptance() const { return attempts ? double(kept) / double(attempts) : 0.0; }
};

struct InfinityReport {
  std::string source;  // "map" or "set"
  std::size_t dim = 0;
  double eps = 0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  std::vector<RadiusReport> radii;
  std::optional<std::size_t> stable_count;  // nullopt = unstable
  bool possibly_empty = false;
  std::string message;
  std::vector<std::vector<double>> directions;  // kept at the largest radius
  std::vector<std::size_t> labels;              // cluster of each direction
  std::vector<std::string> warnings;
  std::size_t exact_evaluations = 0;

  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> out;
    for (const auto& r : radii) out.push_back(r.component_count);
    return out;
  }
  const std::vector<ClusterInfo>& clusters() const { return radii.back().clusters; }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t batch_seed(std::uint64_t seed, std::size_t radius_index, std::size_t batch) {
  return splitmix64(splitmix64(seed ^ splitmix64(radius_index + 1)) + batch);
}

constexpr std::size_t kBatch = 500;

/// Runs job(b) for b in [0, batches) on worker threads; results stay indexed by b.
template <class Result, class Job>
std::vector<Result> run_batches(std::size_t batches, unsigned threads, Job job) {
  std::vector<Result> out(batches);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, batches));
  if (threads <= 1) {
    for (std::size_t b = 0; b < batches; ++b) out[b] = job(b);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t b = next++; b < batches; b = next++) {
        try {
          out[b] = job(b);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

inline std::vector<double> random_unit(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    std::vector<double> u(n);
    double norm = 0;
    for (auto& x : u) {
      x = gauss(rng);
      norm += x * x;
    }
    norm = std::sqrt(norm);
    if (norm < 1e-12) continue;
    for (auto& x : u) x /= norm;
    return u;
  }
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return std::exp(std::log(lo) + unit(rng) * (std::log(hi) - std::log(lo)));
}

/// Domain sample for map sampling. Kinds rotate with the sample index:
///   0  x = s u, u uniform on the sphere
///   1  x = s u / |u|, u a small integer vector
///   2  x_j = c_j s^k_j + b_j with small rational c, b and k in {-2..2}
///   3  the same with random real c, b
/// s is log-uniform and capped so that |x| stays below max_norm.
inline std::vector<double> domain_sample(std::mt19937_64& rng, std::size_t n, std::size_t kind, double max_norm) {
  std::uniform_int_distribution<int> small(-3, 3), expo(-2, 2), coin(0, 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(n);
  if (kind == 0 || kind == 1) {
    std::vector<double> u;
    if (kind == 0) {
      u = random_unit(rng, n);
    } else {
      std::vector<double> v(n);
      double norm = 0;
      do {
        norm = 0;
        for (auto& c : v) {
          c = small(rng);
          norm += c * c;
        }
      } while (norm == 0);
      norm = std::sqrt(norm);
      for (auto& c : v) c /= norm;
      u = v;
    }
    double s = log_uniform(rng, 1.0, max_norm);
    for (std::size_t j = 0; j < n; ++j) x[j] = s * u[j];
    return x;
  }
  static constexpr double kCoeffs[] = {1, -1, 2, -2, 0.5, -0.5, 3, -3, 1.0 / 3, -1.0 / 3, 1.5, -1.5, 2.0 / 3, -2.0 / 3};
  std::vector<int> k(n);
  std::vector<double> c(n), b(n, 0.0);
  bool grows = false;
  for (std::size_t j = 0; j < n; ++j) {
    k[j] = expo(rng);
    grows = grows || k[j] > 0;
  }
  if (!grows) k[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] = 1 + coin(rng);
  for (std::size_t j = 0; j < n; ++j) {
    if (kind == 2) {
      c[j] = kCoeffs[std::uniform_int_distribution<std::size_t>(0, std::size(kCoeffs) - 1)(rng)];
      if (k[j] <= 0 && coin(rng)) b[j] = small(rng);
    } else {
      c[j] = (coin(rng) ? 1 : -1) * std::pow(10.0, -2.0 + 4.0 * unit(rng));
      if (k[j] <= 0 && coin(rng)) b[j] = -3.0 + 6.0 * unit(rng);
    }
  }
  double s_max = max_norm;
  for (std::size_t j = 0; j < n; ++j)
    if (k[j] > 0) s_max = std::min(s_max, std::pow(max_norm / (std::fabs(c[j]) * std::sqrt(double(n))), 1.0 / k[j]));
  s_max = std::max(s_max, 2.0);
  double s = log_uniform(rng, 1.0, s_max);
  for (std::size_t j = 0; j < n; ++j) x[j] = c[j] * std::pow(s, k[j]) + b[j];
  return x;
}

struct ImageSample {
  bool pole = false;                  // the denominator vanished (or nearly)
  double log2norm = -INFINITY;        // log2 |f(x)|
  std::vector<double> direction;      // f(x)/|f(x)|, canonical sign
  bool exact = false;
};

inline double float_error(const MPoly& p, const MPoly::FloatValue& v) {
  const double gamma = double(p.terms().size() + (p.is_zero() ? 0 : p.total_degree().value()) + 2) * 0x1p-52;
  return gamma * v.magnitude;
}

/// f(x) as a log-norm and a direction. Floats when the rounding bound is
/// comfortably small, exact rationals from the same (dyadic) point otherwise.
inline ImageSample evaluate_image(const RegularMap& f, const std::vector<double>& x) {
  constexpr double kRel = 1e-10;
  ImageSample out;
  const std::size_t m = f.m();
  bool reliable = true;
  auto d = f.denominator().evaluate_double(x);
  if (!d.finite || float_error(f.denominator(), d) > kRel * std::fabs(d.value)) reliable = false;
  if (reliable && std::fabs(d.value) < 1e-30) {
    out.pole = true;
    return out;
  }
  std::vector<double> vals(m);
  double err2 = 0, norm2 = 0;
  if (reliable) {
    for (std::size_t j = 0; j < m && reliable; ++j) {
      auto v = f.numerators()[j].evaluate_double(x);
      if (!v.finite) reliable = false;
      vals[j] = v.value;
      double e = float_error(f.numerators()[j], v);
      err2 += e * e;
      norm2 += v.value * v.value;
    }
    if (reliable && !std::isfinite(norm2)) reliable = false;
    if (reliable && norm2 > 0 && std::sqrt(err2) > kRel * std::sqrt(norm2)) reliable = false;
    if (reliable && norm2 == 0 && err2 > 0) reliable = false;
  }
  if (reliable) {
    if (norm2 == 0) return out;
    double norm = std::sqrt(norm2);
    out.log2norm = std::log2(norm) - std::log2(std::fabs(d.value));
    double s = d.value < 0 ? -1.0 : 1.0;
    out.direction.resize(m);
    for (std::size_t j = 0; j < m; ++j) out.direction[j] = s * vals[j] / norm;
    out.direction = canonical_direction(std::move(out.direction));
    return out;
  }

  out.exact = true;
  std::vector<Rat> point;
  point.reserve(x.size());
  for (double v : x) point.push_back(rat_from_double(v));
  Rat den = f.denominator().evaluate(point);
  if (den == 0) {
    out.pole = true;
    return out;
  }
  std::vector<Rat> num(m);
  long top = LONG_MIN;
  for (std::size_t j = 0; j < m; ++j) {
    num[j] = f.numerators()[j].evaluate(point);
    if (num[j] != 0) top = std::max(top, static_cast<long>(std::floor(log2_abs(num[j]))));
  }
  if (top == LONG_MIN) return out;
  double norm2e = 0;
  out.direction.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    Rat scaled = num[j];
    if (top > 0) mpq_div_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<unsigned long>(top));
    if (top < 0) mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<unsigned long>(-top));
    out.direction[j] = to_double(scaled);
    norm2e += out.direction[j] * out.direction[j];
  }
  double norm = std::sqrt(norm2e);
  out.log2norm = std::log2(norm) + double(top) - log2_abs(den);
  double s = den < 0 ? -1.0 : 1.0;
  for (auto& v : out.direction) v = s * v / norm;
  out.direction = canonical_direction(std::move(out.direction));
  return out;
}

inline RadiusReport summarize(double radius, std::size_t attempts, const std::vector<std::vector<double>>& dirs,
                              const Clustering& cl, const std::vector<ProjPoint>& candidates) {
  RadiusReport r;
  r.radius = radius;
  r.attempts = attempts;
  r.kept = dirs.size();
  r.component_count = cl.count();
  for (const auto& c : cl.clusters) {
    ClusterInfo info;
    info.size = c.members.size();
    info.centroid = c.centroid;
    info.extent = c.extent;
    for (const auto& p : candidates) {
      if (!p.at_infinity() || p.dim() != c.centroid.size()) continue;
      double dist = antipodal_distance(p.direction(), c.centroid);
      if (!info.nearest_candidate || dist < info.candidate_distance) {
        info.nearest_candidate = p;
        info.candidate_distance = dist;
      }
    }
    r.clusters.push_back(std::move(info));
  }
  return r;
}

inline void finish_report(InfinityReport& rep) {
  const auto counts = rep.counts();
  bool all_kept = std::all_of(rep.radii.begin(), rep.radii.end(), [](const RadiusReport& r) { return r.kept > 0; });
  if (all_kept && std::all_of(counts.begin(), counts.end(), [&](std::size_t c) { return c == counts.front(); }))
    rep.stable_count = counts.front();
}

}  // namespace detail

/// Directions of f(x) for sampled x with |f(x)| > R, clustered per radius.
inline InfinityReport sample_map_infinity(const RegularMap& f, const SampleConfig& cfg) {
  cfg.validate();
  if (f.n() == 0 || f.m() == 0) throw std::invalid_argument("sample_map_infinity: map needs n, m >= 1");
  InfinityReport rep;
  rep.source = "map";
  rep.dim = f.m();
  rep.eps = cfg.eps;
  rep.n_samples = cfg.n_samples;
  rep.seed = cfg.seed;
  std::size_t poles = 0;
  const std::size_t batches = (cfg.n_samples + detail::kBatch - 1) / detail::kBatch;

  struct BatchOut {
    std::vector<std::vector<double>> dirs;
    std::size_t poles = 0, exact = 0;
  };
  for (std::size_t ri = 0; ri < cfg.radii.size(); ++ri) {
    const double log2R = std::log2(cfg.radii[ri]);
    auto results = detail::run_batches<BatchOut>(batches, cfg.threads, [&](std::size_t b) {
      BatchOut out;
      std::mt19937_64 rng(detail::batch_seed(cfg.seed, ri, b));
      const std::size_t begin = b * detail::kBatch, end = std::min(cfg.n_samples, begin + detail::kBatch);
      for (std::size_t i = begin; i < end; ++i) {
        auto x = detail::domain_sample(rng, f.n(), i % 4, cfg.max_norm);
        auto img = detail::evaluate_image(f, x);
        out.exact += img.exact;
        if (img.pole) {
          ++out.poles;
          continue;
        }
        if (img.log2norm > log2R) out.dirs.push_back(std::move(img.direction));
      }
      return out;
    });
    std::vector<std::vector<double>> dirs;
    for (auto& r : results) {
      poles += r.poles;
      rep.exact_evaluations += r.exact;
      for (auto& d : r.dirs) dirs.push_back(std::move(d));
    }
    Clustering cl = component_count(dirs, cfg.eps);
    rep.radii.push_back(detail::summarize(cfg.radii[ri], cfg.n_samples, dirs, cl, cfg.candidates));
    if (ri + 1 == cfg.radii.size()) {
      rep.labels = cl.labels;
      rep.directions = std::move(dirs);
    }
  }
  if (poles) {
    rep.warnings.push_back(std::to_string(poles) +
                           " samples aborted: the denominator is below 1e-30 there (f0 should not vanish)");
  }
  detail::finish_report(rep);
  if (rep.radii.back().kept == 0) {
    rep.possibly_empty = true;
    rep.message = "S∞ possibly empty (bounded image?)";
  }
  return rep;
}

namespace detail {

/// An equality atom a x_v + b = 0 that fixes x_v once the others are chosen.
struct SolvedEquality {
  std::size_t var = 0;
  MPoly a, b;
};

inline std::optional<SolvedEquality> solvable_equality(const std::vector<SetNode>& conj) {
  for (const auto& atom : conj) {
    if (atom.rel != Relation::Equal || atom.poly.is_zero()) continue;
    for (std::size_t v = 0; v < atom.poly.nvars(); ++v) {
      if (atom.poly.degree_in(v) != Degree(1)) continue;
      auto parts = atom.poly.coefficients_in(v);
      SolvedEquality s;
      s.var = v;
      s.a = parts.at(1);
      s.b = parts.count(0) ? parts.at(0) : MPoly(atom.poly.nvars());
      return s;
    }
  }
  return std::nullopt;
}

/// Sign of p at x: float when the rounding bound separates it from zero,
/// exact at the dyadic point otherwise.
inline int atom_sign(const MPoly& p, const std::vector<double>& x, const std::vector<Rat>*& exact_point,
                     std::vector<Rat>& storage) {
  auto v = p.evaluate_double(x);
  if (v.finite && std::fabs(v.value) > float_error(p, v) * 4) return v.value > 0 ? 1 : -1;
  if (!exact_point) {
    storage.clear();
    for (double c : x) storage.push_back(rat_from_double(c));
    exact_point = &storage;
  }
  return sgn(p.evaluate(*exact_point));
}

}  // namespace detail

/// Directions of sampled points of S with R <= |x| (<= 2R for the free
/// coordinates), clustered per radius. Each conjunction of the DNF gets its
/// own n_samples attempts; half of them bound a random subset of the
/// coordinates to [-4, 4] so thin strips along coordinate axes are reachable.
inline InfinityReport sample_set_infinity(const SemialgebraicSet& S, const SampleConfig& cfg) {
  cfg.validate();
  const std::size_t n = S.n();
  if (n == 0) throw std::invalid_argument("sample_set_infinity: set lives in R^0");
  InfinityReport rep;
  rep.source = "set";
  rep.dim = n;
  rep.eps = cfg.eps;
  rep.n_samples = cfg.n_samples;
  rep.seed = cfg.seed;
  const auto dnf = S.dnf();
  std::vector<std::optional<detail::SolvedEquality>> solved;
  for (const auto& conj : dnf) solved.push_back(detail::solvable_equality(conj));
  const std::size_t batches = (cfg.n_samples + detail::kBatch - 1) / detail::kBatch;

  struct BatchOut {
    std::vector<std::vector<double>> dirs;
    std::size_t exact = 0;
  };
  double last_acceptance = 0;
  for (std::size_t ri = 0; ri < cfg.radii.size(); ++ri) {
    const double R = cfg.radii[ri];
    std::vector<std::vector<double>> dirs;
    std::size_t attempts = 0;
    for (std::size_t ci = 0; ci < dnf.size(); ++ci) {
      const auto& conj = dnf[ci];
      const auto& eq = solved[ci];
      std::vector<std::size_t> free;
      for (std::size_t v = 0; v < n; ++v)
        if (!eq || v != eq->var) free.push_back(v);
      auto results = detail::run_batches<BatchOut>(batches, cfg.threads, [&](std::size_t b) {
        BatchOut out;
        std::mt19937_64 rng(detail::batch_seed(cfg.seed ^ detail::splitmix64(ci + 1000), ri, b));
        std::uniform_real_distribution<double> box(-4.0, 4.0), shell(R, 2 * R);
        const std::size_t begin = b * detail::kBatch, end = std::min(cfg.n_samples, begin + detail::kBatch);
        std::vector<Rat> storage;
        for (std::size_t i = begin; i < end; ++i) {
          std::vector<double> x(n, 0.0);
          std::vector<std::size_t> outer = free;
          if (i % 2 == 1 && free.size() >= 2) {
            // bound a random nonempty proper subset of the free coordinates
            std::uint64_t mask = 0;
            const std::uint64_t full = (std::uint64_t{1} << free.size()) - 1;
            while (mask == 0 || mask == full) mask = std::uniform_int_distribution<std::uint64_t>(1, full - 1)(rng);
            outer.clear();
            for (std::size_t k = 0; k < free.size(); ++k) {
              if (mask >> k & 1)
                x[free[k]] = box(rng);
              else
                outer.push_back(free[k]);
            }
          }
          if (!outer.empty()) {
            auto u = detail::random_unit(rng, outer.size());
            double r = shell(rng);
            for (std::size_t k = 0; k < outer.size(); ++k) x[outer[k]] = r * u[k];
          }
          const std::vector<Rat>* exact_point = nullptr;
          if (eq) {
            storage.clear();
            for (double c : x) storage.push_back(rat_from_double(c));
            Rat a = eq->a.evaluate(storage);
            if (a == 0) continue;
            Rat v = -eq->b.evaluate(storage) / a;
            double vd = to_double(v);
            if (!std::isfinite(vd)) continue;
            // keep the sample exact: snap the solved coordinate to a double
            // and test it, so the exact check sees the point actually used
            storage[eq->var] = v;
            x[eq->var] = vd;
            exact_point = &storage;
            ++out.exact;
          }
          double norm2 = 0;
          for (double c : x) norm2 += c * c;
          if (!(std::sqrt(norm2) >= R) || !std::isfinite(norm2)) continue;
          bool ok = true;
          for (const auto& atom : conj) {
            int s = exact_point ? sgn(atom.poly.evaluate(*exact_point))
                                : detail::atom_sign(atom.poly, x, exact_point, storage);
            if (!relation_holds(atom.rel, s)) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          double norm = std::sqrt(norm2);
          std::vector<double> d(n);
          for (std::size_t k = 0; k < n; ++k) d[k] = x[k] / norm;
          out.dirs.push_back(canonical_direction(std::move(d)));
        }
        return out;
      });
      attempts += cfg.n_samples;
      for (auto& r : results) {
        rep.exact_evaluations += r.exact;
        for (auto& d : r.dirs) dirs.push_back(std::move(d));
      }
    }
    Clustering cl = component_count(dirs, cfg.eps);
    rep.radii.push_back(detail::summarize(R, attempts, dirs, cl, cfg.candidates));
    last_acceptance = rep.radii.back().acceptance();
    if (ri + 1 == cfg.radii.size()) {
      rep.labels = cl.labels;
      rep.directions = std::move(dirs);
    }
  }
  detail::finish_report(rep);
  if (last_acceptance < 1e-4) {
    rep.possibly_empty = true;
    rep.message = "possibly empty at infinity";
  }
  return rep;
}

/// Cheap search for a real zero of the denominator: a sign change (or an exact
/// zero) between sampled points. Finding none proves nothing.
inline std::optional<std::string> denominator_zero_hint(const RegularMap& f, std::uint64_t seed = 42,
                                                        std::size_t samples = 2000) {
  const MPoly& f0 = f.denominator();
  if (f0.is_constant()) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::optional<int> first_sign;
  std::vector<double> first_point;
  for (std::size_t i = 0; i < samples; ++i) {
    auto x = detail::domain_sample(rng, f.n(), i % 4, 1e3);
    if (i % 8 == 7)
      for (auto& c : x) c = std::uniform_int_distribution<int>(-3, 3)(rng);
    std::vector<Rat> point;
    for (double c : x) point.push_back(rat_from_double(c));
    int s = sgn(f0.evaluate(point));
    auto where = [](const std::vector<double>& p) {
      std::string w = "(";
      for (std::size_t k = 0; k < p.size(); ++k) w += (k ? ", " : "") + std::to_string(p[k]);
      return w + ")";
    };
    if (s == 0) return "the denominator vanishes at " + where(x);
    if (!first_sign) {
      first_sign = s;
      first_point = x;
    } else if (s != *first_sign) {
      return "the denominator changes sign between " + where(first_point) + " and " + where(x);
    }
  }
  return std::nullopt;
}

struct ObstructionVerdict {
  bool obstructed = false;
  std::string message;
  InfinityReport report;
};

inline const char* kObstructedMessage =
    "OBSTRUCTED: S∞ appears disconnected, so S is not the image of any non-constant polynomial map";
inline const char* kNoObstructionMessage = "NO OBSTRUCTION FOUND";

inline ObstructionVerdict obstruction_from(InfinityReport rep) {
  ObstructionVerdict v;
  v.obstructed = rep.stable_count && *rep.stable_count >= 2;
  v.message = v.obstructed ? kObstructedMessage : kNoObstructionMessage;
  v.report = std::move(rep);
  return v;
}

/// One-sided: a stable count of two or more components obstructs; anything
/// else says nothing about S being a polynomial image.
inline ObstructionVerdict polynomial_image_obstruction(const SemialgebraicSet& S, const SampleConfig& cfg) {
  return obstruction_from(sample_set_infinity(S, cfg));
}
inline ObstructionVerdict polynomial_image_obstruction(const RegularMap& f, const SampleConfig& cfg) {
  return obstruction_from(sample_map_infinity(f, cfg));
}

/// The circle at infinity for m = 2: each sampled direction and its antipode,
/// coloured by cluster.
inline std::string infinity_svg(const InfinityReport& rep) {
  if (rep.dim != 2) throw std::invalid_argument("infinity_svg: only two-dimensional targets can be drawn");
  static constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                             "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
  const double c = 160, r = 120;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"320\" height=\"340\" viewBox=\"0 0 320 340\">\n";
  out << "<circle cx=\"" << c << "\" cy=\"" << c << "\" r=\"" << r << "\" fill=\"none\" stroke=\"#bbb\"/>\n";
  out << "<line x1=\"" << c - r - 10 << "\" y1=\"" << c << "\" x2=\"" << c + r + 10 << "\" y2=\"" << c
      << "\" stroke=\"#eee\"/>\n";
  out << "<line x1=\"" << c << "\" y1=\"" << c - r - 10 << "\" x2=\"" << c << "\" y2=\"" << c + r + 10
      << "\" stroke=\"#eee\"/>\n";
  const std::size_t stride = std::max<std::size_t>(1, rep.directions.size() / 4000);
  for (std::size_t i = 0; i < rep.directions.size(); i += stride) {
    const auto& d = rep.directions[i];
    const char* colour = kPalette[rep.labels[i] % std::size(kPalette)];
    for (double s : {1.0, -1.0}) {
      out << "<circle cx=\"" << c + s * r * d[0] << "\" cy=\"" << c - s * r * d[1] << "\" r=\"2\" fill=\"" << colour
          << "\"/>\n";
    }
  }
  out << "<text x=\"10\" y=\"320\" font-family=\"monospace\" font-size=\"12\">components per radius:";
  for (auto k : rep.counts()) out << ' ' << k;
  out << "</text>\n</svg>\n";
  return out.str();
}

}  // namespace sinfty
