#pragma once

// Shared oracles, generators and property checks for the Catch suites and the
// acceptance runner. Oracles here avoid the library routine they check: they
// evaluate at points, expand by hand or use floating point.

#include "sinfty/sinfty.hpp"

#include <chrono>
#include <climits>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace support {

using namespace sinfty;

struct Tally {
  int cases = 0;
  int failures = 0;
  std::vector<std::string> messages;  // first few failures
  void fail(std::string m) {
    ++failures;
    if (messages.size() < 5) messages.push_back(std::move(m));
  }
  bool ok() const { return failures == 0 && cases > 0; }
  std::string summary() const {
    std::string s = std::to_string(cases) + " cases, " + std::to_string(failures) + " failures";
    for (const auto& m : messages) s += "; " + m;
    return s;
  }
};

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- dense integer polynomials, independent of MPoly ------------------------

using Dense = std::map<std::vector<int>, long long>;

inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Dense dense_pow(const Dense& a, int k, std::size_t nvars) {
  Dense out{{std::vector<int>(nvars, 0), 1}};
  for (int i = 0; i < k; ++i) out = dense_mul(out, a);
  return out;
}

/// Coefficientwise comparison up to a positive constant.
inline bool proportional_positive(const MPoly& p, const Dense& q) {
  if (p.size() != q.size() || q.empty()) return false;
  Rat ratio = 0;
  for (const auto& t : p.terms()) {
    std::vector<int> e(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) e[i] = t.exp[i];
    auto it = q.find(e);
    if (it == q.end()) return false;
    Rat r = t.coeff / Rat(static_cast<long>(it->second));
    if (ratio == 0) ratio = r;
    if (r != ratio) return false;
  }
  return ratio > 0;
}

// --- Laurent evaluation by hand -----------------------------------------------

inline Rat laurent_value(const LaurentPoly& p, const Rat& t) {
  Rat s = 0;
  for (const auto& [e, c] : p.terms()) {
    Rat m = 1;
    for (int i = 0; i < std::abs(e); ++i) m *= t;
    s += e >= 0 ? Rat(c * m) : Rat(c / m);
  }
  return s;
}

inline double laurent_double(const LaurentPoly& p, double t) {
  double s = 0;
  for (const auto& [e, c] : p.terms()) s += to_double(c) * std::pow(t, e);
  return s;
}

// --- generators ---------------------------------------------------------------

inline Rat small_rat(std::mt19937_64& rng, int num = 5, int den = 3) {
  std::uniform_int_distribution<int> a(-num, num), b(1, den);
  return canonical(Rat(a(rng), b(rng)));
}

inline Rat nonzero_rat(std::mt19937_64& rng, int num = 5, int den = 3) {
  while (true) {
    Rat r = small_rat(rng, num, den);
    if (r != 0) return r;
  }
}

inline MPoly random_poly(std::mt19937_64& rng, std::size_t n, int max_deg, int max_terms, int num = 5, int den = 3) {
  std::uniform_int_distribution<int> deg(0, max_deg), count(1, max_terms);
  std::vector<Term> ts;
  int k = count(rng);
  for (int i = 0; i < k; ++i) {
    Exponent e{};
    int budget = deg(rng);
    for (int j = 0; j < budget; ++j) e[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)]++;
    ts.push_back({e, small_rat(rng, num, den)});
  }
  return MPoly::from_terms(n, std::move(ts));
}

/// Laurent component t^k p(t) with p(0) != 0, |k| <= kmax, deg p <= pdeg.
inline LaurentPoly random_laurent(std::mt19937_64& rng, int kmax, int pdeg, int num = 5, int den = 3) {
  std::uniform_int_distribution<int> kd(-kmax, kmax), dd(0, pdeg);
  int k = kd(rng), d = dd(rng);
  std::vector<std::pair<int, Rat>> terms{{k, nonzero_rat(rng, num, den)}};
  for (int j = 1; j <= d; ++j) terms.push_back({k + j, small_rat(rng, num, den)});
  return LaurentPoly::from_terms(terms);
}

/// A path with at least one component of negative order.
inline RationalPath random_path(std::mt19937_64& rng, std::size_t n, int kmax, int pdeg, int num = 5, int den = 3) {
  while (true) {
    std::vector<LaurentPoly> cs;
    for (std::size_t i = 0; i < n; ++i) cs.push_back(random_laurent(rng, kmax, pdeg, num, den));
    RationalPath p(std::move(cs));
    if (p.goes_to_infinity()) return p;
  }
}

/// Map with denominator 1 + sum of squares (never zero), or a polynomial map.
inline RegularMap random_regular_map(std::mt19937_64& rng, std::size_t n, std::size_t m, int max_deg, bool rational,
                                     int num = 5, int den = 3) {
  std::vector<MPoly> fs;
  for (std::size_t j = 0; j < m; ++j) {
    MPoly p(n);
    while (p.is_zero()) p = random_poly(rng, n, max_deg, 4, num, den);
    fs.push_back(p);
  }
  MPoly f0 = MPoly::constant(n, Rat(1));
  if (rational) {
    for (std::size_t i = 0; i < n; ++i) {
      MPoly s = random_poly(rng, n, 1, 2, num, den);
      f0 = f0 + s * s;
    }
  }
  return RegularMap::make(f0, fs);
}

// --- property checks ------------------------------------------------------------

/// print o parse = identity on canonical forms, for maps, paths and sets.
inline Tally prop_roundtrip(std::uint64_t seed, int count) {
  Tally t;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    std::size_t n = 1 + i % 3;
    RegularMap f = random_regular_map(rng, n, 1 + i % 2, 3, i % 2 == 0);
    std::string s = to_text(f);
    ++t.cases;
    try {
      if (!(parse_map(s) == f)) t.fail("map round trip: " + s);
      if (to_text(parse_map(s)) != s) t.fail("map text not stable: " + s);
    } catch (const std::exception& e) {
      t.fail(s + ": " + e.what());
    }
    RationalPath p = random_path(rng, n, 4, 3);
    std::string ps = to_text(p);
    ++t.cases;
    try {
      if (!(parse_path(ps) == p)) t.fail("path round trip: " + ps);
    } catch (const std::exception& e) {
      t.fail(ps + ": " + e.what());
    }
    MPoly a = random_poly(rng, n, 2, 3), b = random_poly(rng, n, 2, 3);
    SetNode root = SetNode::join(
        SetNode::Kind::Or,
        {SetNode::join(SetNode::Kind::And, {SetNode::atom(a, Relation::LessEq), SetNode::atom(b, Relation::Greater)}),
         SetNode::atom(a - b, Relation::Equal)});
    SemialgebraicSet S(n, root);
    std::string ss = to_text(S);
    ++t.cases;
    try {
      if (!(parse_set(ss) == S)) t.fail("set round trip: " + ss);
    } catch (const std::exception& e) {
      t.fail(ss + ": " + e.what());
    }
  }
  return t;
}

/// gcd(a c, b c) is c times a common factor of a and b.
inline Tally prop_gcd_reconstruction(std::uint64_t seed, int count) {
  Tally t;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    std::size_t n = 1 + i % 3;
    MPoly a = random_poly(rng, n, 3, 3), b = random_poly(rng, n, 3, 3), c = random_poly(rng, n, 3, 3);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    ++t.cases;
    MPoly g = gcd(a * c, b * c);
    auto q = g.divide_exact(c);
    if (!q) {
      t.fail("c does not divide gcd(ac, bc) for c = " + to_text(c));
      continue;
    }
    if (!(a * c).divide_exact(g) || !(b * c).divide_exact(g)) {
      t.fail("gcd does not divide its inputs: " + to_text(g));
      continue;
    }
    if (!q->is_constant() && !(a.divide_exact(*q) && b.divide_exact(*q))) {
      t.fail("extra factor " + to_text(*q) + " is not common to a and b");
    }
  }
  return t;
}

/// compose_path is additive and multiplicative; checked exactly and by
/// evaluating at rational t.
inline Tally prop_compose_homomorphism(std::uint64_t seed, int count) {
  Tally t;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    std::size_t n = 1 + i % 4;
    MPoly f = random_poly(rng, n, 3, 4), g = random_poly(rng, n, 3, 4);
    RationalPath a = random_path(rng, n, 4, 3);
    auto F = compose_path(f, a.components()), G = compose_path(g, a.components());
    ++t.cases;
    if (compose_path(f + g, a.components()) != F + G) t.fail("not additive");
    if (compose_path(f * g, a.components()) != F * G) t.fail("not multiplicative");
    Rat t0 = nonzero_rat(rng);
    std::vector<Rat> point;
    for (const auto& c : a.components()) point.push_back(laurent_value(c, t0));
    if (laurent_value(F, t0) != f.evaluate(point)) t.fail("value at t disagrees with f(alpha(t))");
  }
  return t;
}

/// Projective points and limits do not see a common nonzero factor.
inline Tally prop_projective_scaling(std::uint64_t seed, int count) {
  Tally t;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    std::vector<Rat> v;
    for (int j = 0; j < 1 + i % 4; ++j) v.push_back(small_rat(rng));
    v.push_back(nonzero_rat(rng));
    Rat lambda = nonzero_rat(rng);
    std::vector<Rat> w;
    for (const auto& c : v) w.push_back(lambda * c);
    ++t.cases;
    if (!(ProjPoint::normalize(v) == ProjPoint::normalize(w))) t.fail("point changed under scaling");

    std::size_t n = 1 + i % 3;
    RegularMap f = random_regular_map(rng, n, 2, 3, i % 2 == 1);
    std::vector<MPoly> scaled;
    for (const auto& p : f.numerators()) scaled.push_back(lambda * p);
    RegularMap g = RegularMap::make(lambda * f.denominator(), scaled, false);
    RationalPath a = random_path(rng, n, 3, 2);
    ++t.cases;
    try {
      if (!(path_limit(f, a).point == path_limit(g, a).point)) t.fail("limit changed under scaling");
    } catch (const std::exception& e) {
      t.fail(e.what());
    }
  }
  return t;
}

/// Certified bound on the angle between (f0 : ... : fm)(alpha(t)) and the
/// limit: with G(t) = t^nu (L + E(t)), the unit vectors of L and L + E differ
/// by at most 2 |E(t)| / |L|, and |E(t)| is bounded term by term.
inline double limit_error_bound(const RegularMap& f, const RationalPath& a, double t) {
  std::vector<LaurentPoly> G;
  int nu = INT_MAX;
  for (const auto& p : f.components()) {
    G.push_back(compose_path(p, a.components()));
    if (auto o = G.back().ord()) nu = std::min(nu, *o);
  }
  double lead = 0;
  std::map<int, double> rest;  // exponent above nu -> max |coefficient|
  for (const auto& g : G) {
    for (const auto& [e, c] : g.terms()) {
      double v = std::abs(to_double(c));
      if (e == nu) lead += v * v;
      else rest[e - nu] = std::max(rest[e - nu], v);
    }
  }
  double err = 0;
  for (const auto& [k, v] : rest) err += v * std::pow(t, k);
  return 2 * std::sqrt(double(G.size())) * err / std::sqrt(lead);
}

/// Exact limits agree with (f0 : f1 : ... : fm)(alpha(t)) evaluated exactly at
/// t = 1e-3 and 1e-4, rounded, and compared within the certified bound above.
/// `within_fixed` counts the cases that also meet 1e-2 and 1e-4 outright.
inline Tally prop_limit_numeric(std::uint64_t seed, int count, int* within_fixed = nullptr) {
  Tally t;
  std::mt19937_64 rng(seed);
  if (within_fixed) *within_fixed = 0;
  for (int i = 0; i < count; ++i) {
    std::size_t n = 1 + i % 3;
    RegularMap f = random_regular_map(rng, n, 2, 3, i % 2 == 1, 2, 1);
    RationalPath a = random_path(rng, n, 3, 2, 2, 1);
    LimitResult L;
    try {
      L = path_limit(f, a);
    } catch (const std::exception&) {
      continue;  // denominator identically zero along the path
    }
    ++t.cases;
    auto dist = [&](const Rat& tt) {
      std::vector<Rat> x;
      for (const auto& c : a.components()) x.push_back(laurent_value(c, tt));
      std::vector<Rat> v;
      for (const auto& p : f.components()) v.push_back(p.evaluate(x));
      return antipodal_distance(ProjPoint::unit_shadow(v), L.point.unit());
    };
    double d3 = dist(Rat(1, 1000)), d4 = dist(Rat(1, 10000));
    double b3 = limit_error_bound(f, a, 1e-3), b4 = limit_error_bound(f, a, 1e-4);
    if (within_fixed && d3 <= 1e-2 && d4 <= 1e-4) ++*within_fixed;
    if (!(d3 <= b3 + 1e-12) || !(d4 <= b4 + 1e-12) || !(b4 < b3 || b3 == 0)) {
      t.fail("limit " + L.point.to_string() + ": distances " + std::to_string(d3) + ", " + std::to_string(d4) +
             " vs bounds " + std::to_string(b3) + ", " + std::to_string(b4) + " for " + to_text(f) + " along " +
             to_text(a));
    }
  }
  return t;
}

/// Random direction clouds on S^1 and S^2: a few tight clusters plus arcs.
inline std::vector<std::vector<double>> random_cloud(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> g(0, 1);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<std::vector<double>> pts;
  int clusters = 1 + static_cast<int>(u(rng) * 4);
  for (int c = 0; c < clusters; ++c) {
    std::vector<double> centre(dim), step(dim);
    for (auto& x : centre) x = g(rng);
    for (auto& x : step) x = g(rng);
    double spread = u(rng) < 0.5 ? 0.01 : 0.3;
    int size = 20 + static_cast<int>(u(rng) * 80);
    for (int k = 0; k < size; ++k) {
      double s = spread * (u(rng) - 0.5);
      std::vector<double> p(dim);
      double norm = 0;
      for (std::size_t i = 0; i < dim; ++i) {
        p[i] = centre[i] + s * step[i] + 0.005 * g(rng);
        norm += p[i] * p[i];
      }
      for (auto& x : p) x /= std::sqrt(norm);
      pts.push_back(p);
    }
  }
  return pts;
}

/// Component counts never increase as eps grows (eps, 2 eps, 4 eps).
inline Tally prop_eps_monotone(std::uint64_t seed, int count) {
  Tally t;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    auto pts = random_cloud(rng, 2 + i % 2);
    for (double eps : {0.01, 0.03, 0.05, 0.1}) {
      ++t.cases;
      auto a = component_count(pts, eps).count(), b = component_count(pts, 2 * eps).count(),
           c = component_count(pts, 4 * eps).count();
      if (!(a >= b && b >= c)) t.fail("counts " + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c));
    }
  }
  return t;
}

/// Negating any subset of the inputs leaves the clustering unchanged.
inline Tally prop_antipodal(std::uint64_t seed, int count) {
  Tally t;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < count; ++i) {
    auto pts = random_cloud(rng, 2 + i % 2);
    auto neg = pts;
    for (auto& p : neg)
      if (flip(rng))
        for (auto& x : p) x = -x;
    ++t.cases;
    auto a = component_count(pts, 0.05), b = component_count(neg, 0.05);
    bool same = a.labels == b.labels && a.count() == b.count();
    for (std::size_t k = 0; same && k < a.count(); ++k) {
      same = a.clusters[k].members == b.clusters[k].members &&
             antipodal_distance(a.clusters[k].centroid, b.clusters[k].centroid) < 1e-12 &&
             std::abs(a.clusters[k].extent - b.clusters[k].extent) < 1e-12;
    }
    if (!same) t.fail("clustering changed after negating directions");
  }
  return t;
}

/// build_bridge on random inputs: h(t, 1/t) = alpha and h(t, -1/t) = beta,
/// checked at rational t by direct evaluation, and the report's own checks.
inline Tally prop_bridge_identities(std::uint64_t seed, int count) {
  Tally t;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    std::size_t n = 1 + i % 4;
    RegularMap f = random_regular_map(rng, n, 1 + i % 2, 1, false);
    RationalPath alpha = random_path(rng, n, 6, 5), beta = random_path(rng, n, 6, 5);
    ++t.cases;
    try {
      BridgeResult r = build_bridge(f, normalize_path(alpha, PathTarget::Simple), normalize_path(beta, PathTarget::Simple));
      for (const char* name : {"h(t,1/t) = alpha(t)", "h(t,-1/t) = beta(t)"}) {
        const BridgeCheck* c = r.report.find(name);
        if (!c || !c->passed) t.fail(std::string(name) + " failed in the report");
      }
      for (int s = 0; s < 3; ++s) {
        Rat tt = nonzero_rat(rng);
        for (int sign : {1, -1}) {
          std::vector<Rat> u{tt, Rat(sign) / tt};
          std::vector<Rat> hu = r.h.evaluate(u);
          const RationalPath& want = sign == 1 ? alpha : beta;
          for (std::size_t k = 0; k < n; ++k)
            if (hu[k] != laurent_value(want[k], tt)) t.fail("h(t, " + std::to_string(sign) + "/t) differs at a point");
        }
      }
    } catch (const std::exception& e) {
      t.fail(std::string("threw: ") + e.what());
    }
  }
  return t;
}

/// Hausdorff distance between sampled directions and the arc {(0 : u : 1), 0 <= u <= 1/2}
/// written as a function of which coordinate carries the 1.
inline std::vector<std::vector<double>> arc_points(bool second_is_one, int steps = 400) {
  std::vector<std::vector<double>> out;
  for (int s = 0; s <= steps; ++s) {
    double u = 0.5 * s / steps;
    double a = second_is_one ? 1.0 : u, b = second_is_one ? u : 1.0;
    double nrm = std::hypot(a, b);
    out.push_back({a / nrm, b / nrm});
  }
  return out;
}

inline double one_sided(const std::vector<std::vector<double>>& from, const std::vector<std::vector<double>>& to) {
  double worst = 0;
  for (const auto& p : from) {
    double best = 1e9;
    for (const auto& q : to) {
      double dm = std::hypot(p[0] - q[0], p[1] - q[1]), dp = std::hypot(p[0] + q[0], p[1] + q[1]);
      best = std::min({best, dm, dp});
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace support
