#pragma once

// Real common zeros of homogeneous polynomials in RP^n.
//
// Exact mode (n <= 2) walks the charts {x0 = 1}, {x0 = 0, x1 = 1}, ... and
// solves each affine system: univariate by gcd + Sturm, bivariate by
// resultant elimination, Sturm isolation and back-substitution over Q(xi).
// Positive-dimensional pieces (a common curve) are tested through a
// closest-point system, which is zero-dimensional for a squarefree curve.
//
// Numeric mode runs Levenberg-Marquardt on the system restricted to the unit
// sphere from many seeded starts and tries to snap the best point to an exact
// rational zero.

#include "sinfty/algebraic.hpp"
#include "sinfty/mpoly.hpp"
#include "sinfty/mpoly_gcd.hpp"
#include "sinfty/projective.hpp"
#include "sinfty/upoly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sinfty {

enum class ZeroStatus { Empty, NonEmpty, Unknown };
enum class SolveMode { Exact, Numeric, Auto };

inline std::string to_string(ZeroStatus s) {
  switch (s) {
    case ZeroStatus::Empty: return "Empty";
    case ZeroStatus::NonEmpty: return "NonEmpty";
    case ZeroStatus::Unknown: return "Unknown";
  }
  return "?";
}

/// A point of RP^n. Coordinates are exact when rational; otherwise each
/// coordinate carries an isolating interval (lo == hi when exact) and `approx`
/// holds a float estimate.
struct ZeroWitness {
  std::optional<ProjPoint> exact;
  std::vector<Rat> lo, hi;
  std::vector<double> approx;
  std::string certificate;  // "exact", "algebraic", "numeric"
};

struct ZeroResult {
  ZeroStatus status = ZeroStatus::Unknown;
  std::optional<ZeroWitness> witness;
  std::string evidence;
};

namespace detail {

/// Syntactic positivity: every exponent even, every coefficient positive and a
/// nonzero constant term, so p >= p(0) > 0 on R^k.
inline bool affine_positive(const MPoly& p) {
  if (p.is_zero() || p.constant_term() <= 0) return false;
  for (const auto& t : p.terms()) {
    if (t.coeff <= 0) return false;
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (t.exp[i] % 2) return false;
  }
  return true;
}

/// Homogeneous analogue: even exponents, positive coefficients and a pure
/// even power of every variable, so the form is positive off the origin.
inline bool form_positive_definite(const MPoly& p) {
  if (p.is_zero() || !p.is_homogeneous()) return false;
  std::vector<bool> pure(p.nvars(), false);
  for (const auto& t : p.terms()) {
    if (t.coeff <= 0) return false;
    int used = 0;
    std::size_t which = 0;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (t.exp[i] % 2) return false;
      if (t.exp[i]) {
        ++used;
        which = i;
      }
    }
    if (used == 1) pure[which] = true;
  }
  return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
}

struct AffinePoint {
  std::vector<Rat> lo, hi;
  std::vector<double> approx;
  bool exact() const {
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (lo[i] != hi[i]) return false;
    return true;
  }
};

struct AffineResult {
  ZeroStatus status = ZeroStatus::Empty;
  std::optional<AffinePoint> point;
  std::string evidence;
};

inline AffineResult affine_empty() { return {ZeroStatus::Empty, std::nullopt, ""}; }

inline AffinePoint point_from_roots(const std::vector<RootInterval>& ivs) {
  AffinePoint p;
  for (const auto& iv : ivs) {
    p.lo.push_back(iv.lo);
    p.hi.push_back(iv.hi);
    p.approx.push_back(to_double((iv.lo + iv.hi) / 2));
  }
  return p;
}

inline AffineResult solve_univariate(const std::vector<UPoly>& ps) {
  UPoly g;
  for (const auto& p : ps) g = gcd(g, p);
  if (g.is_zero()) return {ZeroStatus::NonEmpty, point_from_roots({RootInterval{Rat(0), Rat(0)}}), "all equations vanish"};
  if (g.is_constant()) return affine_empty();
  auto roots = isolate_real_roots(g);
  if (roots.empty()) return affine_empty();
  UPoly sf = squarefree_part(g);
  for (auto& r : roots) r = try_rational_root(sf, r);
  // prefer a rational witness
  const RootInterval* best = &roots.front();
  for (const auto& r : roots)
    if (r.exact()) {
      best = &r;
      break;
    }
  RootInterval w = best->exact() ? *best : refine_root(sf, *best, Rat(1, 1u << 30));
  return {ZeroStatus::NonEmpty, point_from_roots({w}), "common real root of the gcd"};
}

/// Polynomial in y (var 1) with coefficients in Q[x] (var 0).
inline std::vector<UPoly> as_poly_in_y(const MPoly& p) {
  std::vector<UPoly> out;
  for (const auto& [k, c] : p.coefficients_in(1)) {
    if (out.size() <= static_cast<std::size_t>(k)) out.resize(k + 1);
    out[k] = UPoly::from_mpoly(c, 0);
  }
  return out;
}

inline UPoly specialize_x(const MPoly& p, const Rat& x) {
  return UPoly::from_mpoly(p.substitute_value(0, x), 1);
}

/// Res_y(a, b) in Q[x] by evaluation at integers and Newton interpolation.
inline UPoly resultant_y(const MPoly& a, const MPoly& b) {
  const int da = a.degree_in(1).value(), db = b.degree_in(1).value();
  auto upow = [](const UPoly& p, int e) {
    UPoly r(Rat(1));
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
  };
  if (da == 0) return upow(UPoly::from_mpoly(a, 0), db);
  if (db == 0) return upow(UPoly::from_mpoly(b, 0), da);
  const int bound = std::min(a.total_degree().value() * b.total_degree().value(),
                             da * b.degree_in(0).value() + db * a.degree_in(0).value());
  MPoly la = a.leading_coeff_in(1), lb = b.leading_coeff_in(1);
  std::vector<Rat> xs, ys;
  for (long k = 0; static_cast<int>(xs.size()) <= bound; ++k) {
    Rat x(k % 2 == 0 ? k / 2 : -(k + 1) / 2);
    if (la.evaluate(std::vector<Rat>{x, Rat(0)}) == 0 || lb.evaluate(std::vector<Rat>{x, Rat(0)}) == 0) continue;
    xs.push_back(x);
    ys.push_back(resultant(specialize_x(a, x), specialize_x(b, x)));
  }
  // Newton divided differences
  std::vector<Rat> c = ys;
  for (std::size_t j = 1; j < xs.size(); ++j)
    for (std::size_t i = xs.size() - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
  UPoly r(c.back());
  for (std::size_t i = xs.size() - 1; i-- > 0;) r = r * UPoly::linear(xs[i]) + UPoly(c[i]);
  return r;
}

inline std::vector<double> real_roots_double(const std::vector<double>& coeffs) {
  std::vector<double> c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<double> out;
  if (c.size() <= 1) return out;
  const int d = int(c.size()) - 1;
  if (d == 1) return {-c[0] / c[1]};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[i] / c[d];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  auto ev = es.eigenvalues();
  std::vector<std::pair<double, double>> cand;
  for (int i = 0; i < d; ++i) cand.push_back({std::abs(ev[i].imag()), ev[i].real()});
  std::sort(cand.begin(), cand.end());
  for (const auto& [im, re] : cand) out.push_back(re);
  return out;
}

/// Real zeros of a bivariate system whose members have no common factor.
inline AffineResult solve_zero_dimensional(std::vector<MPoly> ps) {
  std::sort(ps.begin(), ps.end(), [](const MPoly& a, const MPoly& b) {
    return a.total_degree() < b.total_degree() || (a.total_degree() == b.total_degree() && a.size() < b.size());
  });
  if (ps.size() < 2) throw std::logic_error("solve_zero_dimensional: need two equations");
  std::optional<MPoly> a, b;
  for (int attempt = 0; attempt < 3 && !b; ++attempt) {
    MPoly ca = ps[0];
    MPoly cb = MPoly(ps[0].nvars());
    for (std::size_t i = 1; i < ps.size(); ++i) {
      Rat c = attempt == 0 ? Rat(1) : Rat(static_cast<long>(std::pow(double(i), attempt) + attempt));
      cb = cb + c * ps[i];
    }
    if (gcd(ca, cb).is_constant()) {
      a = ca;
      b = cb;
    }
  }
  if (!b) return {ZeroStatus::Unknown, std::nullopt, "elimination degenerate after 3 combinations"};
  UPoly r = resultant_y(*a, *b);
  if (r.is_zero()) return {ZeroStatus::Unknown, std::nullopt, "resultant vanished identically"};
  if (r.is_constant()) return affine_empty();
  UPoly rsf = squarefree_part(r);
  auto roots = isolate_real_roots(rsf);
  for (auto root : roots) {
    root = try_rational_root(rsf, root);
    RealAlgebraic xi = RealAlgebraic::root_of(rsf, root);
    AlgPoly g;
    for (const auto& p : ps) g = AlgPoly::gcd(g, AlgPoly(as_poly_in_y(p)), xi);
    if (g.is_zero()) {
      AffinePoint pt{{xi.lo(), Rat(0)}, {xi.hi(), Rat(0)}, {xi.approx(), 0.0}};
      return {ZeroStatus::NonEmpty, pt, "every equation vanishes on a vertical line"};
    }
    if (g.deg() == 0) continue;
    if (AlgPoly::count_real_roots(g, xi) == 0) continue;
    if (xi.is_rational()) {
      // g has rational coefficients: isolate y exactly
      std::vector<Rat> c;
      for (const auto& k : g.coeffs()) c.push_back(k.evaluate(xi.value()));
      UPoly gy(std::move(c));
      auto ys = isolate_real_roots(gy);
      UPoly gsf = squarefree_part(gy);
      RootInterval y = try_rational_root(gsf, ys.front());
      for (const auto& cand : ys) {
        RootInterval t = try_rational_root(gsf, cand);
        if (t.exact()) {
          y = t;
          break;
        }
      }
      if (!y.exact()) y = refine_root(gsf, y, Rat(1, 1u << 30));
      AffinePoint pt{{xi.value(), y.lo}, {xi.value(), y.hi}, {xi.approx(), to_double((y.lo + y.hi) / 2)}};
      return {ZeroStatus::NonEmpty, pt, "resultant root with real fibre"};
    }
    RootInterval fine = refine_root(xi.minimal_hint(), RootInterval{xi.lo(), xi.hi()}, Rat(1, 1u << 30));
    double xa = to_double((fine.lo + fine.hi) / 2);
    auto cands = real_roots_double(g.approx_coeffs(xa));
    double ya = cands.empty() ? 0.0 : cands.front();
    // only x is isolated; y is a float estimate recorded as a point interval
    AffinePoint pt{{fine.lo, rat_from_double(ya)}, {fine.hi, rat_from_double(ya)}, {xa, ya}};
    return {ZeroStatus::NonEmpty, pt, "irrational x-coordinate certified by Sturm count over Q(xi); y approximate"};
  }
  return affine_empty();
}

/// Nonempty real locus of a nonconstant bivariate polynomial?
inline AffineResult curve_points(const MPoly& h0) {
  if (affine_positive(h0) || affine_positive(-h0)) return affine_empty();
  MPoly h = squarefree_part(h0);
  if (!h.uses_variable(1)) {
    auto r = solve_univariate({UPoly::from_mpoly(h, 0)});
    if (r.status == ZeroStatus::Empty) return affine_empty();
    AffinePoint p{{r.point->lo[0], Rat(0)}, {r.point->hi[0], Rat(0)}, {r.point->approx[0], 0.0}};
    return {ZeroStatus::NonEmpty, p, "vertical line component"};
  }
  if (!h.uses_variable(0)) {
    auto r = solve_univariate({UPoly::from_mpoly(h, 1)});
    if (r.status == ZeroStatus::Empty) return affine_empty();
    AffinePoint p{{Rat(0), r.point->lo[0]}, {Rat(0), r.point->hi[0]}, {0.0, r.point->approx[0]}};
    return {ZeroStatus::NonEmpty, p, "horizontal line component"};
  }
  // Closest point to a generic centre lies on h = 0 and on
  // (x - a) h_y - (y - b) h_x = 0 (or is singular, which also solves it).
  const Rat centres[3][2] = {{Rat(1, 3), Rat(2, 7)}, {Rat(-5, 11), Rat(3, 13)}, {Rat(7, 17), Rat(-11, 19)}};
  MPoly hx = h.derivative(0), hy = h.derivative(1);
  for (const auto& c : centres) {
    MPoly xa = MPoly::variable(2, 0) - MPoly::constant(2, c[0]);
    MPoly yb = MPoly::variable(2, 1) - MPoly::constant(2, c[1]);
    MPoly lag = xa * hy - yb * hx;
    if (lag.is_zero() || !gcd(h, lag).is_constant()) continue;
    AffineResult r = solve_zero_dimensional({h, lag});
    if (r.status == ZeroStatus::NonEmpty) r.evidence = "curve point (closest-point system): " + r.evidence;
    return r;
  }
  return {ZeroStatus::Unknown, std::nullopt, "closest-point system degenerate for 3 centres"};
}

inline AffineResult solve_bivariate(std::vector<MPoly> ps) {
  std::vector<MPoly> live;
  for (auto& p : ps) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return affine_empty();
    live.push_back(std::move(p));
  }
  if (live.empty()) return {ZeroStatus::NonEmpty, AffinePoint{{0, 0}, {0, 0}, {0.0, 0.0}}, "all equations vanish"};
  for (const auto& p : live)
    if (affine_positive(p) || affine_positive(-p)) return affine_empty();
  MPoly g = gcd(std::span<const MPoly>(live));
  std::vector<MPoly> rest;
  if (!g.is_constant()) {
    AffineResult c = curve_points(g);
    if (c.status != ZeroStatus::Empty) return c;
    for (const auto& p : live) {
      MPoly q = p / g;
      if (q.is_constant()) return affine_empty();
      rest.push_back(q);
    }
  } else {
    rest = live;
  }
  if (rest.size() == 1) return curve_points(rest[0]);
  // Cheap filter: the smallest equation alone may have no real points.
  auto smallest = *std::min_element(rest.begin(), rest.end(), [](const MPoly& a, const MPoly& b) {
    return a.total_degree() < b.total_degree();
  });
  if (curve_points(smallest).status == ZeroStatus::Empty) return affine_empty();
  return solve_zero_dimensional(rest);
}

/// Restrict a form in x0..xn to the chart x0 = .. = x_{j-1} = 0, x_j = 1.
inline MPoly to_chart(const MPoly& p, std::size_t j) {
  MPoly q = p;
  for (std::size_t i = 0; i < j; ++i) q = q.substitute_value(i, Rat(0));
  q = q.substitute_value(j, Rat(1));
  std::size_t k = p.nvars() - j - 1;
  std::vector<std::size_t> map(p.nvars(), 0);
  for (std::size_t i = j + 1; i < p.nvars(); ++i) map[i] = i - j - 1;
  return q.remap(std::max<std::size_t>(k, 1), map);
}

inline AffineResult solve_affine(const std::vector<MPoly>& ps, std::size_t k) {
  if (k == 0) {
    for (const auto& p : ps)
      if (p.constant_term() != 0) return affine_empty();
    return {ZeroStatus::NonEmpty, AffinePoint{}, "point"};
  }
  if (k == 1) {
    std::vector<UPoly> us;
    for (const auto& p : ps) us.push_back(UPoly::from_mpoly(p, 0));
    return solve_univariate(us);
  }
  return solve_bivariate(ps);
}

inline ZeroResult numeric_common_zeros(const std::vector<MPoly>& polys, std::uint64_t seed, int starts, int iters,
                                       double tol);

}  // namespace detail

/// Evaluate a witness against the inputs: exact points must be common zeros.
inline bool verify_witness(const std::vector<MPoly>& polys, const ZeroWitness& w) {
  if (!w.exact) return false;
  for (const auto& p : polys)
    if (p.evaluate(w.exact->coords()) != 0) return false;
  return true;
}

struct NumericOptions {
  int starts = 512;
  int iterations = 100;
  double tolerance = 1e-12;
  std::uint64_t seed = 42;
};

inline ZeroResult real_projective_common_zeros(const std::vector<MPoly>& polys, SolveMode mode = SolveMode::Auto,
                                               const NumericOptions& opt = {}) {
  if (polys.empty()) throw std::invalid_argument("real_projective_common_zeros: no equations");
  const std::size_t nv = polys[0].nvars();
  for (const auto& p : polys) {
    if (p.nvars() != nv) throw std::invalid_argument("real_projective_common_zeros: equations differ in arity");
    if (!p.is_homogeneous()) throw std::invalid_argument("real_projective_common_zeros: input is not homogeneous");
  }
  const std::size_t n = nv - 1;
  if (mode == SolveMode::Auto) mode = n <= 2 ? SolveMode::Exact : SolveMode::Numeric;
  if (mode == SolveMode::Exact && n > 2) {
    throw std::invalid_argument("real_projective_common_zeros: exact mode supports n <= 2 only");
  }
  std::vector<MPoly> live;
  for (const auto& p : polys)
    if (!p.is_zero()) live.push_back(p);
  if (live.empty()) {
    std::vector<Rat> c(nv, Rat(0));
    c[0] = 1;
    ZeroWitness w{ProjPoint::normalize(c), c, c, {}, "exact"};
    w.approx = ProjPoint::unit_shadow(c);
    return {ZeroStatus::NonEmpty, w, "all equations are zero"};
  }
  for (const auto& p : live)
    if (detail::form_positive_definite(p)) return {ZeroStatus::Empty, std::nullopt, "positive definite form in the system"};
  if (mode == SolveMode::Numeric) return detail::numeric_common_zeros(live, opt.seed, opt.starts, opt.iterations, opt.tolerance);

  std::string unknown;
  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<MPoly> chart;
    for (const auto& p : live) chart.push_back(detail::to_chart(p, j));
    detail::AffineResult r = detail::solve_affine(chart, n - j);
    if (r.status == ZeroStatus::Unknown) {
      unknown += (unknown.empty() ? "" : "; ") + ("chart " + std::to_string(j) + ": " + r.evidence);
      continue;
    }
    if (r.status == ZeroStatus::Empty) continue;
    ZeroWitness w;
    w.lo.assign(j, Rat(0));
    w.lo.push_back(Rat(1));
    w.hi = w.lo;
    std::vector<double> approx(w.lo.size(), 0.0);
    approx[j] = 1.0;
    for (std::size_t i = 0; i < r.point->lo.size(); ++i) {
      w.lo.push_back(r.point->lo[i]);
      w.hi.push_back(r.point->hi[i]);
      approx.push_back(r.point->approx[i]);
    }
    double norm = 0;
    for (double v : approx) norm += v * v;
    for (double& v : approx) v /= std::sqrt(norm);
    w.approx = approx;
    if (r.point->exact()) {
      w.exact = ProjPoint::normalize(w.lo);
      w.certificate = "exact";
      if (!verify_witness(live, w)) throw std::logic_error("real_projective_common_zeros: exact witness failed to verify");
    } else {
      w.certificate = "algebraic";
    }
    return {ZeroStatus::NonEmpty, w, "chart " + std::to_string(j) + ": " + r.evidence};
  }
  if (!unknown.empty()) return {ZeroStatus::Unknown, std::nullopt, unknown};
  return {ZeroStatus::Empty, std::nullopt, "no real point in any chart"};
}

namespace detail {

/// Continued-fraction snapping of a float point to a rational common zero.
inline std::optional<ProjPoint> snap_to_rational(const std::vector<MPoly>& polys, const Eigen::VectorXd& z) {
  Eigen::Index big = 0;
  z.cwiseAbs().maxCoeff(&big);
  for (double tol : {1e-4, 1e-6, 1e-8, 1e-10}) {
    std::vector<Rat> c;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      double v = z[i] / z[big];
      c.push_back(simplest_between(rat_from_double(v - tol), rat_from_double(v + tol)));
    }
    bool ok = true;
    for (const auto& p : polys)
      if (p.evaluate(c) != 0) {
        ok = false;
        break;
      }
    if (ok) return ProjPoint::normalize(c);
  }
  return std::nullopt;
}

inline ZeroResult numeric_common_zeros(const std::vector<MPoly>& polys, std::uint64_t seed, int starts, int iters,
                                       double tol) {
  const std::size_t nv = polys[0].nvars();
  std::vector<MPoly> eqs;
  for (const auto& p : polys) {
    Rat norm = 0;
    for (const auto& t : p.terms()) norm = std::max(norm, Rat(abs(t.coeff)));
    eqs.push_back((1 / norm) * p);
  }
  std::vector<std::vector<MPoly>> grads;
  for (const auto& p : eqs) {
    std::vector<MPoly> g;
    for (std::size_t i = 0; i < nv; ++i) g.push_back(p.derivative(i));
    grads.push_back(std::move(g));
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(eqs.size()) + 1, cols = static_cast<Eigen::Index>(nv);
  auto residual = [&](const Eigen::VectorXd& z, Eigen::VectorXd& r, Eigen::MatrixXd* jac) {
    std::vector<double> pt(z.data(), z.data() + z.size());
    for (std::size_t k = 0; k < eqs.size(); ++k) {
      r[Eigen::Index(k)] = eqs[k].evaluate_double(pt).value;
      if (jac)
        for (std::size_t i = 0; i < nv; ++i) (*jac)(Eigen::Index(k), Eigen::Index(i)) = grads[k][i].evaluate_double(pt).value;
    }
    r[rows - 1] = z.squaredNorm() - 1;
    if (jac) jac->row(rows - 1) = 2 * z.transpose();
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double best = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_z;
  int best_start = -1;
  for (int s = 0; s < starts; ++s) {
    Eigen::VectorXd z(cols);
    for (Eigen::Index i = 0; i < cols; ++i) z[i] = normal(rng);
    z.normalize();
    Eigen::VectorXd r(rows);
    Eigen::MatrixXd jac(rows, cols);
    double lambda = 1e-3;
    residual(z, r, &jac);
    double cost = r.squaredNorm();
    for (int it = 0; it < iters && cost > tol * tol; ++it) {
      Eigen::MatrixXd a = jac.transpose() * jac;
      a.diagonal() += lambda * Eigen::VectorXd::Ones(cols) + lambda * a.diagonal();
      Eigen::VectorXd step = a.ldlt().solve(-jac.transpose() * r);
      Eigen::VectorXd z2 = z + step;
      Eigen::VectorXd r2(rows);
      residual(z2, r2, nullptr);
      double cost2 = r2.squaredNorm();
      if (std::isfinite(cost2) && cost2 < cost) {
        z = z2;
        lambda = std::max(lambda / 3, 1e-12);
        residual(z, r, &jac);
        cost = cost2;
      } else {
        lambda *= 4;
        if (lambda > 1e12) break;
      }
    }
    double res = r.head(rows - 1).cwiseAbs().maxCoeff();
    if (res < best) {
      best = res;
      best_z = z;
      best_start = s;
    }
  }
  std::ostringstream ev;
  ev << "numeric search: " << starts << " starts, best residual " << best << " (start " << best_start << ")";
  if (best > tol) return {ZeroStatus::Unknown, std::nullopt, ev.str()};
  ZeroWitness w;
  w.approx.assign(best_z.data(), best_z.data() + best_z.size());
  for (double v : w.approx) {
    w.lo.push_back(rat_from_double(v));
    w.hi.push_back(rat_from_double(v));
  }
  if (auto p = snap_to_rational(polys, best_z)) {
    w.exact = *p;
    w.certificate = "exact";
    w.lo = w.hi = p->coords();
  } else {
    w.certificate = "numeric";
  }
  return {ZeroStatus::NonEmpty, w, ev.str()};
}

}  // namespace detail

}  // namespace sinfty
