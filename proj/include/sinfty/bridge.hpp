#pragma once

// Bridging maps R^2 -> R^n through which a regular map is precomposed:
//  - the two-path bridge h with h(t, 1/t) = alpha(t), h(t, -1/t) = beta(t);
//  - the quasi-polynomial bridge h = (h1/h0, ..., hn/h0), h0 = w^l with
//    w = (xy - 1)^2 + y^4, for which f o h is quasi-polynomial.
// Every identity is checked by exact substitution and reported.

#include "sinfty/classifier.hpp"
#include "sinfty/laurent.hpp"
#include "sinfty/projective.hpp"
#include "sinfty/regular_map.hpp"
#include "sinfty/text.hpp"
#include "sinfty/upoly.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace sinfty {

enum class PathTarget { Simple, QuasiPolynomial };

/// alpha_i = t^{k_i} p_i(t) with p_i(0) != 0; zero components have no k.
struct NormalizedPath {
  RationalPath path;
  std::size_t i0 = 0;
  std::vector<std::optional<int>> k;
  std::vector<UPoly> p;
  int reparam = 1;  // t -> t^reparam applied to the input

  int k0() const { return *k[i0]; }
};

class BridgeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline NormalizedPath normalize_path(const RationalPath& alpha, PathTarget target) {
  if (!alpha.goes_to_infinity()) {
    throw BridgeError("normalize_path: no component has negative order (the path does not go to infinity)");
  }
  int s = 1;
  if (target == PathTarget::QuasiPolynomial) {
    const int k = *alpha.min_order();
    while (!(k * s <= -6 && (k * s) % 2 == 0)) ++s;
  }
  NormalizedPath out;
  out.path = s == 1 ? alpha : alpha.substitute_power(s);
  out.reparam = s;
  out.i0 = out.path.marked_index();
  for (std::size_t i = 0; i < out.path.size(); ++i) {
    const LaurentPoly& c = out.path[i];
    if (c.is_zero()) {
      out.k.push_back(std::nullopt);
      out.p.emplace_back();
      continue;
    }
    int ki = *c.ord();
    out.k.push_back(ki);
    std::vector<Rat> coeffs(static_cast<std::size_t>(*c.top() - ki + 1), Rat(0));
    for (const auto& [e, v] : c.terms()) coeffs[static_cast<std::size_t>(e - ki)] = v;
    out.p.emplace_back(std::move(coeffs));
  }
  if (target == PathTarget::QuasiPolynomial) {
    const UPoly& pi0 = out.p[out.i0];
    if (pi0.deg() != 0 || (pi0.lc() != 1 && pi0.lc() != -1)) {
      throw BridgeError("normalize_path: component " + std::to_string(out.i0 + 1) +
                        " of minimal order must be +-t^k (p_i0 = +-1); supply the path in that form");
    }
  }
  return out;
}

struct BridgeCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct LimitRecord {
  std::string label;
  RationalPath path;
  std::optional<LimitResult> limit;
  std::string error;
};

struct BridgeReport {
  std::vector<BridgeCheck> checks;
  std::vector<LimitRecord> limits;
  std::optional<QPVerdict> g_verdict;
  int ell0 = 0, ell = 0, mu = 0;
  std::vector<std::string> notes;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const BridgeCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

struct BridgeResult {
  RegularMap h;                // R^2 -> R^n, denominator h0
  RegularMap g;                // f o h, gcd-reduced
  std::vector<MPoly> g_terms;  // g0..gm = F_i(h0, ..., hn) before reduction
  BridgeReport report;
};

namespace detail {

inline MPoly bx() { return MPoly::variable(2, 0); }
inline MPoly by() { return MPoly::variable(2, 1); }
inline MPoly bconst(const Rat& c) { return MPoly::constant(2, c); }

/// p(x) as a bivariate polynomial.
inline MPoly in_x(const UPoly& p) { return p.to_mpoly(2, 0); }

inline RationalPath hyperbola(int sign) {
  return RationalPath({LaurentPoly::monomial(1, Rat(1)), LaurentPoly::monomial(-1, Rat(sign))});
}

inline LimitRecord limit_record(std::string label, const RegularMap& g, const RationalPath& path) {
  LimitRecord r{std::move(label), path, std::nullopt, ""};
  try {
    r.limit = path_limit(g, path);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

/// h(t, s/t) as Laurent tuple (h_i / h0).
inline std::vector<LaurentPoly> along(const RegularMap& h, const RationalPath& path) {
  LaurentPoly d = compose_path(h.denominator(), path.components());
  std::vector<LaurentPoly> out;
  for (const auto& hi : h.numerators()) out.push_back(compose_path(hi, path.components()).divide_by_monomial(d));
  return out;
}

inline std::vector<Rat> random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  return {canonical(Rat(num(rng), den(rng))), canonical(Rat(num(rng), den(rng)))};
}

/// g(u) = f(h(u)) at `count` seeded rational points where both sides exist.
inline BridgeCheck check_factorization(const RegularMap& f, const RegularMap& h, const RegularMap& g, int count) {
  std::mt19937_64 rng(20240601);
  int tested = 0, skipped = 0;
  for (int i = 0; i < count; ++i) {
    std::vector<Rat> u = random_point(rng);
    for (auto& c : u) c.canonicalize();
    try {
      std::vector<Rat> hu = h.evaluate(u);
      std::vector<Rat> lhs = g.evaluate(u), rhs = f.evaluate(hu);
      if (lhs != rhs) {
        return {"g(u) = f(h(u)) at rational points", false,
                "mismatch at u = (" + to_string(u[0]) + ", " + to_string(u[1]) + ")"};
      }
      ++tested;
    } catch (const std::domain_error&) {
      ++skipped;
    }
  }
  return {"g(u) = f(h(u)) at rational points", tested > 0,
          std::to_string(tested) + " points agree, " + std::to_string(skipped) + " skipped at poles"};
}

inline std::string tuple_text(const std::vector<LaurentPoly>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_text(v[i]);
  return s + ")";
}

}  // namespace detail

/// Precomposition g = f o h, keeping the unreduced F_i(h0, ..., hn).
inline std::pair<RegularMap, std::vector<MPoly>> precompose(const RegularMap& f, const RegularMap& h) {
  const int d = f.max_degree();
  std::vector<MPoly> args = h.components();
  std::vector<MPoly> gs;
  for (std::size_t i = 0; i <= f.m(); ++i) gs.push_back(f.component(i).homogenize(d).compose(args));
  std::vector<MPoly> nums(gs.begin() + 1, gs.end());
  return {RegularMap::make(gs[0], nums), gs};
}

inline BridgeResult build_bridge(const RegularMap& f, const NormalizedPath& alpha, const NormalizedPath& beta) {
  const std::size_t n = f.n();
  if (alpha.path.size() != n || beta.path.size() != n) {
    throw BridgeError("build_bridge: paths must have " + std::to_string(n) + " components");
  }
  using namespace detail;
  MPoly plus = Rat(1, 2) * (bx() * by() + bconst(1));
  MPoly minus = Rat(1, 2) * (bconst(1) - bx() * by());
  std::vector<MPoly> hs;
  for (std::size_t i = 0; i < n; ++i) {
    MPoly P(2), Q(2);
    if (alpha.k[i]) {
      int k = *alpha.k[i];
      P = (k < 0 ? by().pow(unsigned(-k)) : bx().pow(unsigned(k))) * in_x(alpha.p[i]);
    }
    if (beta.k[i]) {
      int l = *beta.k[i];
      Q = (l < 0 ? (-by()).pow(unsigned(-l)) : bx().pow(unsigned(l))) * in_x(beta.p[i]);
    }
    hs.push_back(plus * P + minus * Q);
  }
  RegularMap h = RegularMap::make(bconst(1), hs, false);
  auto [g, gs] = precompose(f, h);

  BridgeResult res{h, g, gs, {}};
  auto& rep = res.report;
  std::vector<LaurentPoly> ha = along(h, hyperbola(1)), hb = along(h, hyperbola(-1));
  std::vector<LaurentPoly> a(alpha.path.components().begin(), alpha.path.components().end());
  std::vector<LaurentPoly> b(beta.path.components().begin(), beta.path.components().end());
  rep.checks.push_back({"h(t,1/t) = alpha(t)", ha == a, tuple_text(ha)});
  rep.checks.push_back({"h(t,-1/t) = beta(t)", hb == b, tuple_text(hb)});
  rep.checks.push_back(check_factorization(f, h, g, 100));
  rep.limits.push_back(limit_record("g along (t, 1/t)", g, hyperbola(1)));
  rep.limits.push_back(limit_record("g along (t, -1/t)", g, hyperbola(-1)));
  rep.limits.push_back(limit_record("f along alpha", f, alpha.path));
  rep.limits.push_back(limit_record("f along beta", f, beta.path));
  return res;
}

/// Map and path brought into the shape the quasi-polynomial bridge needs.
struct QPPrepared {
  RegularMap map;
  NormalizedPath alpha;
  NormalizingShear shear;
};

inline QPPrepared prepare_qp_bridge(const RegularMap& f, const RationalPath& alpha) {
  NormalizingShear sh = find_normalizing_shear(f);
  RationalPath a = alpha;
  if (f.n() > 1) a = unshear_path(alpha, sh.domain_coeffs);
  return {sh.map, normalize_path(a, PathTarget::QuasiPolynomial), sh};
}

inline BridgeResult build_qp_bridge(const RegularMap& f, const NormalizedPath& alpha, std::optional<int> ell_user = {}) {
  const std::size_t n = f.n();
  using namespace detail;
  // preconditions, each reported by name
  if (alpha.path.size() != n) throw BridgeError("build_qp_bridge: path must have " + std::to_string(n) + " components");
  if (!(alpha.k0() <= -6 && alpha.k0() % 2 == 0)) throw BridgeError("build_qp_bridge: k_i0 must be even and <= -6");
  if (alpha.p[alpha.i0].deg() != 0 || abs(alpha.p[alpha.i0].lc()) != 1) {
    throw BridgeError("build_qp_bridge: p_i0 must be +-1");
  }
  if (!alpha.k[0]) throw BridgeError("build_qp_bridge: the first path component must be nonzero (p1(0) != 0)");
  QPVerdict vf = classify(f, SolveMode::Auto);
  if (vf.status == QPStatus::Unknown) throw BridgeError("build_qp_bridge: classifier is undecided on f: " + vf.evidence);
  if (vf.status != QPStatus::QuasiPolynomial) throw BridgeError("build_qp_bridge: f is not quasi-polynomial");
  const int d = f.max_degree();
  const int e = vf.data.e;
  for (const auto& fj : f.numerators()) {
    if (fj.total_degree() != Degree(d)) throw BridgeError("build_qp_bridge: numerators must all have degree d");
  }
  for (const auto& fj : f.components()) {
    if (!degree_attained_in_x1(fj)) throw BridgeError("build_qp_bridge: need deg f_j = deg_x1 f_j (apply a domain shear)");
  }

  const MPoly w = (bx() * by() - bconst(1)).pow(2) + by().pow(4);
  const int kabs = -alpha.k0();
  // P_i as sum over j of terms y^{|k+j|} (j+k<0) and x^{e_j} y w^{-q_j} (j+k>=0)
  struct Part {
    Rat a;
    int ypow = 0;  // j+k < 0: y^{ypow}
    int ex = -1, q = 0;
  };
  std::vector<std::vector<Part>> parts(n);
  int ell0 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!alpha.k[i]) continue;
    const int k = *alpha.k[i];
    const auto& c = alpha.p[i].coeffs();
    for (int j = 0; j < static_cast<int>(c.size()); ++j) {
      if (c[j] == 0) continue;
      if (j + k < 0) {
        parts[i].push_back({c[j], -(j + k), -1, 0});
      } else {
        int s = j + k + 1;
        parts[i].push_back({c[j], 0, s % 4, s / 4});
      }
    }
    const int di = alpha.p[i].deg();
    if (di + k >= 0) ell0 = std::max(ell0, (di + k + 1) / 4);
  }
  const int ell = std::max(ell0, ell_user.value_or(ell0));
  const int mu = 4 * ell + kabs;
  const Rat p10 = alpha.p[0].coeff(0);

  MPoly h0 = w.pow(unsigned(ell));
  std::vector<MPoly> hs;
  for (std::size_t i = 0; i < n; ++i) {
    MPoly hi(2);
    for (const auto& pt : parts[i]) {
      if (pt.ex < 0) {
        hi = hi + pt.a * (by().pow(unsigned(pt.ypow)) * h0);
      } else {
        hi = hi + pt.a * (bx().pow(unsigned(pt.ex)) * by() * w.pow(unsigned(ell - pt.q)));
      }
    }
    if (i == 0) hi = hi + p10 * bx().pow(unsigned(mu));
    hs.push_back(hi);
  }
  RegularMap h = RegularMap::make(h0, hs, false);
  auto [g, gs] = precompose(f, h);

  BridgeResult res{h, g, gs, {}};
  auto& rep = res.report;
  rep.ell0 = ell0;
  rep.ell = ell;
  rep.mu = mu;
  if (ell_user && *ell_user < ell0) rep.notes.push_back("requested l below l0; using l0");

  // (1) h(t, 1/t) = alpha(t) + (p1(0) t^{8l+|k|}, 0, ..., 0)
  {
    std::vector<LaurentPoly> got = along(h, hyperbola(1));
    std::vector<LaurentPoly> want(alpha.path.components().begin(), alpha.path.components().end());
    want[0].add_term(8 * ell + kabs, p10);
    rep.checks.push_back({"(1) h(t,1/t) = alpha(t) + (p1(0) t^(8l+|k|), 0, ...)", got == want, tuple_text(got)});
  }
  // (2) h(t, 0) = (p1(0) t^{4l+|k|}, 0, ..., 0)
  {
    RationalPath axis({LaurentPoly::monomial(1, Rat(1)), LaurentPoly()});
    std::vector<LaurentPoly> got = along(h, axis);
    std::vector<LaurentPoly> want(n);
    want[0] = LaurentPoly::monomial(mu, p10);
    rep.checks.push_back({"(2) h(t,0) = (p1(0) t^(4l+|k|), 0, ...)", got == want, tuple_text(got)});
  }
  // (3) deg g0 = d(4l+|k|) - e|k|
  {
    const int want = d * mu - e * kabs;
    const int got = gs[0].total_degree().value();
    rep.checks.push_back({"(3) deg g0 = d(4l+|k|) - e|k|", got == want,
                          "deg g0 = " + std::to_string(got) + ", formula " + std::to_string(want)});
  }
  // (4) homogenizing g: G0 = u0^{e|k|} G0' with u0 not dividing G0'
  {
    const int dg = d * mu;
    int top = 0;
    for (std::size_t j = 1; j < gs.size(); ++j) top = std::max(top, gs[j].total_degree().value());
    auto [eg, g0p] = gs[0].homogenize(dg).x0_valuation();
    bool ok = top == dg && eg == e * kabs && g0p.valuation_in(0) == Degree(0);
    rep.checks.push_back({"(4) x0 does not divide G0'", ok,
                          "max deg g_j = " + std::to_string(top) + ", e_g = " + std::to_string(eg) + " (expected " +
                              std::to_string(e * kabs) + ")"});
  }
  // (5) g is quasi-polynomial (exact checker, n = 2)
  {
    QPVerdict vg = classify(g, SolveMode::Exact);
    rep.checks.push_back({"(5) classify(g) = QuasiPolynomial", vg.is_quasi_polynomial(),
                          to_string(vg.status) + " / " + to_string(vg.reason) + ": " + vg.evidence});
    rep.g_verdict = vg;
  }
  rep.checks.push_back(check_factorization(f, h, g, 100));

  // (6) limits: q along (t, 1/t) and p0 along (1/t, 0), plus the readings on f
  RationalPath e1_path = [&] {
    std::vector<LaurentPoly> c(n);
    c[0] = LaurentPoly::monomial(-1, Rat(1));
    return RationalPath(std::move(c));
  }();
  RationalPath inv_axis({LaurentPoly::monomial(-1, Rat(1)), LaurentPoly()});
  rep.limits.push_back(limit_record("q: g along (t, 1/t)", g, hyperbola(1)));
  rep.limits.push_back(limit_record("q: f along alpha", f, alpha.path));
  rep.limits.push_back(limit_record("p0: g along (1/t, 0)", g, inv_axis));
  rep.limits.push_back(limit_record("p0: f along (1/t, 0, ..., 0)", f, e1_path));
  const auto& L = rep.limits;
  if (L[2].limit && L[3].limit && !(L[2].limit->point == L[3].limit->point)) {
    rep.notes.push_back("p0 readings differ: " + L[2].limit->point.to_string() + " vs " + L[3].limit->point.to_string());
  }
  if (L[0].limit && L[1].limit && !(L[0].limit->point == L[1].limit->point)) {
    rep.notes.push_back("q readings differ: " + L[0].limit->point.to_string() + " vs " + L[1].limit->point.to_string());
  }
  return res;
}

struct ExpectedLimit {
  RationalPath path;
  ProjPoint point;
};

struct VerifyEntry {
  RationalPath path;
  ProjPoint expected;
  std::optional<ProjPoint> actual;
  bool matched = false;
  std::string error;
};

inline std::vector<VerifyEntry> verify_bridge(const BridgeResult& res, const std::vector<ExpectedLimit>& expected) {
  std::vector<VerifyEntry> out;
  for (const auto& [path, point] : expected) {
    VerifyEntry v{path, point, std::nullopt, false, ""};
    try {
      v.actual = path_limit(res.g, path).point;
      v.matched = *v.actual == point;
    } catch (const std::exception& e) {
      v.error = e.what();
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace sinfty
