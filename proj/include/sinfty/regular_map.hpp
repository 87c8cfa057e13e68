#pragma once

// Regular maps f = (f1/f0, ..., fm/f0) : R^n -> R^m and rational paths.

#include "sinfty/laurent.hpp"
#include "sinfty/mpoly.hpp"
#include "sinfty/mpoly_gcd.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sinfty {

class RegularMap {
 public:
  /// Builds and (by default) gcd-reduces. The reduced form is canonical: the
  /// common gcd is divided out and the tuple (f0, ..., fm) is scaled to
  /// coprime integer coefficients with f0 having positive leading coefficient.
  static RegularMap make(MPoly f0, std::vector<MPoly> fs, bool reduce = true) {
    if (f0.is_zero()) throw std::invalid_argument("regular map: the denominator f0 is zero");
    for (const auto& f : fs) {
      if (f.nvars() != f0.nvars()) throw std::invalid_argument("regular map: components differ in arity");
    }
    RegularMap out;
    out.f0_ = std::move(f0);
    out.fs_ = std::move(fs);
    if (reduce) out = out.reduce();
    return out;
  }
  static RegularMap polynomial(std::vector<MPoly> fs, std::size_t n) {
    return make(MPoly::constant(n, Rat(1)), std::move(fs));
  }

  std::size_t n() const { return f0_.nvars(); }
  std::size_t m() const { return fs_.size(); }
  const MPoly& denominator() const { return f0_; }
  const std::vector<MPoly>& numerators() const { return fs_; }
  /// i = 0 is the denominator, i = 1..m the numerators.
  const MPoly& component(std::size_t i) const { return i == 0 ? f0_ : fs_.at(i - 1); }
  std::vector<MPoly> components() const {
    std::vector<MPoly> all{f0_};
    all.insert(all.end(), fs_.begin(), fs_.end());
    return all;
  }
  bool reduced() const { return reduced_; }
  bool is_polynomial() const { return f0_.is_constant(); }

  /// max_i deg f_i over i = 0..m.
  int max_degree() const {
    int d = f0_.total_degree().value();
    for (const auto& f : fs_)
      if (!f.is_zero()) d = std::max(d, f.total_degree().value());
    return d;
  }

  RegularMap reduce() const {
    auto red = gcd_reduce(components());
    RegularMap out;
    BigInt den = 1;
    for (const auto& p : red.reduced)
      for (const auto& t : p.terms()) den = lcm(den, BigInt(t.coeff.get_den()));
    BigInt g = 0;
    for (const auto& p : red.reduced)
      for (const auto& t : p.terms()) g = gcd(g, BigInt(Rat(Rat(den) * t.coeff).get_num()));
    Rat scale(den, g);
    scale.canonicalize();
    if (red.reduced[0].leading_coeff() < 0) scale = -scale;
    out.f0_ = scale * red.reduced[0];
    for (std::size_t i = 1; i < red.reduced.size(); ++i) out.fs_.push_back(scale * red.reduced[i]);
    out.reduced_ = true;
    return out;
  }

  friend bool operator==(const RegularMap& a, const RegularMap& b) {
    return a.f0_ == b.f0_ && a.fs_ == b.fs_;
  }

  /// f o g for g : R^k -> R^n: numerators F_i(g0, g1, ..., gn) with F_i the
  /// degree-d homogenization of f_i, d = max degree of f.
  RegularMap compose_after(const RegularMap& inner) const {
    if (inner.m() != n()) throw std::invalid_argument("compose: inner map has the wrong range dimension");
    const int d = max_degree();
    std::vector<MPoly> args = inner.components();
    std::vector<MPoly> out;
    for (std::size_t i = 0; i <= m(); ++i) out.push_back(component(i).homogenize(d).compose(args));
    MPoly g0 = out.front();
    out.erase(out.begin());
    return make(std::move(g0), std::move(out));
  }

  /// Exact value f(x); throws where f0 vanishes.
  std::vector<Rat> evaluate(std::span<const Rat> x) const {
    Rat d = f0_.evaluate(x);
    if (d == 0) throw std::domain_error("regular map: denominator vanishes at the point");
    std::vector<Rat> out;
    for (const auto& f : fs_) out.push_back(f.evaluate(x) / d);
    return out;
  }

 private:
  MPoly f0_;
  std::vector<MPoly> fs_;
  bool reduced_ = false;
};

/// (y1, y2 + b2 y1, ..., ym + bm y1) after f; f0 untouched. b has m-1 entries.
inline RegularMap shear_range(const RegularMap& f, std::span<const Rat> b) {
  if (f.m() == 0 || b.size() + 1 != f.m()) throw std::invalid_argument("shear_range: need m-1 coefficients");
  std::vector<MPoly> fs = f.numerators();
  for (std::size_t j = 1; j < fs.size(); ++j) fs[j] = fs[j] + b[j - 1] * fs[0];
  return RegularMap::make(f.denominator(), std::move(fs));
}

/// Substitute (x1, x2 + a2 x1, ..., xn + an x1) inside every component.
inline RegularMap shear_domain(const RegularMap& f, std::span<const Rat> a) {
  const std::size_t n = f.n();
  if (n == 0 || a.size() + 1 != n) throw std::invalid_argument("shear_domain: need n-1 coefficients");
  std::vector<MPoly> args;
  MPoly x1 = MPoly::variable(n, 0);
  args.push_back(x1);
  for (std::size_t i = 1; i < n; ++i) args.push_back(MPoly::variable(n, i) + a[i - 1] * x1);
  std::vector<MPoly> fs;
  for (const auto& p : f.numerators()) fs.push_back(p.compose(args));
  return RegularMap::make(f.denominator().compose(args), std::move(fs));
}

/// Reorder range coordinates: new component j is old component order[j].
inline RegularMap permute_range(const RegularMap& f, std::span<const std::size_t> order) {
  if (order.size() != f.m()) throw std::invalid_argument("permute_range: wrong permutation size");
  std::vector<MPoly> fs;
  for (auto j : order) fs.push_back(f.numerators().at(j));
  return RegularMap::make(f.denominator(), std::move(fs));
}

/// Leading homogeneous form of p.
inline MPoly leading_form(const MPoly& p) {
  if (p.is_zero()) return p;
  int d = p.total_degree().value();
  std::vector<Term> ts;
  for (const auto& t : p.terms())
    if (exponent_degree(t.exp) == d) ts.push_back(t);
  return MPoly::from_terms(p.nvars(), std::move(ts));
}

/// Range reordering, range shear and domain shear making
///   deg f1 = ... = deg fm = d  and  deg fj = deg_{x1} fj  for j = 0..m.
/// Coefficients come from deterministic enumeration, smallest first.
struct NormalizingShear {
  std::vector<std::size_t> range_order;  // new j <- old range_order[j]
  std::vector<Rat> range_coeffs;         // b2..bm
  std::vector<Rat> domain_coeffs;        // a2..an
  RegularMap map;
};

inline bool degree_attained_in_x1(const MPoly& p) {
  return p.is_zero() || p.degree_in(0) == p.total_degree();
}

inline NormalizingShear find_normalizing_shear(const RegularMap& f) {
  if (f.m() == 0) throw std::invalid_argument("find_normalizing_shear: map has no components");
  NormalizingShear out;
  const auto& fs = f.numerators();
  std::size_t top = 0;
  for (std::size_t j = 0; j < fs.size(); ++j)
    if (fs[j].total_degree() > fs[top].total_degree()) top = j;
  if (fs[top].is_zero()) throw std::invalid_argument("find_normalizing_shear: all numerators are zero");
  out.range_order.push_back(top);
  for (std::size_t j = 0; j < fs.size(); ++j)
    if (j != top) out.range_order.push_back(j);
  RegularMap g = permute_range(f, out.range_order);
  const Degree d = g.numerators()[0].total_degree();
  for (std::size_t j = 1; j < g.m(); ++j) {
    // components already of degree d keep b = 0; shorter ones take b = 1
    out.range_coeffs.push_back(g.numerators()[j].total_degree() < d ? Rat(1) : Rat(0));
  }
  if (g.m() > 1) g = shear_range(g, out.range_coeffs);

  const std::size_t n = g.n();
  if (n <= 1) {
    out.map = g;
    return out;
  }
  // prod_j L_j(1, a2..an) != 0 where L_j are leading forms (including f0)
  std::vector<MPoly> forms;
  int budget = 0;
  for (const auto& p : g.components()) {
    if (p.is_zero()) continue;
    forms.push_back(leading_form(p));
    budget += p.total_degree().value();
  }
  std::vector<int> digits(n - 1, 0);
  for (int s = 0; s <= budget + 1; ++s) {
    // enumerate tuples in {0..s}^(n-1) whose max entry is s, lexicographically
    std::vector<int> t(n - 1, 0);
    while (true) {
      if (*std::max_element(t.begin(), t.end()) == s) {
        std::vector<Rat> point{Rat(1)};
        for (int v : t) point.push_back(Rat(v));
        bool ok = std::all_of(forms.begin(), forms.end(),
                              [&](const MPoly& L) { return L.evaluate(point) != 0; });
        if (ok) {
          for (int v : t) out.domain_coeffs.push_back(Rat(v));
          out.map = shear_domain(g, out.domain_coeffs);
          return out;
        }
      }
      std::size_t k = t.size();
      while (k > 0 && t[k - 1] == s) t[--k] = 0;
      if (k == 0) break;
      ++t[k - 1];
    }
  }
  throw std::logic_error("find_normalizing_shear: no shear found within the grid bound");
}

class RationalPath {
 public:
  RationalPath() = default;
  explicit RationalPath(std::vector<LaurentPoly> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw std::invalid_argument("rational path needs at least one component");
  }

  std::size_t size() const { return comps_.size(); }
  const LaurentPoly& operator[](std::size_t i) const { return comps_.at(i); }
  std::span<const LaurentPoly> components() const { return comps_; }

  std::optional<int> order(std::size_t i) const { return comps_.at(i).ord(); }

  /// Smallest order over nonzero components; nullopt for the zero path.
  std::optional<int> min_order() const {
    std::optional<int> best;
    for (const auto& c : comps_) {
      auto o = c.ord();
      if (o && (!best || *o < *best)) best = o;
    }
    return best;
  }
  /// i0: first index attaining the minimal order (0 for the zero path).
  std::size_t marked_index() const {
    auto best = min_order();
    if (!best) return 0;
    for (std::size_t i = 0; i < comps_.size(); ++i)
      if (comps_[i].ord() == best) return i;
    return 0;
  }
  bool goes_to_infinity() const {
    auto k = min_order();
    return k && *k < 0;
  }

  RationalPath substitute_power(int s) const {
    std::vector<LaurentPoly> out;
    for (const auto& c : comps_) out.push_back(c.substitute_power(s));
    return RationalPath(std::move(out));
  }

  friend bool operator==(const RationalPath& a, const RationalPath& b) { return a.comps_ == b.comps_; }

 private:
  std::vector<LaurentPoly> comps_;
};

/// alpha'_1 = alpha_1, alpha'_i = alpha_i - a_i alpha_1: the path that the
/// domain-sheared map sends where f sends alpha.
inline RationalPath unshear_path(const RationalPath& alpha, std::span<const Rat> a) {
  if (a.size() + 1 != alpha.size()) throw std::invalid_argument("unshear_path: coefficient count");
  std::vector<LaurentPoly> out{alpha[0]};
  for (std::size_t i = 1; i < alpha.size(); ++i) out.push_back(alpha[i] - a[i - 1] * alpha[0]);
  return RationalPath(std::move(out));
}

}  // namespace sinfty
