#pragma once

// Dense univariate polynomials over Q: Euclid, resultants, Sturm sequences
// and real-root isolation.

#include "sinfty/mpoly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sinfty {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit UPoly(const Rat& constant) {
    if (constant != 0) c_.push_back(constant);
  }
  static UPoly x() { return UPoly(std::vector<Rat>{Rat(0), Rat(1)}); }
  static UPoly linear(const Rat& root) { return UPoly(std::vector<Rat>{Rat(-root), Rat(1)}); }

  /// Read a polynomial that only involves `var`.
  static UPoly from_mpoly(const MPoly& p, std::size_t var) {
    std::vector<Rat> c;
    for (const auto& t : p.terms()) {
      for (std::size_t i = 0; i < p.nvars(); ++i)
        if (i != var && t.exp[i] != 0) throw std::invalid_argument("from_mpoly: not univariate");
      std::size_t k = t.exp[var];
      if (c.size() <= k) c.resize(k + 1, Rat(0));
      c[k] = t.coeff;
    }
    return UPoly(std::move(c));
  }
  MPoly to_mpoly(std::size_t nvars, std::size_t var) const {
    std::vector<Term> ts;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      Term t;
      t.exp[var] = static_cast<std::uint16_t>(k);
      t.coeff = c_[k];
      ts.push_back(std::move(t));
    }
    return MPoly::from_terms(nvars, std::move(ts));
  }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Degree degree() const { return c_.empty() ? Degree::minus_infinity() : Degree(int(c_.size()) - 1); }
  int deg() const { return degree().value(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& lc() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
  }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly operator-() const {
    UPoly o = *this;
    for (auto& v : o.c_) v = -v;
    return o;
  }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const Rat& s, const UPoly& a) {
    if (s == 0) return UPoly();
    UPoly o = a;
    for (auto& v : o.c_) v *= s;
    return o;
  }

  /// Quotient and remainder over Q.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (deg_or_neg() < d.deg()) return {UPoly(), *this};
    std::vector<Rat> r = c_;
    std::vector<Rat> q(c_.size() - d.c_.size() + 1, Rat(0));
    const Rat inv = 1 / d.lc();
    for (int k = int(r.size()) - 1; k >= d.deg(); --k) {
      if (r[k] == 0) continue;
      Rat f = r[k] * inv;
      q[k - d.deg()] = f;
      for (int j = 0; j <= d.deg(); ++j) r[k - d.deg() + j] -= f * d.c_[j];
    }
    r.resize(d.c_.size() - 1);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  UPoly operator/(const UPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("univariate division is not exact");
    return q;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UPoly(std::move(c));
  }

  UPoly monic() const { return is_zero() ? *this : (1 / lc()) * *this; }

  /// Positive rescaling to coprime integer coefficients; signs are preserved.
  UPoly positive_primitive() const {
    if (is_zero()) return *this;
    BigInt den = 1, num = 0;
    for (const auto& v : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    for (const auto& v : c_) {
      BigInt w = v.get_num() * (den / v.get_den());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), w.get_mpz_t());
    }
    Rat s(den, num);
    s.canonicalize();
    return s * *this;
  }

  Rat evaluate(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  int sign_at(const Rat& x) const { return sgn(evaluate(x)); }
  double evaluate_double(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
  }

  /// Sign of p(x) as x -> +inf (dir = +1) or -inf (dir = -1).
  int sign_at_infinity(int dir) const {
    if (is_zero()) return 0;
    int s = sgn(lc());
    return (dir < 0 && deg() % 2 == 1) ? -s : s;
  }

  /// Cauchy bound: every real root lies in (-B, B).
  Rat root_bound() const {
    if (deg_or_neg() < 1) return Rat(1);
    Rat m = 0;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
      Rat v = abs(c_[i] / lc());
      if (v > m) m = v;
    }
    return Rat(1) + m;
  }

 private:
  int deg_or_neg() const { return c_.empty() ? -1 : int(c_.size()) - 1; }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = r.positive_primitive();
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s) with s*a = g (mod b), g monic.
inline std::pair<UPoly, UPoly> gcd_ext(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b, s0(Rat(1)), s1;
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    UPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  Rat inv = 1 / r0.lc();
  return {inv * r0, inv * s0};
}

inline UPoly squarefree_part(const UPoly& p) {
  if (p.is_constant()) return p;
  UPoly g = gcd(p, p.derivative());
  return (p / g).positive_primitive();
}

/// Res(A, B) = lc(A)^deg B * prod B(roots of A), via Euclid over Q.
inline Rat resultant(UPoly a, UPoly b) {
  if (a.is_zero() || b.is_zero()) return Rat(0);
  Rat acc = 1;
  while (true) {
    const int m = a.deg(), n = b.deg();
    if (n == 0) return acc * pow(b.lc(), static_cast<unsigned long>(m));
    if (m == 0) return acc * pow(a.lc(), static_cast<unsigned long>(n));
    UPoly r = a % b;
    if (r.is_zero()) return Rat(0);
    const int k = r.deg();
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    acc *= pow(b.lc(), static_cast<unsigned long>(m - k));
    a = std::move(b);
    b = std::move(r);
  }
}

/// Sturm sequence with positive rescaling at every step.
inline std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p.positive_primitive());
  UPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d.positive_primitive());
  while (true) {
    UPoly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back((-r).positive_primitive());
  }
  return seq;
}

inline int sign_variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

inline int sturm_variations_at(const std::vector<UPoly>& seq, const Rat& x) {
  std::vector<int> s;
  s.reserve(seq.size());
  for (const auto& p : seq) s.push_back(p.sign_at(x));
  return sign_variations(s);
}

inline int sturm_variations_at_infinity(const std::vector<UPoly>& seq, int dir) {
  std::vector<int> s;
  for (const auto& p : seq) s.push_back(p.sign_at_infinity(dir));
  return sign_variations(s);
}

/// Number of distinct real roots.
inline int count_real_roots(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("count_real_roots of the zero polynomial");
  auto seq = sturm_sequence(p);
  return sturm_variations_at_infinity(seq, -1) - sturm_variations_at_infinity(seq, +1);
}

/// Either an exact rational root (lo == hi) or an open interval (lo, hi)
/// holding exactly one root, with p(lo), p(hi) nonzero of opposite signs.
struct RootInterval {
  Rat lo, hi;
  bool exact() const { return lo == hi; }
};

/// Halve an isolating interval of a simple root of squarefree p until its
/// width is at most `width`. Lands on the root exactly when a midpoint hits it.
inline RootInterval refine_root(const UPoly& p, RootInterval iv, const Rat& width) {
  if (iv.exact()) return iv;
  int slo = p.sign_at(iv.lo);
  while (iv.hi - iv.lo > width) {
    Rat mid = (iv.lo + iv.hi) / 2;
    int sm = p.sign_at(mid);
    if (sm == 0) return RootInterval{mid, mid};
    if (sm == slo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

/// Try the simplest rational in the interval; promote to an exact root when it
/// is one. Exact whenever the root is rational with denominator below about
/// 2^(bits/2) after refinement to width 2^-bits.
inline RootInterval try_rational_root(const UPoly& p, RootInterval iv, unsigned bits = 40) {
  if (iv.exact()) return iv;
  Rat width(1);
  width /= Rat(BigInt(1) << bits);
  for (unsigned b = 8; ; b = std::min(bits, b * 2)) {
    Rat w(1);
    w /= Rat(BigInt(1) << b);
    iv = refine_root(p, iv, w);
    if (iv.exact()) return iv;
    Rat s = simplest_between(iv.lo, iv.hi);
    if (p.sign_at(s) == 0) return RootInterval{s, s};
    if (b >= bits) break;
  }
  return iv;
}

/// Isolate every real root of p (squarefree part taken internally).
inline std::vector<RootInterval> isolate_real_roots(const UPoly& p) {
  std::vector<RootInterval> out;
  if (p.is_zero()) throw std::domain_error("isolate_real_roots of the zero polynomial");
  if (p.is_constant()) return out;
  UPoly q = squarefree_part(p);
  auto seq = sturm_sequence(q);
  Rat bound = q.root_bound();
  struct Work {
    Rat lo, hi;
    int vlo, vhi;
  };
  std::vector<Work> stack{{-bound, bound, sturm_variations_at(seq, -bound), sturm_variations_at(seq, bound)}};
  while (!stack.empty()) {
    Work w = stack.back();
    stack.pop_back();
    int count = w.vlo - w.vhi;
    if (count <= 0) continue;
    if (count == 1) {
      out.push_back(RootInterval{w.lo, w.hi});
      continue;
    }
    Rat mid = (w.lo + w.hi) / 2;
    int vm = sturm_variations_at(seq, mid);
    if (q.sign_at(mid) == 0) {
      // exact root at the midpoint: cut out a root-free-elsewhere neighbourhood
      out.push_back(RootInterval{mid, mid});
      Rat delta = (w.hi - w.lo) / 4;
      while (true) {
        Rat a = mid - delta, b = mid + delta;
        if (q.sign_at(a) != 0 && q.sign_at(b) != 0) {
          int va = sturm_variations_at(seq, a), vb = sturm_variations_at(seq, b);
          if (va - vb == 1) {
            stack.push_back(Work{b, w.hi, vb, w.vhi});
            stack.push_back(Work{w.lo, a, w.vlo, va});
            break;
          }
        }
        delta /= 2;
      }
    } else {
      stack.push_back(Work{mid, w.hi, vm, w.vhi});
      stack.push_back(Work{w.lo, mid, w.vlo, vm});
    }
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace sinfty
