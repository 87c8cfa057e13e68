#pragma once

// Arithmetic in Q(xi) for a real algebraic number xi, given as the unique root
// of a squarefree m inside an isolating interval. Elements are polynomials
// reduced mod m. Zero tests split m (dynamic evaluation), so m may shrink
// during use; xi stays the unique root of m in the interval throughout.

#include "sinfty/rational.hpp"
#include "sinfty/upoly.hpp"

#include <stdexcept>
#include <vector>

namespace sinfty {

class RealAlgebraic {
 public:
  static RealAlgebraic rational(const Rat& v) {
    RealAlgebraic a;
    a.m_ = UPoly::linear(v);
    a.lo_ = a.hi_ = v;
    return a;
  }
  /// m squarefree, (iv.lo, iv.hi) isolating one root; exact intervals allowed.
  static RealAlgebraic root_of(const UPoly& m, const RootInterval& iv) {
    if (iv.exact()) return rational(iv.lo);
    RealAlgebraic a;
    a.m_ = m;
    a.lo_ = iv.lo;
    a.hi_ = iv.hi;
    a.shrink_if_linear();
    return a;
  }

  bool is_rational() const { return lo_ == hi_; }
  const Rat& value() const {
    if (!is_rational()) throw std::logic_error("algebraic number is irrational");
    return lo_;
  }
  const UPoly& minimal_hint() const { return m_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  double approx() const { return to_double((lo_ + hi_) / 2); }

  UPoly reduce(const UPoly& c) const {
    if (is_rational()) return UPoly(c.evaluate(lo_));
    return c % m_;
  }

  bool is_zero(const UPoly& c) {
    if (is_rational()) return c.evaluate(lo_) == 0;
    UPoly r = c % m_;
    if (r.is_zero()) return true;
    UPoly g = gcd(r, m_);
    if (g.is_constant()) return false;
    if (has_root_inside(g)) {
      m_ = g;
      shrink_if_linear();
      return true;
    }
    m_ = m_ / g;
    shrink_if_linear();
    return false;
  }

  int sign(const UPoly& c) {
    if (is_zero(c)) return 0;
    if (is_rational()) return sgn(c.evaluate(lo_));
    UPoly r = c % m_;
    // Narrow the interval until r has no root in it; r(xi) != 0 so this ends.
    while (has_root_inside(r)) {
      RootInterval iv = refine_root(m_, RootInterval{lo_, hi_}, (hi_ - lo_) / 2);
      lo_ = iv.lo;
      hi_ = iv.hi;
      if (is_rational()) return sgn(r.evaluate(lo_));
    }
    return r.sign_at((lo_ + hi_) / 2);
  }

  /// c^-1 in Q(xi); c must not vanish at xi.
  UPoly inverse(const UPoly& c) {
    if (is_zero(c)) throw std::domain_error("inverse of zero in Q(xi)");
    if (is_rational()) return UPoly(1 / c.evaluate(lo_));
    auto [g, s] = gcd_ext(c % m_, m_);
    if (!g.is_constant()) throw std::logic_error("Q(xi): element not invertible after splitting");
    return s % m_;
  }

 private:
  bool has_root_inside(const UPoly& p) const {
    auto seq = sturm_sequence(p);
    return sturm_variations_at(seq, lo_) - sturm_variations_at(seq, hi_) > 0;
  }
  void shrink_if_linear() {
    if (!is_rational() && m_.deg() == 1) {
      Rat root = -m_.coeff(0) / m_.coeff(1);
      lo_ = hi_ = root;
    }
  }

  UPoly m_;
  Rat lo_, hi_;
};

/// Univariate polynomial with coefficients in Q(xi): coeffs[k] multiplies y^k.
class AlgPoly {
 public:
  AlgPoly() = default;
  explicit AlgPoly(std::vector<UPoly> c) : c_(std::move(c)) {}

  bool is_zero() const { return c_.empty(); }
  int deg() const { return int(c_.size()) - 1; }
  const std::vector<UPoly>& coeffs() const { return c_; }

  /// Drop leading coefficients that vanish at xi; reduce the rest.
  void normalize(RealAlgebraic& xi) {
    for (auto& c : c_) c = xi.reduce(c);
    while (!c_.empty() && xi.is_zero(c_.back())) c_.pop_back();
  }

  AlgPoly derivative() const {
    std::vector<UPoly> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(Rat(static_cast<long>(k)) * c_[k]);
    return AlgPoly(std::move(d));
  }

  /// Remainder of a by b (b normalized, nonzero).
  static AlgPoly rem(AlgPoly a, const AlgPoly& b, RealAlgebraic& xi) {
    a.normalize(xi);
    UPoly inv = xi.inverse(b.c_.back());
    while (!a.is_zero() && a.deg() >= b.deg()) {
      int shift = a.deg() - b.deg();
      UPoly f = xi.reduce(a.c_.back() * inv);
      for (int k = 0; k <= b.deg(); ++k) a.c_[k + shift] = xi.reduce(a.c_[k + shift] - f * b.c_[k]);
      a.c_.back() = UPoly();
      a.normalize(xi);
    }
    return a;
  }

  static AlgPoly gcd(AlgPoly a, AlgPoly b, RealAlgebraic& xi) {
    a.normalize(xi);
    b.normalize(xi);
    while (!b.is_zero()) {
      AlgPoly r = rem(a, b, xi);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  /// Distinct real roots via a Sturm sequence whose signs are decided at xi.
  static int count_real_roots(AlgPoly p, RealAlgebraic& xi) {
    p.normalize(xi);
    if (p.is_zero()) throw std::domain_error("count_real_roots of the zero polynomial");
    std::vector<AlgPoly> seq{p};
    AlgPoly d = p.derivative();
    d.normalize(xi);
    if (!d.is_zero()) seq.push_back(d);
    while (seq.size() >= 2) {
      AlgPoly r = rem(seq[seq.size() - 2], seq.back(), xi);
      if (r.is_zero()) break;
      for (auto& c : r.c_) c = -c;
      seq.push_back(std::move(r));
    }
    std::vector<int> plus, minus;
    for (const auto& s : seq) {
      int lc = xi.sign(s.c_.back());
      plus.push_back(lc);
      minus.push_back(s.deg() % 2 == 0 ? lc : -lc);
    }
    return sign_variations(minus) - sign_variations(plus);
  }

  std::vector<double> approx_coeffs(double x) const {
    std::vector<double> out;
    for (const auto& c : c_) out.push_back(c.evaluate_double(x));
    return out;
  }

 private:
  std::vector<UPoly> c_;
};

}  // namespace sinfty
