#pragma once

// Univariate Laurent polynomials in t over Q, and evaluation of a
// multivariate polynomial along a tuple of them.

#include "sinfty/mpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sinfty {

class LaurentPoly {
 public:
  using TermMap = std::map<int, Rat>;  // exponent -> nonzero coefficient

  LaurentPoly() = default;
  explicit LaurentPoly(const Rat& c) {
    if (c != 0) terms_.emplace(0, c);
  }
  static LaurentPoly monomial(int exp, const Rat& c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(exp, c);
    return p;
  }
  static LaurentPoly from_terms(const std::vector<std::pair<int, Rat>>& terms) {
    LaurentPoly p;
    for (const auto& [k, c] : terms) p.add_term(k, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Lowest exponent with a nonzero coefficient; nullopt for zero.
  std::optional<int> ord() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }
  std::optional<int> top() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }
  Rat coefficient(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(int exp, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    for (const auto& [k, c] : b.terms_) a.add_term(k, c);
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    for (const auto& [k, c] : b.terms_) a.add_term(k, -c);
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
    return out;
  }
  friend LaurentPoly operator*(const Rat& s, const LaurentPoly& a) {
    LaurentPoly out;
    if (s == 0) return out;
    out.terms_ = a.terms_;
    for (auto& [k, c] : out.terms_) c *= s;
    return out;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly pow(unsigned e) const {
    LaurentPoly result(Rat(1)), base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  /// Multiply by t^k.
  LaurentPoly shift(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
  }

  /// Reparametrize t -> t^s, s >= 1.
  LaurentPoly substitute_power(int s) const {
    if (s < 1) throw std::invalid_argument("substitute_power: exponent must be >= 1");
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e * s, c);
    return out;
  }

  /// Exact quotient by a monomial c*t^k.
  LaurentPoly divide_by_monomial(const LaurentPoly& m) const {
    if (!m.is_monomial()) throw std::domain_error("Laurent division requires a monomial divisor");
    const auto& [k, c] = *m.terms_.begin();
    return (1 / c) * shift(-k);
  }

  /// t^{-ord} * self as an ordinary polynomial; coefficients indexed by degree.
  std::vector<Rat> unit_part() const {
    std::vector<Rat> out;
    if (terms_.empty()) return out;
    int lo = *ord();
    out.assign(static_cast<std::size_t>(*top() - lo + 1), Rat(0));
    for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e - lo)] = c;
    return out;
  }

  Rat evaluate(const Rat& t) const {
    if (t == 0 && !terms_.empty() && *ord() < 0) throw std::domain_error("Laurent pole at t = 0");
    Rat sum = 0;
    for (const auto& [e, c] : terms_) {
      Rat p = pow_rat(t, std::abs(e));
      sum += e < 0 ? Rat(c / p) : Rat(c * p);
    }
    return sum;
  }
  double evaluate_double(double t) const {
    double sum = 0;
    for (const auto& [e, c] : terms_) sum += to_double(c) * std::pow(t, e);
    return sum;
  }

 private:
  static Rat pow_rat(const Rat& b, int e) { return sinfty::pow(b, static_cast<unsigned long>(e)); }
  TermMap terms_;
};

/// f(alpha_1(t), ..., alpha_n(t)) exactly.
inline LaurentPoly compose_path(const MPoly& f, std::span<const LaurentPoly> path) {
  if (path.size() != f.nvars()) {
    throw std::invalid_argument("compose_path: polynomial has " + std::to_string(f.nvars()) +
                                " variables but the path has " + std::to_string(path.size()) +
                                " components");
  }
  std::vector<std::vector<LaurentPoly>> powers(path.size());
  LaurentPoly sum;
  for (const auto& t : f.terms()) {
    LaurentPoly v(t.coeff);
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (t.exp[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(LaurentPoly(Rat(1)));
      while (cache.size() <= t.exp[i]) cache.push_back(cache.back() * path[i]);
      v = v * cache[t.exp[i]];
    }
    sum += v;
  }
  return sum;
}

}  // namespace sinfty
