#pragma once

// Sparse multivariate polynomials over Q.
//
// Terms are stored sorted by graded-lexicographic order, largest first, with
// variable 0 the most significant. Coefficients are never zero and exponent
// vectors never repeat, so structural equality is polynomial equality.

#include "sinfty/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sinfty {

inline constexpr std::size_t kMaxVars = 8;

using Exponent = std::array<std::uint16_t, kMaxVars>;

inline int exponent_degree(const Exponent& e) {
  int s = 0;
  for (auto v : e) s += v;
  return s;
}

/// a > b in graded lex order.
inline bool grlex_greater(const Exponent& a, const Exponent& b) {
  int da = exponent_degree(a), db = exponent_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

inline bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which compares below every integer and refuses arithmetic.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr explicit Degree(int v) : value_(v) {}
  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_minus_infinity() const { return !value_.has_value(); }
  int value() const {
    if (!value_) throw std::domain_error("degree of the zero polynomial is -infinity");
    return *value_;
  }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr bool operator<(const Degree& a, const Degree& b) {
    if (!a.value_) return b.value_.has_value();
    if (!b.value_) return false;
    return *a.value_ < *b.value_;
  }
  friend constexpr bool operator>(const Degree& a, const Degree& b) { return b < a; }
  friend constexpr bool operator<=(const Degree& a, const Degree& b) { return !(b < a); }
  friend constexpr bool operator>=(const Degree& a, const Degree& b) { return !(a < b); }
  friend constexpr bool operator==(const Degree& a, int b) { return a.value_ && *a.value_ == b; }

 private:
  std::optional<int> value_;
};

struct Term {
  Exponent exp{};
  Rat coeff;
};

class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) { check_nvars(nvars); }

  static MPoly constant(std::size_t nvars, const Rat& c) {
    MPoly p(nvars);
    if (c != 0) p.terms_.push_back(Term{Exponent{}, c});
    return p;
  }
  static MPoly variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::out_of_range("variable index out of range");
    Exponent e{};
    e[index] = 1;
    return monomial(nvars, e, Rat(1));
  }
  static MPoly monomial(std::size_t nvars, const Exponent& e, const Rat& c) {
    MPoly p(nvars);
    for (std::size_t i = nvars; i < kMaxVars; ++i)
      if (e[i] != 0) throw std::out_of_range("exponent uses a variable beyond nvars");
    if (c != 0) p.terms_.push_back(Term{e, c});
    return p;
  }
  /// Accepts unsorted terms with duplicates and zeros.
  static MPoly from_terms(std::size_t nvars, std::vector<Term> terms) {
    MPoly p(nvars);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exponent_degree(terms_[0].exp) == 0);
  }
  Rat constant_value() const {
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return terms_.empty() ? Rat(0) : terms_[0].coeff;
  }
  Rat constant_term() const {
    if (!terms_.empty() && exponent_degree(terms_.back().exp) == 0) return terms_.back().coeff;
    return Rat(0);
  }
  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.front();
  }
  const Rat& leading_coeff() const { return leading_term().coeff; }

  Degree total_degree() const {
    if (terms_.empty()) return Degree::minus_infinity();
    return Degree(exponent_degree(terms_.front().exp));
  }
  Degree degree_in(std::size_t var) const {
    if (var >= nvars_) throw std::out_of_range("degree_in: variable out of range");
    if (terms_.empty()) return Degree::minus_infinity();
    int d = 0;
    for (const auto& t : terms_) d = std::max<int>(d, t.exp[var]);
    return Degree(d);
  }
  /// Smallest exponent of `var` over all terms (its valuation); zero poly -> -inf.
  Degree valuation_in(std::size_t var) const {
    if (terms_.empty()) return Degree::minus_infinity();
    int d = terms_.front().exp[var];
    for (const auto& t : terms_) d = std::min<int>(d, t.exp[var]);
    return Degree(d);
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = exponent_degree(terms_.front().exp);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return exponent_degree(t.exp) == d; });
  }
  bool uses_variable(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.exp[var] != 0; });
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly operator-() const {
    MPoly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    same_arity(a, b);
    MPoly out(a.nvars_);
    if (a.is_zero() || b.is_zero()) return out;
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        Term t;
        for (std::size_t i = 0; i < kMaxVars; ++i) t.exp[i] = add_exp(ta.exp[i], tb.exp[i]);
        t.coeff = ta.coeff * tb.coeff;
        out.terms_.push_back(std::move(t));
      }
    }
    out.canonicalize();
    return out;
  }

  friend MPoly operator*(const Rat& c, const MPoly& p) {
    MPoly out(p.nvars_);
    if (c == 0) return out;
    out.terms_ = p.terms_;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
  }
  friend MPoly operator*(const MPoly& p, const Rat& c) { return c * p; }

  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly pow(unsigned exp) const {
    MPoly result = constant(nvars_, Rat(1));
    MPoly base = *this;
    while (exp > 0) {
      if (exp & 1u) result = result * base;
      exp >>= 1u;
      if (exp) base = base * base;
    }
    return result;
  }

  /// Multiply by the monomial x^e.
  MPoly shift(const Exponent& e) const {
    MPoly out = *this;
    for (auto& t : out.terms_)
      for (std::size_t i = 0; i < kMaxVars; ++i) t.exp[i] = add_exp(t.exp[i], e[i]);
    return out;  // order is preserved under monomial multiplication
  }

  Rat evaluate(std::span<const Rat> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluate: arity mismatch");
    std::vector<std::vector<Rat>> powers(nvars_);
    Rat sum = 0;
    for (const auto& t : terms_) {
      Rat v = t.coeff;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (t.exp[i] == 0) continue;
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Rat(1));
        while (cache.size() <= t.exp[i]) cache.push_back(cache.back() * point[i]);
        v *= cache[t.exp[i]];
      }
      sum += v;
    }
    return sum;
  }

  struct FloatValue {
    double value = 0.0;
    double magnitude = 0.0;  // sum of |term| values, bounds the rounding error
    bool finite = true;
  };

  /// Float evaluation with a running bound: |exact - value| <= gamma * magnitude
  /// with gamma ~ (size + degree) * 2^-52 when `finite` holds.
  FloatValue evaluate_double(std::span<const double> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluate: arity mismatch");
    FloatValue out;
    for (const auto& t : terms_) {
      double v = to_double(t.coeff);
      for (std::size_t i = 0; i < nvars_; ++i) {
        for (unsigned k = 0; k < t.exp[i]; ++k) v *= point[i];
      }
      out.value += v;
      out.magnitude += std::fabs(v);
    }
    out.finite = std::isfinite(out.value) && std::isfinite(out.magnitude);
    return out;
  }

  /// f(args_0, ..., args_{n-1}); every argument shares one arity.
  MPoly compose(std::span<const MPoly> args) const {
    if (args.size() != nvars_) throw std::invalid_argument("compose: arity mismatch");
    std::size_t k = args.empty() ? 0 : args[0].nvars_;
    for (const auto& a : args)
      if (a.nvars_ != k) throw std::invalid_argument("compose: arguments differ in arity");
    std::vector<std::vector<MPoly>> powers(nvars_);
    MPoly sum(k);
    for (const auto& t : terms_) {
      MPoly v = constant(k, t.coeff);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (t.exp[i] == 0) continue;
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(k, Rat(1)));
        while (cache.size() <= t.exp[i]) cache.push_back(cache.back() * args[i]);
        v = v * cache[t.exp[i]];
      }
      sum += v;
    }
    return sum;
  }

  /// Substitute a rational value for one variable; arity is kept.
  MPoly substitute_value(std::size_t var, const Rat& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    std::vector<Rat> cache{Rat(1)};
    for (const auto& t : terms_) {
      while (cache.size() <= t.exp[var]) cache.push_back(cache.back() * value);
      Term nt = t;
      nt.coeff *= cache[t.exp[var]];
      nt.exp[var] = 0;
      out.push_back(std::move(nt));
    }
    return from_terms(nvars_, std::move(out));
  }

  MPoly derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      if (t.exp[var] == 0) continue;
      Term nt = t;
      nt.coeff *= t.exp[var];
      nt.exp[var] -= 1;
      out.push_back(std::move(nt));
    }
    return from_terms(nvars_, std::move(out));
  }

  /// New arity `new_nvars` with variable i sent to slot map[i].
  MPoly remap(std::size_t new_nvars, std::span<const std::size_t> map) const {
    if (map.size() != nvars_) throw std::invalid_argument("remap: map size mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Term nt;
      nt.coeff = t.coeff;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (t.exp[i] == 0) continue;
        if (map[i] >= new_nvars) throw std::out_of_range("remap: target slot out of range");
        nt.exp[map[i]] = add_exp(nt.exp[map[i]], t.exp[i]);
      }
      out.push_back(std::move(nt));
    }
    return from_terms(new_nvars, std::move(out));
  }

  /// Coefficients with respect to one variable: f = sum_k c_k * var^k, the
  /// c_k keeping the same arity with `var` absent.
  std::map<int, MPoly> coefficients_in(std::size_t var) const {
    std::map<int, std::vector<Term>> buckets;
    for (const auto& t : terms_) {
      Term nt = t;
      int k = nt.exp[var];
      nt.exp[var] = 0;
      buckets[k].push_back(std::move(nt));
    }
    std::map<int, MPoly> out;
    for (auto& [k, ts] : buckets) out.emplace(k, from_terms(nvars_, std::move(ts)));
    return out;
  }

  /// Leading coefficient with respect to `var` (a polynomial free of var).
  MPoly leading_coeff_in(std::size_t var) const {
    if (is_zero()) return MPoly(nvars_);
    return coefficients_in(var).rbegin()->second;
  }

  /// Exact division; nullopt when `d` does not divide *this.
  std::optional<MPoly> divide_exact(const MPoly& d) const {
    same_arity(*this, d);
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (d.is_constant()) return (1 / d.constant_value()) * *this;
    MPoly rem = *this;
    std::vector<Term> quot;
    const Term& lt = d.leading_term();
    while (!rem.is_zero()) {
      const Term& r = rem.leading_term();
      if (!divides(lt.exp, r.exp)) return std::nullopt;
      Term q;
      for (std::size_t i = 0; i < kMaxVars; ++i) q.exp[i] = r.exp[i] - lt.exp[i];
      q.coeff = r.coeff / lt.coeff;
      rem -= d.shift(q.exp) * q.coeff;
      quot.push_back(std::move(q));
    }
    return from_terms(nvars_, std::move(quot));
  }

  MPoly operator/(const MPoly& d) const {
    auto q = divide_exact(d);
    if (!q) throw std::domain_error("polynomial division is not exact");
    return *q;
  }

  /// Multiply by a rational so coefficients become coprime integers with a
  /// positive leading coefficient. Zero stays zero.
  MPoly primitive() const {
    if (is_zero()) return *this;
    BigInt den_lcm = 1, num_gcd = 0;
    for (const auto& t : terms_) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    for (const auto& t : terms_) {
      BigInt v = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (leading_coeff() < 0) scale = -scale;
    return scale * *this;
  }

  /// Scaled so the leading coefficient is 1.
  MPoly monic() const {
    if (is_zero()) return *this;
    return (1 / leading_coeff()) * *this;
  }

  /// Homogenize to degree d with a new variable x0 prepended:
  /// F(x0, x1..xn) = x0^d f(x1/x0, ..., xn/x0).
  MPoly homogenize(int d) const {
    if (nvars_ + 1 > kMaxVars) throw std::out_of_range("homogenize: too many variables");
    if (!is_zero() && total_degree().value() > d) {
      throw std::invalid_argument("homogenize: degree " + std::to_string(d) +
                                  " is below the total degree " + total_degree().to_string());
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Term nt;
      nt.coeff = t.coeff;
      nt.exp[0] = static_cast<std::uint16_t>(d - exponent_degree(t.exp));
      for (std::size_t i = 0; i < nvars_; ++i) nt.exp[i + 1] = t.exp[i];
      out.push_back(std::move(nt));
    }
    return from_terms(nvars_ + 1, std::move(out));
  }

  /// Set x0 = 1 and drop it: inverse of `homogenize`.
  MPoly dehomogenize() const {
    if (nvars_ == 0) throw std::invalid_argument("dehomogenize: no variable to drop");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Term nt;
      nt.coeff = t.coeff;
      for (std::size_t i = 1; i < nvars_; ++i) nt.exp[i - 1] = t.exp[i];
      out.push_back(std::move(nt));
    }
    return from_terms(nvars_ - 1, std::move(out));
  }

  /// Split off the largest power of variable 0: *this = x0^e * rest.
  std::pair<int, MPoly> x0_valuation() const {
    if (is_zero()) throw std::domain_error("x0_valuation of the zero polynomial");
    if (nvars_ == 0) throw std::invalid_argument("x0_valuation: no variables");
    int e = valuation_in(0).value();
    MPoly rest = *this;
    for (auto& t : rest.terms_) t.exp[0] = static_cast<std::uint16_t>(t.exp[0] - e);
    return {e, rest};
  }

 private:
  static void check_nvars(std::size_t n) {
    if (n > kMaxVars) throw std::out_of_range("at most 8 variables are supported");
  }
  static void same_arity(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_) {
      throw std::invalid_argument("polynomial arity mismatch: " + std::to_string(a.nvars_) +
                                  " vs " + std::to_string(b.nvars_));
    }
  }
  static std::uint16_t add_exp(std::uint16_t a, std::uint16_t b) {
    unsigned s = unsigned(a) + unsigned(b);
    if (s > 0xFFFFu) throw std::overflow_error("exponent overflow");
    return static_cast<std::uint16_t>(s);
  }

  static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
    same_arity(a, b);
    MPoly out(a.nvars_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && grlex_greater(a.terms_[i].exp, b.terms_[j].exp))) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || grlex_greater(b.terms_[j].exp, a.terms_[i].exp)) {
        Term t = b.terms_[j++];
        if (subtract) t.coeff = -t.coeff;
        out.terms_.push_back(std::move(t));
      } else {
        Rat c = subtract ? Rat(a.terms_[i].coeff - b.terms_[j].coeff)
                         : Rat(a.terms_[i].coeff + b.terms_[j].coeff);
        if (c != 0) out.terms_.push_back(Term{a.terms_[i].exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  void canonicalize() {
    for (const auto& t : terms_)
      for (std::size_t i = nvars_; i < kMaxVars; ++i)
        if (t.exp[i] != 0) throw std::out_of_range("term uses a variable beyond nvars");
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.exp, b.exp); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exp == t.exp) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    terms_ = std::move(out);
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

inline MPoly pow(const MPoly& p, unsigned e) { return p.pow(e); }

}  // namespace sinfty
