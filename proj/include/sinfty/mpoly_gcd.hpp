#pragma once

// Multivariate gcd over Q by content / primitive-part recursion: the main
// variable is eliminated with a primitive pseudo-remainder sequence, and the
// contents (polynomials in the remaining variables) recurse. Worst case is
// exponential in the number of variables; at the sizes used here (a handful
// of variables, degrees up to a few dozen) it stays well under a second.

#include "sinfty/mpoly.hpp"
#include "sinfty/upoly.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace sinfty {

MPoly gcd(const MPoly& a, const MPoly& b);

namespace detail {

inline MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t var) {
  const int db = b.degree_in(var).value();
  const MPoly lb = b.leading_coeff_in(var);
  MPoly r = a;
  while (!r.is_zero() && r.degree_in(var).value() >= db) {
    const int k = r.degree_in(var).value();
    MPoly lr = r.leading_coeff_in(var);
    Exponent shift{};
    shift[var] = static_cast<std::uint16_t>(k - db);
    r = lb * r - lr * b.shift(shift);
    r = r.primitive();
  }
  return r;
}

/// gcd of the coefficients of p viewed as a polynomial in `var`.
inline MPoly content_in(const MPoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  MPoly c(p.nvars());
  bool first = true;
  for (auto& [k, coeff] : p.coefficients_in(var)) {
    (void)k;
    c = first ? coeff.primitive() : gcd(c, coeff);
    first = false;
    if (c.is_constant()) return MPoly::constant(p.nvars(), Rat(1));
  }
  return c;
}

inline std::optional<std::size_t> first_used_var(const MPoly& a, const MPoly& b) {
  for (std::size_t v = 0; v < a.nvars(); ++v)
    if (a.uses_variable(v) || b.uses_variable(v)) return v;
  return std::nullopt;
}

/// Image of p in Q[x_v] after fixing every other variable at `point`.
inline UPoly specialize_to(const MPoly& p, std::size_t v, const std::vector<Rat>& point) {
  MPoly q = p;
  for (std::size_t i = 0; i < p.nvars(); ++i)
    if (i != v && q.uses_variable(i)) q = q.substitute_value(i, point[i]);
  return UPoly::from_mpoly(q, v);
}

/// Cheap certificate that gcd(a, b) is constant: for each variable v, a
/// specialization of the others that keeps both leading coefficients in v
/// nonzero and has coprime univariate images forces deg_v gcd = 0.
/// A false answer only means no certificate was found.
inline bool certainly_coprime(const MPoly& a, const MPoly& b) {
  const std::size_t n = a.nvars();
  for (std::size_t v = 0; v < n; ++v) {
    if (!a.uses_variable(v) || !b.uses_variable(v)) continue;
    const MPoly la = a.leading_coeff_in(v), lb = b.leading_coeff_in(v);
    bool done = false;
    for (int attempt = 0; attempt < 4 && !done; ++attempt) {
      std::vector<Rat> point(n);
      for (std::size_t i = 0; i < n; ++i) point[i] = Rat(static_cast<long>((i + 2) * (attempt + 1) + attempt * attempt));
      if (la.evaluate(point) == 0 || lb.evaluate(point) == 0) continue;
      if (!gcd(specialize_to(a, v, point), specialize_to(b, v, point)).is_constant()) return false;
      done = true;
    }
    if (!done) return false;
  }
  return true;
}

inline std::optional<std::size_t> single_variable(const MPoly& a) {
  std::optional<std::size_t> v;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (!a.uses_variable(i)) continue;
    if (v) return std::nullopt;
    v = i;
  }
  return v;
}

}  // namespace detail

/// Greatest common divisor, normalized to coprime integer coefficients with a
/// positive graded-lex leading coefficient. gcd(0, 0) = 0.
inline MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("gcd: arity mismatch");
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  const std::size_t n = a.nvars();
  if (a.is_constant() || b.is_constant()) return MPoly::constant(n, Rat(1));
  if (a == b) return a.primitive();
  {
    auto va = detail::single_variable(a), vb = detail::single_variable(b);
    if (va && vb && *va == *vb) {
      UPoly g = gcd(UPoly::from_mpoly(a, *va), UPoly::from_mpoly(b, *va));
      return g.to_mpoly(n, *va).primitive();
    }
  }
  if (detail::certainly_coprime(a, b)) return MPoly::constant(n, Rat(1));

  const std::size_t v = *detail::first_used_var(a, b);
  if (!a.uses_variable(v)) return gcd(a, detail::content_in(b, v));
  if (!b.uses_variable(v)) return gcd(detail::content_in(a, v), b);

  MPoly ca = detail::content_in(a, v);
  MPoly cb = detail::content_in(b, v);
  MPoly c = gcd(ca, cb);
  MPoly pa = (a / ca).primitive();
  MPoly pb = (b / cb).primitive();
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (true) {
    MPoly r = detail::pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (!r.uses_variable(v)) return c;
    pa = std::move(pb);
    pb = (r / detail::content_in(r, v)).primitive();
  }
  MPoly g = (pb / detail::content_in(pb, v)).primitive();
  return (c * g).primitive();
}

inline MPoly gcd(std::span<const MPoly> polys) {
  if (polys.empty()) throw std::invalid_argument("gcd of an empty list");
  MPoly g(polys[0].nvars());
  for (const auto& p : polys) {
    g = gcd(g, p);
    if (!g.is_zero() && g.is_constant()) return MPoly::constant(g.nvars(), Rat(1));
  }
  return g;
}

inline MPoly lcm(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly(a.nvars());
  return ((a * b) / gcd(a, b)).primitive();
}

struct GcdReduction {
  MPoly g;
  std::vector<MPoly> reduced;  // same order as the input list
};

/// Divide every input by their common gcd g (primitive, positive leading
/// coefficient). The reduced list has a constant gcd.
inline GcdReduction gcd_reduce(std::span<const MPoly> inputs) {
  if (inputs.empty()) throw std::invalid_argument("gcd_reduce: empty input");
  MPoly g = gcd(inputs);
  if (g.is_zero()) throw std::invalid_argument("gcd_reduce: all inputs are zero");
  GcdReduction out{g, {}};
  out.reduced.reserve(inputs.size());
  for (const auto& p : inputs) out.reduced.push_back(p / g);
  return out;
}

inline GcdReduction gcd_reduce(const MPoly& f0, std::span<const MPoly> fs) {
  std::vector<MPoly> all{f0};
  all.insert(all.end(), fs.begin(), fs.end());
  return gcd_reduce(all);
}

/// Product of the distinct irreducible factors of p (up to a constant).
inline MPoly squarefree_part(const MPoly& p) {
  if (p.is_zero() || p.is_constant()) return p.primitive();
  MPoly g = p;
  for (std::size_t v = 0; v < p.nvars(); ++v) {
    if (!p.uses_variable(v)) continue;
    g = gcd(g, p.derivative(v));
    if (g.is_constant()) return p.primitive();
  }
  return (p / g).primitive();
}

}  // namespace sinfty
