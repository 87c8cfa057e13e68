#pragma once

// Exact rationals backed by GMP's mpq_class. Every value is kept canonical
// (reduced, positive denominator) after each operation.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sinfty {

using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat canonical(Rat q) {
  q.canonicalize();
  return q;
}

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const BigInt& z) { return sgn(z); }

/// Decimal text "p" or "p/q"; inverse of `to_string`.
inline std::string to_string(const Rat& q) { return q.get_str(10); }

inline Rat rat_from_string(std::string_view text) {
  Rat q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("not a rational literal: " + std::string(text));
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

inline Rat pow(const Rat& base, unsigned long exp) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  return out;
}

/// Exact conversion; every finite double is a dyadic rational.
inline Rat rat_from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite double");
  return Rat(v);
}

/// Nearest double, with saturation to +-inf rather than UB on huge values.
inline double to_double(const Rat& q) {
  if (q == 0) return 0.0;
  // mpq get_d truncates; go through mpz exponents to keep huge values finite-or-inf.
  long exp_num = 0, exp_den = 0;
  double mn = mpz_get_d_2exp(&exp_num, q.get_num_mpz_t());
  double md = mpz_get_d_2exp(&exp_den, q.get_den_mpz_t());
  long e = exp_num - exp_den;
  if (e > 2000) return mn > 0 ? std::numeric_limits<double>::infinity()
                              : -std::numeric_limits<double>::infinity();
  if (e < -2000) return 0.0;
  return std::ldexp(mn / md, static_cast<int>(e));
}

/// log2 |q| up to ~1e-15 relative error, q != 0.
inline double log2_abs(const Rat& q) {
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log2(std::fabs(mn / md)) + static_cast<double>(en - ed);
}

inline BigInt floor(const Rat& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline BigInt ceil(const Rat& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

/// The rational with the smallest denominator in the closed interval [lo, hi]
/// (Stern-Brocot descent via continued fractions). Requires lo <= hi.
inline Rat simplest_between(Rat lo, Rat hi) {
  if (lo > hi) throw std::invalid_argument("simplest_between: empty interval");
  if (lo <= 0 && hi >= 0) return Rat(0);
  bool negate = false;
  if (hi < 0) {
    negate = true;
    Rat t = -lo;
    lo = -hi;
    hi = t;
  }
  // 0 < lo <= hi
  BigInt fl = floor(lo);
  Rat out;
  if (Rat(fl) == lo) {
    out = Rat(fl);
  } else if (Rat(fl + 1) <= hi) {
    out = Rat(fl + 1);
  } else {
    // both in (fl, fl+1): recurse on reciprocals of fractional parts
    Rat inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
    out = Rat(fl) + 1 / inner;
  }
  out.canonicalize();
  return negate ? Rat(-out) : out;
}

}  // namespace sinfty
