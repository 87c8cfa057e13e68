#pragma once

// Points of real projective space and exact limits of maps along paths.

#include "sinfty/laurent.hpp"
#include "sinfty/regular_map.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace sinfty {

/// A point (x0 : x1 : ... : xm) stored with its first nonzero coordinate equal
/// to 1. The float shadow is the unit vector of the same representative and
/// is only ever used for distances.
class ProjPoint {
 public:
  ProjPoint() = default;

  static ProjPoint normalize(std::vector<Rat> raw) {
    std::size_t first = 0;
    while (first < raw.size() && raw[first] == 0) ++first;
    if (first == raw.size()) throw std::invalid_argument("projective point: all coordinates are zero");
    Rat inv = 1 / raw[first];
    for (auto& c : raw) c *= inv;
    ProjPoint p;
    p.coords_ = std::move(raw);
    p.shadow_ = unit_shadow(p.coords_);
    return p;
  }

  /// Number of affine coordinates m (the point lives in RP^m).
  std::size_t dim() const { return coords_.empty() ? 0 : coords_.size() - 1; }
  const std::vector<Rat>& coords() const { return coords_; }
  const std::vector<double>& unit() const { return shadow_; }
  bool at_infinity() const { return !coords_.empty() && coords_[0] == 0; }

  /// Unit vector of (x1, ..., xm) with first nonzero entry positive; the
  /// direction this point at infinity represents.
  std::vector<double> direction() const {
    std::vector<Rat> tail(coords_.begin() + 1, coords_.end());
    return unit_shadow(tail);
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ":";
      s += sinfty::to_string(coords_[i]);
    }
    return s + ")";
  }

  /// The primitive integer representative, e.g. (0:4:1) for (0:1:1/4).
  std::string integral_string() const {
    BigInt den = 1, g = 0;
    for (const auto& c : coords_) den = lcm(den, BigInt(c.get_den()));
    for (const auto& c : coords_) g = gcd(g, BigInt(Rat(c * den).get_num()));
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ":";
      s += BigInt(Rat(coords_[i] * den).get_num() / g).get_str();
    }
    return s + ")";
  }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

  /// Unit vector of v (scaled exactly by its largest entry before rounding),
  /// sign fixed so the first nonzero entry is positive. Zero -> empty.
  static std::vector<double> unit_shadow(const std::vector<Rat>& v) {
    Rat big = 0;
    for (const auto& c : v)
      if (abs(c) > big) big = abs(c);
    if (big == 0) return {};
    std::vector<double> u;
    double norm = 0;
    int first_sign = 0;
    for (const auto& c : v) {
      double x = to_double(c / big);
      if (first_sign == 0 && c != 0) first_sign = sgn(c);
      u.push_back(x);
      norm += x * x;
    }
    norm = std::sqrt(norm);
    for (auto& x : u) x = first_sign * x / norm;
    return u;
  }

 private:
  std::vector<Rat> coords_;
  std::vector<double> shadow_;
};

inline bool proj_equal(const ProjPoint& a, const ProjPoint& b) { return a == b; }

/// min(|u - v|, |u + v|) on unit representatives.
inline double antipodal_distance(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw std::invalid_argument("antipodal distance: dimension mismatch");
  double dm = 0, dp = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dm += (u[i] - v[i]) * (u[i] - v[i]);
    dp += (u[i] + v[i]) * (u[i] + v[i]);
  }
  return std::sqrt(std::min(dm, dp));
}

inline double proj_distance(const ProjPoint& a, const ProjPoint& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("proj_distance: points live in different spaces");
  return antipodal_distance(a.unit(), b.unit());
}

struct LimitResult {
  ProjPoint point;
  int nu = 0;                 // common minimal order
  std::vector<Rat> leading;   // coefficient of t^nu in (g0, ..., gm)
};

/// lim_{t->0+} (f0 : f1 : ... : fm)(alpha(t)). Exact: read off the
/// coefficients of the smallest power of t across all components.
inline LimitResult path_limit(const RegularMap& f, const RationalPath& alpha) {
  if (alpha.size() != f.n()) {
    throw std::invalid_argument("path_limit: map has " + std::to_string(f.n()) +
                                " variables, path has " + std::to_string(alpha.size()) + " components");
  }
  std::vector<LaurentPoly> g;
  for (std::size_t i = 0; i <= f.m(); ++i) g.push_back(compose_path(f.component(i), alpha.components()));
  if (g[0].is_zero()) {
    throw std::domain_error("path_limit: the denominator vanishes identically along the path");
  }
  int nu = *g[0].ord();
  for (const auto& gi : g)
    if (!gi.is_zero()) nu = std::min(nu, *gi.ord());
  LimitResult out;
  out.nu = nu;
  for (const auto& gi : g) out.leading.push_back(gi.coefficient(nu));
  out.point = ProjPoint::normalize(out.leading);
  return out;
}

}  // namespace sinfty
