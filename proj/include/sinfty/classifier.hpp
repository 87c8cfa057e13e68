#pragma once

// Homogenization of a regular map and the quasi-polynomial test: a map with
// e > 0 is quasi-polynomial when F0' and F1, ..., Fm have no common real zero
// in RP^n.

#include "sinfty/mpoly.hpp"
#include "sinfty/real_zeros.hpp"
#include "sinfty/regular_map.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sinfty {

struct HomogenizedMap {
  std::size_t n = 0, m = 0;
  int d = 0;  // max degree over f0, ..., fm
  int e = 0;  // F0 = x0^e * F0'
  MPoly F0, F0prime;
  std::vector<MPoly> Fs;  // F1..Fm, forms of degree d in x0..xn
};

inline HomogenizedMap homogenize_map(const RegularMap& f) {
  bool all_zero = true;
  for (const auto& p : f.numerators()) all_zero = all_zero && p.is_zero();
  if (all_zero) throw std::invalid_argument("homogenize_map: zero map");
  HomogenizedMap h;
  h.n = f.n();
  h.m = f.m();
  h.d = f.max_degree();
  h.F0 = f.denominator().homogenize(h.d);
  auto [e, rest] = h.F0.x0_valuation();
  h.e = e;
  h.F0prime = rest;
  for (const auto& p : f.numerators()) h.Fs.push_back(p.homogenize(h.d));
  return h;
}

inline bool degree_condition(const HomogenizedMap& h) { return h.e > 0; }

enum class QPStatus { QuasiPolynomial, NotQuasiPolynomial, Unknown };

enum class QPReason {
  DegreeConditionFailed,
  RealIndeterminacyOnE,
  EmptinessUndecided,
  OneDimensionalDomain,
  ConstantF0Prime,
  PositiveDefiniteF0Prime,
  NoRealCommonZero,
};

inline std::string to_string(QPStatus s) {
  switch (s) {
    case QPStatus::QuasiPolynomial: return "QuasiPolynomial";
    case QPStatus::NotQuasiPolynomial: return "NotQuasiPolynomial";
    case QPStatus::Unknown: return "Unknown";
  }
  return "?";
}

inline std::string to_string(QPReason r) {
  switch (r) {
    case QPReason::DegreeConditionFailed: return "DegreeConditionFailed";
    case QPReason::RealIndeterminacyOnE: return "RealIndeterminacyOnE";
    case QPReason::EmptinessUndecided: return "EmptinessUndecided";
    case QPReason::OneDimensionalDomain: return "OneDimensionalDomain";
    case QPReason::ConstantF0Prime: return "ConstantF0Prime";
    case QPReason::PositiveDefiniteF0Prime: return "PositiveDefiniteF0Prime";
    case QPReason::NoRealCommonZero: return "NoRealCommonZero";
  }
  return "?";
}

struct QPVerdict {
  QPStatus status;
  QPReason reason;
  HomogenizedMap data;
  std::optional<ZeroWitness> witness;
  std::string evidence;

  bool is_quasi_polynomial() const { return status == QPStatus::QuasiPolynomial; }
};

inline QPVerdict classify(const RegularMap& f, SolveMode mode = SolveMode::Auto, const NumericOptions& opt = {}) {
  if (!f.reduced()) throw std::invalid_argument("classify: map is not gcd-reduced");
  HomogenizedMap h = homogenize_map(f);
  auto verdict = [&](QPStatus s, QPReason r, std::string ev) { return QPVerdict{s, r, h, std::nullopt, std::move(ev)}; };
  if (!degree_condition(h)) {
    return verdict(QPStatus::NotQuasiPolynomial, QPReason::DegreeConditionFailed,
                   "e = " + std::to_string(h.e) + ": deg f0 is not below the numerator degree");
  }
  if (h.n == 1) return verdict(QPStatus::QuasiPolynomial, QPReason::OneDimensionalDomain, "n = 1 and e > 0");
  if (h.F0prime.is_constant()) return verdict(QPStatus::QuasiPolynomial, QPReason::ConstantF0Prime, "F0' is constant");
  if (detail::form_positive_definite(h.F0prime)) {
    return verdict(QPStatus::QuasiPolynomial, QPReason::PositiveDefiniteF0Prime, "F0' is a positive definite form");
  }
  if (mode == SolveMode::Exact && h.n > 2) {
    throw std::invalid_argument("classify: exact mode supports n <= 2 only");
  }
  std::vector<MPoly> sys{h.F0prime};
  sys.insert(sys.end(), h.Fs.begin(), h.Fs.end());
  ZeroResult z = real_projective_common_zeros(sys, mode, opt);
  switch (z.status) {
    case ZeroStatus::Empty:
      return verdict(QPStatus::QuasiPolynomial, QPReason::NoRealCommonZero, z.evidence);
    case ZeroStatus::Unknown:
      return verdict(QPStatus::Unknown, QPReason::EmptinessUndecided, z.evidence);
    case ZeroStatus::NonEmpty: {
      // A float-only witness is evidence, not proof.
      QPStatus s = z.witness->certificate == "numeric" ? QPStatus::Unknown : QPStatus::NotQuasiPolynomial;
      QPReason r = s == QPStatus::Unknown ? QPReason::EmptinessUndecided : QPReason::RealIndeterminacyOnE;
      QPVerdict v = verdict(s, r, z.evidence);
      v.witness = z.witness;
      return v;
    }
  }
  return verdict(QPStatus::Unknown, QPReason::EmptinessUndecided, "unreachable");
}

}  // namespace sinfty
