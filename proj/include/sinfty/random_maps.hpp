#pragma once

// Seeded random polynomial maps R^2 -> R^2 with small integer coefficients,
// used as generic test inputs.

#include "sinfty/regular_map.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace sinfty {

/// Dense components of exact total degree `degree` (coefficients in [-3, 3]);
/// the leading forms are kept nonzero and non-proportional so the map is
/// non-constant and its two components are independent.
inline RegularMap random_polynomial_map(std::uint64_t seed, int degree, std::size_t n = 2, std::size_t m = 2) {
  if (degree < 1) throw std::invalid_argument("random_polynomial_map: degree must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto random_poly = [&] {
    while (true) {
      std::vector<Term> terms;
      // all exponents with total degree <= degree
      std::vector<int> e(n, 0);
      while (true) {
        int tot = 0;
        for (int v : e) tot += v;
        if (tot <= degree) {
          int c = coeff(rng);
          if (c != 0) {
            Exponent ex{};
            for (std::size_t i = 0; i < n; ++i) ex[i] = static_cast<std::uint16_t>(e[i]);
            terms.push_back({ex, Rat(c)});
          }
        }
        std::size_t k = 0;
        while (k < n && e[k] == degree) e[k++] = 0;
        if (k == n) break;
        ++e[k];
      }
      MPoly p = MPoly::from_terms(n, std::move(terms));
      if (!p.is_zero() && p.total_degree().value() == degree) return p;
    }
  };
  while (true) {
    std::vector<MPoly> fs;
    for (std::size_t j = 0; j < m; ++j) fs.push_back(random_poly());
    if (m >= 2) {
      MPoly a = leading_form(fs[0]), b = leading_form(fs[1]);
      // proportional leading forms would make the map degenerate at infinity
      if (!(a * b.terms().front().coeff == b * a.terms().front().coeff && a.terms().size() == b.terms().size())) {
        return RegularMap::polynomial(std::move(fs), n);
      }
      continue;
    }
    return RegularMap::polynomial(std::move(fs), n);
  }
}

}  // namespace sinfty
