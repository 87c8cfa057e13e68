// Randomized property suites. Every generator is seeded, so a failure
// reproduces; the first few counterexamples are printed.

#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace sinfty;

namespace {

void require_clean(const support::Tally& t) {
  INFO(t.summary());
  CHECK(t.cases > 0);
  CHECK(t.failures == 0);
}

}  // namespace

TEST_CASE("print and parse round trip") { require_clean(support::prop_roundtrip(101, 300)); }

TEST_CASE("gcd reconstruction") { require_clean(support::prop_gcd_reconstruction(102, 300)); }

TEST_CASE("gcd_reduce reconstructs its inputs") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 1 + i % 3;
    MPoly c = support::random_poly(rng, n, 2, 3);
    if (c.is_zero()) continue;
    std::vector<MPoly> in;
    for (int j = 0; j < 3; ++j) in.push_back(c * support::random_poly(rng, n, 2, 3));
    if (in[0].is_zero() && in[1].is_zero() && in[2].is_zero()) continue;
    GcdReduction r = gcd_reduce(in);
    for (std::size_t j = 0; j < in.size(); ++j) CHECK(r.g * r.reduced[j] == in[j]);
    CHECK(gcd(std::span<const MPoly>(r.reduced)).is_constant());
  }
}

TEST_CASE("homogenize round trip") {
  std::mt19937_64 rng(104);
  for (int i = 0; i < 200; ++i) {
    MPoly f = support::random_poly(rng, 1 + i % 4, 4, 5);
    if (f.is_zero()) continue;
    int d = f.total_degree().value() + i % 3;
    MPoly F = f.homogenize(d);
    CHECK(F.is_homogeneous());
    CHECK(F.dehomogenize() == f);
    auto [e, rest] = F.x0_valuation();
    CHECK(MPoly::variable(F.nvars(), 0).pow(unsigned(e)) * rest == F);
    CHECK_FALSE(rest.valuation_in(0) > Degree(0));
  }
}

TEST_CASE("compose_path is a ring homomorphism") { require_clean(support::prop_compose_homomorphism(105, 300)); }

TEST_CASE("projective scaling invariance") { require_clean(support::prop_projective_scaling(106, 300)); }

TEST_CASE("exact limits agree with evaluation near t = 0") { require_clean(support::prop_limit_numeric(107, 300)); }

TEST_CASE("component count is monotone in eps") { require_clean(support::prop_eps_monotone(108, 100)); }

TEST_CASE("clustering is blind to antipodal flips") { require_clean(support::prop_antipodal(109, 100)); }

TEST_CASE("bridge identities on random paths") { require_clean(support::prop_bridge_identities(110, 200)); }
