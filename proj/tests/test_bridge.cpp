// The two bridging constructions. Identities are re-checked here by
// evaluating at rational t, independently of the Laurent comparison the
// library report uses.

#include "support.hpp"

#include "sinfty/corpus.hpp"
#include "sinfty/random_maps.hpp"

#include <catch_amalgamated.hpp>

using namespace sinfty;

namespace {

ProjPoint pt(std::string_view s) { return parse_point(s); }

// h(t, y(t)) by direct evaluation against the expected tuple at a few t
bool agrees_at(const RegularMap& h, int sign, const std::vector<LaurentPoly>& want) {
  for (Rat t : {Rat(1, 3), Rat(2), Rat(-5, 7)}) {
    std::vector<Rat> u{t, Rat(sign) / t};
    std::vector<Rat> v = h.evaluate(u);
    for (std::size_t i = 0; i < want.size(); ++i)
      if (v[i] != support::laurent_value(want[i], t)) return false;
  }
  return true;
}

std::vector<LaurentPoly> comps(const RationalPath& p) { return {p.components().begin(), p.components().end()}; }

}  // namespace

TEST_CASE("path normalization") {
  NormalizedPath a = normalize_path(parse_path("(1/t, 1)"), PathTarget::Simple);
  CHECK(a.i0 == 0);
  CHECK(a.k[0] == -1);
  CHECK(a.k[1] == 0);
  CHECK(a.reparam == 1);

  NormalizedPath q = normalize_path(parse_path("(1/t, 1)"), PathTarget::QuasiPolynomial);
  CHECK(q.reparam == 6);
  CHECK(q.path == parse_path("(t^-6, 1)"));
  CHECK(q.k0() == -6);

  CHECK(normalize_path(parse_path("(t^-3, t)"), PathTarget::QuasiPolynomial).k0() == -6);
  CHECK(normalize_path(parse_path("(t^-4, t)"), PathTarget::QuasiPolynomial).k0() == -8);
  CHECK_THROWS_AS(normalize_path(parse_path("(1/t + 1, 1)"), PathTarget::QuasiPolynomial), BridgeError);
  CHECK_THROWS_AS(normalize_path(parse_path("(t, 1)"), PathTarget::Simple), BridgeError);
}

TEST_CASE("bridge through the identity map") {
  RegularMap id = parse_map("(x, y)");
  RationalPath alpha = parse_path("(1/t, 1)"), beta = parse_path("(1, 1/t)");
  BridgeResult r =
      build_bridge(id, normalize_path(alpha, PathTarget::Simple), normalize_path(beta, PathTarget::Simple));
  CHECK(r.report.passed());
  // h = ((xy+1)/2)(y, 1) + ((1-xy)/2)(1, -y)
  RegularMap want = parse_map("((x*y + 1)*y/2 + (1 - x*y)/2, (x*y + 1)/2 - (1 - x*y)*y/2)");
  CHECK(r.h.reduce() == want);
  CHECK(agrees_at(r.h, 1, comps(alpha)));
  CHECK(agrees_at(r.h, -1, comps(beta)));

  auto v = verify_bridge(r, {{parse_path("(t, 1/t)"), pt("(0:1:0)")}, {parse_path("(t, -1/t)"), pt("(0:0:1)")}});
  REQUIRE(v.size() == 2);
  CHECK(v[0].matched);
  CHECK(v[1].matched);

  auto wrong = verify_bridge(r, {{parse_path("(t, 1/t)"), pt("(0:0:1)")}});
  CHECK_FALSE(wrong[0].matched);
  CHECK(verify_bridge(r, {}).empty());
}

TEST_CASE("bridge with equal paths") {
  RegularMap f = parse_map("(x*y, x + y)");
  NormalizedPath a = normalize_path(parse_path("(1/t + 2, t)"), PathTarget::Simple);
  BridgeResult r = build_bridge(f, a, a);
  CHECK(r.report.passed());
  REQUIRE(r.report.limits[0].limit);
  REQUIRE(r.report.limits[1].limit);
  CHECK(r.report.limits[0].limit->point == r.report.limits[1].limit->point);
}

TEST_CASE("bridge on a rational map keeps the image inside") {
  RegularMap f = parse_map(read_text_file("corpus/ex41i.map"));
  RationalPath alpha = parse_path("(t, 1/t)"), beta = parse_path("(1/t, t)");
  BridgeResult r =
      build_bridge(f, normalize_path(alpha, PathTarget::Simple), normalize_path(beta, PathTarget::Simple));
  CHECK(r.report.passed());
  CHECK(r.report.limits.size() == 4);
  // g(u) = f(h(u)) at a few rational points
  for (auto [a, b] : {std::pair{Rat(1, 2), Rat(3)}, {Rat(-2), Rat(5, 3)}}) {
    std::vector<Rat> u{a, b};
    std::vector<Rat> hu = r.h.evaluate(u);
    CHECK(r.g.evaluate(u) == f.evaluate(hu));
  }
  // limits of g along the hyperbolas match those of f along the paths
  CHECK(r.report.limits[0].limit->point == r.report.limits[2].limit->point);
  CHECK(r.report.limits[1].limit->point == r.report.limits[3].limit->point);
  CHECK_THROWS_AS(build_bridge(f, normalize_path(parse_path("(1/t)"), PathTarget::Simple),
                               normalize_path(beta, PathTarget::Simple)),
                  BridgeError);
}

TEST_CASE("quasi-polynomial bridge on (x, y^2 + x^2)") {
  RegularMap f = parse_map(read_text_file("corpus/ex35.map"));
  RationalPath alpha = parse_path("(t^-6, 1)");
  QPPrepared prep = prepare_qp_bridge(f, alpha);
  BridgeResult r = build_qp_bridge(prep.map, prep.alpha);
  for (const auto& c : r.report.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
  // oracle: d and e read off the degrees, k from the path
  const int d = prep.map.max_degree();
  const int e = d - prep.map.denominator().total_degree().value();
  const int k = 6, ell = r.report.ell;
  CHECK(r.g_terms[0].total_degree() == d * (4 * ell + k) - e * k);
  std::vector<LaurentPoly> want = comps(prep.alpha.path);
  want[0] += LaurentPoly::monomial(8 * ell + k, prep.alpha.p[0].coeff(0));
  CHECK(agrees_at(r.h, 1, want));
  REQUIRE(r.report.g_verdict);
  CHECK(r.report.g_verdict->is_quasi_polynomial());
}

TEST_CASE("quasi-polynomial bridge for larger l") {
  RegularMap f = parse_map(read_text_file("corpus/ex35.map"));
  QPPrepared prep = prepare_qp_bridge(f, parse_path("(t^-6, t^-2 + 3*t)"));
  int ell0 = build_qp_bridge(prep.map, prep.alpha).report.ell0;
  for (int ell : {ell0, ell0 + 1, ell0 + 3}) {
    BridgeResult r = build_qp_bridge(prep.map, prep.alpha, ell);
    INFO("l = " << ell);
    CHECK(r.report.ell == ell);
    CHECK(r.report.passed());
  }
  BridgeResult low = build_qp_bridge(prep.map, prep.alpha, ell0 - 1);
  CHECK(low.report.ell == ell0);
  CHECK_FALSE(low.report.notes.empty());
}

TEST_CASE("quasi-polynomial bridge preconditions") {
  RegularMap f = parse_map(read_text_file("corpus/ex35.map"));
  NormalizedPath a = normalize_path(parse_path("(t^-6, 1)"), PathTarget::QuasiPolynomial);
  // not quasi-polynomial
  RegularMap bad = parse_map(read_text_file("corpus/ex41ii.map"));
  CHECK_THROWS_AS(build_qp_bridge(bad, a), BridgeError);
  // first component zero
  NormalizedPath z = normalize_path(parse_path("(0, t^-6)"), PathTarget::QuasiPolynomial);
  CHECK_THROWS_AS(build_qp_bridge(f, z), BridgeError);
}

TEST_CASE("quasi-polynomial bridge on random polynomial maps") {
  std::mt19937_64 rng(17);
  for (std::uint64_t s = 1; s <= 12; ++s) {
    RegularMap f = random_polynomial_map(100 + s, 2 + int(s % 3 == 0));
    std::vector<LaurentPoly> c{LaurentPoly::monomial(-6, Rat(s % 2 ? 1 : -1)), support::random_laurent(rng, 4, 2)};
    RationalPath alpha(c);
    INFO(to_text(f) << " along " << to_text(alpha));
    QPPrepared prep = prepare_qp_bridge(f, alpha);
    BridgeResult r = build_qp_bridge(prep.map, prep.alpha);
    for (const auto& ch : r.report.checks) {
      INFO(ch.name << ": " << ch.detail);
      CHECK(ch.passed);
    }
  }
}
