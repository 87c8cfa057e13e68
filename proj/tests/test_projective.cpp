// Projective points, limits along paths, real common zeros and the
// quasi-polynomial classifier.

#include "support.hpp"

#include "sinfty/corpus.hpp"
#include "sinfty/random_maps.hpp"

#include <catch_amalgamated.hpp>

using namespace sinfty;

namespace {

RegularMap corpus_map(const std::string& name) { return parse_map(read_text_file("corpus/" + name)); }

ProjPoint pt(std::string_view s) { return parse_point(s); }

}  // namespace

TEST_CASE("projective points normalize by the first nonzero coordinate") {
  ProjPoint p = ProjPoint::normalize({Rat(0), Rat(-4), Rat(1)});
  CHECK(p.to_string() == "(0:1:-1/4)");
  CHECK(p.integral_string() == "(0:4:-1)");
  CHECK(p.at_infinity());
  CHECK(pt("(0:2:-1/2)") == p);
  CHECK_THROWS(ProjPoint::normalize({Rat(0), Rat(0)}));

  CHECK(proj_distance(pt("(0:1:0)"), pt("(0:-1:0)")) == 0);
  CHECK(proj_distance(pt("(0:1:0)"), pt("(0:0:1)")) == Catch::Approx(std::sqrt(2.0)));
  CHECK(proj_distance(p, p) == 0);
  // the shadow is unit length with a positive first nonzero entry
  CHECK(p.unit()[1] > 0);
}

TEST_CASE("proj_distance satisfies the triangle inequality") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto r = [&] {
      std::vector<Rat> v{support::nonzero_rat(rng), support::small_rat(rng), support::small_rat(rng)};
      return ProjPoint::normalize(v);
    };
    ProjPoint a = r(), b = r(), c = r();
    CHECK(proj_distance(a, c) <= proj_distance(a, b) + proj_distance(b, c) + 1e-9);
  }
}

TEST_CASE("limits along Laurent paths") {
  RegularMap ex35 = corpus_map("ex35.map");
  // (x, x^2 + y^2) along (1/t, 0) grows fastest in the second coordinate
  CHECK(path_limit(ex35, parse_path("(1/t, 0)")).point == pt("(0:0:1)"));
  CHECK(path_limit(ex35, parse_path("(1/t, 1/t)")).point == pt("(0:0:1)"));
  // a path that stays bounded has a finite limit
  LimitResult fin = path_limit(ex35, parse_path("(2 + t, t)"));
  CHECK_FALSE(fin.point.at_infinity());
  CHECK(fin.point == pt("(1:2:4)"));

  RegularMap ex41i = corpus_map("ex41i.map");
  CHECK(path_limit(ex41i, parse_path("(t, 1/t)")).point == pt("(0:0:1)"));
  CHECK(path_limit(ex41i, parse_path("(1/t, 0)")).point == pt("(0:1:0)"));

  CHECK_THROWS(path_limit(ex35, parse_path("(1/t)")));
}

TEST_CASE("limits of the three-direction example") {
  RegularMap f = corpus_map("prop42.map");
  for (auto [c, d] : {std::pair{1, 1}, {1, 2}, {2, 1}}) {
    RationalPath a({LaurentPoly::monomial(-1, Rat(d)), LaurentPoly::monomial(-1, Rat(c))});
    CHECK(path_limit(f, a).point == ProjPoint::normalize({Rat(0), Rat(d * d), Rat(c * c)}));
  }
  // off the three lines the denominator wins and the image stays bounded
  CHECK_FALSE(path_limit(f, parse_path("(3/t, 1/t)")).point.at_infinity());
}

TEST_CASE("limits are invariant under t -> t^2") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    RegularMap f = support::random_regular_map(rng, 2, 2, 3, i % 2 == 0);
    RationalPath a = support::random_path(rng, 2, 3, 2);
    try {
      ProjPoint p = path_limit(f, a).point;
      CHECK(path_limit(f, a.substitute_power(2)).point == p);
    } catch (const std::domain_error&) {
    }
  }
}

TEST_CASE("real projective common zeros") {
  auto H = [](std::string_view s) { return parse_polynomial(s, 3, VarStyle::Homogeneous); };
  SECTION("a real point") {
    ZeroResult r = real_projective_common_zeros({H("x1^2 - x2^2"), H("x0")}, SolveMode::Exact);
    REQUIRE(r.status == ZeroStatus::NonEmpty);
    REQUIRE(r.witness);
    CHECK(r.witness->certificate == "exact");
  }
  SECTION("only complex points") {
    ZeroResult r = real_projective_common_zeros({H("x1^2 + x2^2"), H("x0")}, SolveMode::Exact);
    CHECK(r.status == ZeroStatus::Empty);
  }
  SECTION("an irrational point is certified by intervals") {
    ZeroResult r = real_projective_common_zeros({H("x1^2 - 2*x2^2"), H("x0 - x1 + x2")}, SolveMode::Exact);
    REQUIRE(r.status == ZeroStatus::NonEmpty);
    REQUIRE(r.witness);
    CHECK(r.witness->certificate == "algebraic");
  }
  SECTION("numeric mode agrees on a real point") {
    ZeroResult r = real_projective_common_zeros({H("x1^2 - x2^2"), H("x0")}, SolveMode::Numeric);
    CHECK(r.status == ZeroStatus::NonEmpty);
  }
  CHECK_THROWS(real_projective_common_zeros({H("x1^2 - x2")}, SolveMode::Exact));
}

TEST_CASE("homogenization of the corpus maps") {
  HomogenizedMap h = homogenize_map(corpus_map("ex41iii.map"));
  CHECK(h.d == 22);
  CHECK(h.e == 2);
  MPoly want = parse_polynomial("(x0^4 + x1^4)^3*(x0^4 + x2^4)^2", 3, VarStyle::Homogeneous);
  CHECK(h.F0prime == want);

  HomogenizedMap g = homogenize_map(corpus_map("ex41ii.map"));
  CHECK(g.e == 0);
  CHECK_FALSE(degree_condition(g));
}

TEST_CASE("classifier verdicts") {
  auto v = [](const std::string& file) { return classify(corpus_map(file), SolveMode::Exact); };
  QPVerdict ii = v("ex41ii.map");
  CHECK(ii.status == QPStatus::NotQuasiPolynomial);
  CHECK(ii.reason == QPReason::DegreeConditionFailed);

  QPVerdict iii = v("ex41iii.map");
  CHECK(iii.status == QPStatus::NotQuasiPolynomial);
  REQUIRE(iii.witness);
  REQUIRE(iii.witness->exact);
  CHECK((*iii.witness->exact == pt("(0:1:0)") || *iii.witness->exact == pt("(0:0:1)")));
  // the witness is an exact common zero of F0', F1, F2
  for (const auto& F : std::vector<MPoly>{iii.data.F0prime, iii.data.Fs[0], iii.data.Fs[1]})
    CHECK(F.evaluate(iii.witness->exact->coords()) == 0);

  CHECK(v("ex35.map").is_quasi_polynomial());
  CHECK(v("remark35.map").reason == QPReason::OneDimensionalDomain);
  CHECK(v("ex41i.map").status == QPStatus::NotQuasiPolynomial);
  CHECK(v("prop42.map").reason == QPReason::DegreeConditionFailed);
  CHECK(classify(parse_map("(x, y) / (1 + x^2 + y^2)"), SolveMode::Exact).reason == QPReason::DegreeConditionFailed);
  CHECK(classify(parse_map("(x^3, y^3) / (1 + x^2 + y^2)"), SolveMode::Exact).reason ==
        QPReason::PositiveDefiniteF0Prime);
}

TEST_CASE("polynomial maps are always quasi-polynomial") {
  for (std::uint64_t s = 1; s <= 5; ++s) {
    RegularMap f = random_polynomial_map(s, 2 + int(s % 2));
    CHECK(classify(f, SolveMode::Exact).reason == QPReason::ConstantF0Prime);
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    RegularMap f = support::random_regular_map(rng, 1 + i % 3, 2, 3, false);
    if (f.max_degree() == 0) continue;
    CHECK(classify(f, SolveMode::Exact).is_quasi_polynomial());
  }
}

TEST_CASE("classify ignores a common factor") {
  RegularMap f = corpus_map("ex41iii.map");
  MPoly c = parse_polynomial("x*y + 3", 2);
  std::vector<MPoly> scaled;
  for (const auto& p : f.numerators()) scaled.push_back(c * p);
  RegularMap g = RegularMap::make(c * f.denominator(), scaled);
  CHECK(g == f);
  CHECK(classify(g, SolveMode::Exact).status == classify(f, SolveMode::Exact).status);
}

TEST_CASE("numeric and exact modes do not contradict") {
  for (const char* file : {"ex41i.map", "ex41iii.map", "ex35.map"}) {
    INFO(file);
    RegularMap f = corpus_map(file);
    QPVerdict num = classify(f, SolveMode::Numeric), ex = classify(f, SolveMode::Exact);
    if (num.status == QPStatus::NotQuasiPolynomial) CHECK(ex.status == QPStatus::NotQuasiPolynomial);
  }
}
