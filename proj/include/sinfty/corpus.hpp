#pragma once

// The example corpus: a JSON index of map and set files with the values
// expected for them, and a runner that checks every expectation.

#include "sinfty/json_io.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace sinfty {

struct ExampleCase {
  std::string id;
  std::string citation;
  std::string description;
  std::string kind;  // "map" or "set"
  std::string file;  // relative to the corpus directory
  std::string source;
  Json expect;
};

struct CaseCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CaseResult {
  std::string id;
  std::string citation;
  std::vector<CaseCheck> checks;
  double seconds = 0;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

inline std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<ExampleCase> load_corpus(const std::filesystem::path& index) {
  Json j = Json::parse(read_text_file(index));
  const auto dir = index.parent_path();
  std::vector<ExampleCase> out;
  for (const auto& c : j.at("cases")) {
    ExampleCase e;
    e.id = c.at("id").get<std::string>();
    e.citation = c.at("citation").get<std::string>();
    e.description = c.value("description", "");
    e.kind = c.at("kind").get<std::string>();
    e.file = c.at("file").get<std::string>();
    e.expect = c.value("expect", Json::object());
    if (e.citation.empty()) throw std::invalid_argument("corpus case " + e.id + " has no citation");
    if (e.kind != "map" && e.kind != "set") throw std::invalid_argument("corpus case " + e.id + ": kind must be map or set");
    e.source = read_text_file(dir / e.file);
    out.push_back(std::move(e));
  }
  return out;
}

/// Points on the segment from a to b in projective coordinates, as unit
/// directions at infinity.
inline std::vector<std::vector<double>> arc_directions(const ProjPoint& a, const ProjPoint& b, int steps = 200) {
  std::vector<std::vector<double>> out;
  for (int s = 0; s <= steps; ++s) {
    Rat u = canonical(Rat(s, steps));
    std::vector<Rat> c;
    for (std::size_t i = 1; i < a.coords().size(); ++i) c.push_back((1 - u) * a.coords()[i] + u * b.coords()[i]);
    out.push_back(ProjPoint::unit_shadow(c));
  }
  return out;
}

/// Largest antipodal distance from a point of `from` to the set `to`.
inline double directed_hausdorff(const std::vector<std::vector<double>>& from, const std::vector<std::vector<double>>& to) {
  double worst = 0;
  for (const auto& u : from) {
    double best = INFINITY;
    for (const auto& v : to) best = std::min(best, antipodal_distance(u, v));
    worst = std::max(worst, best);
  }
  return worst;
}

namespace detail {

inline CaseCheck check(std::string name, bool ok, std::string detail) { return {std::move(name), ok, std::move(detail)}; }

inline void run_map_expectations(const RegularMap& f, const Json& ex, const std::filesystem::path& dir,
                                 const SampleConfig& cfg, std::vector<CaseCheck>& out) {
  if (ex.contains("homogenization")) {
    const auto& h = ex["homogenization"];
    HomogenizedMap hm = homogenize_map(f);
    out.push_back(check("d", hm.d == h.at("d").get<int>(), "d = " + std::to_string(hm.d)));
    out.push_back(check("e", hm.e == h.at("e").get<int>(), "e = " + std::to_string(hm.e)));
    if (h.contains("F0prime")) {
      MPoly want = parse_polynomial(h["F0prime"].get<std::string>(), f.n() + 1, VarStyle::Homogeneous);
      // equal up to a positive constant
      Rat c = hm.F0prime.leading_coeff() / want.leading_coeff();
      bool ok = c > 0 && hm.F0prime == c * want;
      out.push_back(check("F0' up to a positive constant", ok, to_text(hm.F0prime, VarStyle::Homogeneous)));
    }
  }
  if (ex.contains("classify")) {
    const auto& c = ex["classify"];
    SolveMode mode = c.value("mode", "exact") == "exact" ? SolveMode::Exact : SolveMode::Auto;
    QPVerdict v = classify(f, mode);
    std::string got = to_string(v.status) + "(" + to_string(v.reason) + ")";
    bool ok = to_string(v.status) == c.at("status").get<std::string>() &&
              (!c.contains("reason") || to_string(v.reason) == c["reason"].get<std::string>());
    out.push_back(check("classify", ok, got));
    if (c.contains("witness_any_of")) {
      bool hit = false;
      std::string w = "no exact witness";
      if (v.witness && v.witness->exact) {
        w = v.witness->exact->to_string();
        for (const auto& p : c["witness_any_of"]) hit = hit || parse_point(p.get<std::string>()) == *v.witness->exact;
      }
      out.push_back(check("witness", hit, w));
    }
  }
  if (ex.contains("limits")) {
    for (const auto& l : ex["limits"]) {
      std::string path = l.at("path").get<std::string>();
      try {
        LimitResult r = path_limit(f, parse_path(path));
        ProjPoint want = parse_point(l.at("point").get<std::string>());
        out.push_back(check("limit along " + path, r.point == want, r.point.to_string()));
      } catch (const std::exception& e) {
        out.push_back(check("limit along " + path, false, e.what()));
      }
    }
  }
  if (ex.contains("composed_from")) {
    const auto& c = ex["composed_from"];
    RegularMap outer = parse_map(read_text_file(dir / c.at("outer").get<std::string>()));
    RegularMap inner = parse_map(read_text_file(dir / c.at("inner").get<std::string>()));
    out.push_back(check("stored map equals the composition", outer.compose_after(inner) == f,
                        "outer " + c["outer"].get<std::string>() + ", inner " + c["inner"].get<std::string>()));
  }
}

inline void run_infinity_expectations(const InfinityReport& rep, const Json& inf, std::vector<CaseCheck>& out) {
  if (inf.contains("count")) {
    std::size_t want = inf["count"].get<std::size_t>();
    std::string counts;
    for (auto k : rep.counts()) counts += (counts.empty() ? "" : " ") + std::to_string(k);
    out.push_back(check("components at infinity (stable across radii)", rep.stable_count == want,
                        "counts per radius: " + counts));
  }
  if (inf.contains("possibly_empty")) {
    out.push_back(check("possibly empty", rep.possibly_empty == inf["possibly_empty"].get<bool>(), rep.message));
  }
  std::vector<std::vector<double>> declared;
  for (const auto& p : inf.value("points", Json::array())) declared.push_back(parse_point(p.get<std::string>()).direction());
  for (const auto& a : inf.value("arcs", Json::array())) {
    auto pts = arc_directions(parse_point(a.at("from").get<std::string>()), parse_point(a.at("to").get<std::string>()));
    declared.insert(declared.end(), pts.begin(), pts.end());
  }
  if (!declared.empty() && !rep.directions.empty()) {
    const double tol = inf.value("tolerance", 0.06);
    double h1 = directed_hausdorff(declared, rep.directions);
    double h2 = directed_hausdorff(rep.directions, declared);
    double h = std::max(h1, h2);
    out.push_back(check("Hausdorff distance to the declared set <= " + std::to_string(tol), h <= tol,
                        "distance " + std::to_string(h)));
  }
}

}  // namespace detail

inline CaseResult run_example(const ExampleCase& c, const std::filesystem::path& dir, const SampleConfig& cfg,
                              bool sample = true) {
  auto t0 = std::chrono::steady_clock::now();
  CaseResult res;
  res.id = c.id;
  res.citation = c.citation;
  try {
    if (c.kind == "map") {
      RegularMap f = parse_map(c.source);
      res.checks.push_back(detail::check("parses", true, to_text(f)));
      detail::run_map_expectations(f, c.expect, dir, cfg, res.checks);
      if (sample && (c.expect.contains("infinity") || c.expect.contains("obstructed"))) {
        ObstructionVerdict v = polynomial_image_obstruction(f, cfg);
        if (c.expect.contains("infinity")) detail::run_infinity_expectations(v.report, c.expect["infinity"], res.checks);
        if (c.expect.contains("obstructed"))
          res.checks.push_back(detail::check("obstruction", v.obstructed == c.expect["obstructed"].get<bool>(), v.message));
      }
    } else {
      SemialgebraicSet s = parse_set(c.source);
      res.checks.push_back(detail::check("parses", true, to_text(s)));
      if (sample && (c.expect.contains("infinity") || c.expect.contains("obstructed"))) {
        ObstructionVerdict v = polynomial_image_obstruction(s, cfg);
        if (c.expect.contains("infinity")) detail::run_infinity_expectations(v.report, c.expect["infinity"], res.checks);
        if (c.expect.contains("obstructed"))
          res.checks.push_back(detail::check("obstruction", v.obstructed == c.expect["obstructed"].get<bool>(), v.message));
      }
    }
  } catch (const std::exception& e) {
    res.checks.push_back(detail::check("runs", false, e.what()));
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

inline Json case_result_json(const CaseResult& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"id", r.id}, {"citation", r.citation}, {"passed", r.passed()}, {"seconds", r.seconds}, {"checks", checks}};
}

}  // namespace sinfty
