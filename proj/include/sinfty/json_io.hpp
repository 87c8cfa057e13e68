#pragma once

// JSON views of parsed objects and reports (nlohmann::json). Rationals are
// always emitted as exact strings "p" or "p/q".

#include "sinfty/bridge.hpp"
#include "sinfty/classifier.hpp"
#include "sinfty/sampler.hpp"
#include "sinfty/text.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sinfty {

using Json = nlohmann::ordered_json;

// --- AST export: every node is {kind, children} or {kind, terms} ----------

inline Json ast_json(const MPoly& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json exp = Json::array();
    for (std::size_t i = 0; i < p.nvars(); ++i) exp.push_back(t.exp[i]);
    terms.push_back({{"coeff", to_string(t.coeff)}, {"exp", exp}});
  }
  return {{"kind", "poly"}, {"nvars", p.nvars()}, {"terms", terms}};
}

inline Json ast_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"coeff", to_string(c)}, {"exp", e}});
  return {{"kind", "laurent"}, {"terms", terms}};
}

inline Json ast_json(const RegularMap& f) {
  Json children = Json::array();
  for (const auto& p : f.components()) children.push_back(ast_json(p));
  // children[0] is the denominator f0
  return {{"kind", "map"}, {"n", f.n()}, {"m", f.m()}, {"children", children}};
}

inline Json ast_json(const RationalPath& path) {
  Json children = Json::array();
  for (const auto& c : path.components()) children.push_back(ast_json(c));
  return {{"kind", "path"}, {"children", children}};
}

inline Json ast_json(const SetNode& node) {
  switch (node.kind) {
    case SetNode::Kind::Atom:
      return {{"kind", "atom"}, {"rel", to_text(node.rel)}, {"children", Json::array({ast_json(node.poly)})}};
    case SetNode::Kind::And:
    case SetNode::Kind::Or: {
      Json children = Json::array();
      for (const auto& c : node.children) children.push_back(ast_json(c));
      return {{"kind", node.kind == SetNode::Kind::And ? "and" : "or"}, {"children", children}};
    }
  }
  return {};
}

inline Json ast_json(const SemialgebraicSet& s) {
  return {{"kind", "set"}, {"n", s.n()}, {"children", Json::array({ast_json(s.root())})}};
}

// --- values -----------------------------------------------------------------

inline Json rats_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

inline Json point_json(const ProjPoint& p) {
  return {{"coords", rats_json(p.coords())}, {"text", p.integral_string()}};
}

/// "(0:1:1/4)" -> ProjPoint; the inverse of ProjPoint::to_string.
inline ProjPoint parse_point(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string x) {
    auto b = x.find_first_not_of(" \t"), e = x.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
  };
  s = strip(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("projective point must look like (a0:a1:...:am)");
  std::vector<Rat> coords;
  std::string body = s.substr(1, s.size() - 2);
  std::size_t start = 0;
  while (true) {
    auto colon = body.find(':', start);
    coords.push_back(rat_from_string(strip(body.substr(start, colon - start))));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (coords.size() < 2) throw std::invalid_argument("projective point needs at least two coordinates");
  return ProjPoint::normalize(std::move(coords));
}

inline Json limit_json(const LimitResult& r) {
  return {{"point", point_json(r.point)},
          {"at_infinity", r.point.at_infinity()},
          {"nu", r.nu},
          {"leading", rats_json(r.leading)}};
}

inline Json witness_json(const ZeroWitness& w) {
  Json j = {{"certificate", w.certificate}};
  if (w.exact) j["coords"] = rats_json(w.exact->coords());
  if (!w.lo.empty()) {
    j["lo"] = rats_json(w.lo);
    j["hi"] = rats_json(w.hi);
  }
  if (!w.approx.empty()) j["approx"] = w.approx;
  return j;
}

inline Json verdict_json(const QPVerdict& v) {
  Json j = {{"status", to_string(v.status)},
            {"reason", to_string(v.reason)},
            {"n", v.data.n},
            {"m", v.data.m},
            {"d", v.data.d},
            {"e", v.data.e},
            {"F0prime", to_text(v.data.F0prime, VarStyle::Homogeneous)},
            {"evidence", v.evidence}};
  if (v.witness) j["witness"] = witness_json(*v.witness);
  return j;
}

inline Json bridge_json(const BridgeResult& r) {
  Json checks = Json::array();
  for (const auto& c : r.report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  Json limits = Json::array();
  for (const auto& l : r.report.limits) {
    Json e = {{"label", l.label}, {"path", to_text(l.path)}};
    if (l.limit) e["limit"] = limit_json(*l.limit);
    if (!l.error.empty()) e["error"] = l.error;
    limits.push_back(e);
  }
  Json j = {{"h", to_text(r.h)},
            {"g", to_text(r.g)},
            {"passed", r.report.passed()},
            {"checks", checks},
            {"limits", limits},
            {"ell0", r.report.ell0},
            {"ell", r.report.ell},
            {"mu", r.report.mu},
            {"notes", r.report.notes}};
  if (r.report.g_verdict) j["g_verdict"] = verdict_json(*r.report.g_verdict);
  return j;
}

inline Json infinity_json(const InfinityReport& r, bool with_directions = false) {
  Json radii = Json::array();
  for (const auto& rr : r.radii) {
    Json clusters = Json::array();
    for (const auto& c : rr.clusters) {
      Json cj = {{"size", c.size}, {"centroid", c.centroid}, {"extent", c.extent}};
      if (c.nearest_candidate) {
        cj["nearest_candidate"] = point_json(*c.nearest_candidate);
        cj["candidate_distance"] = c.candidate_distance;
      }
      clusters.push_back(cj);
    }
    radii.push_back({{"radius", rr.radius},
                     {"attempts", rr.attempts},
                     {"kept", rr.kept},
                     {"acceptance", rr.acceptance()},
                     {"component_count", rr.component_count},
                     {"clusters", clusters}});
  }
  Json j = {{"source", r.source},
            {"dim", r.dim},
            {"eps", r.eps},
            {"n_samples", r.n_samples},
            {"seed", r.seed},
            {"component_counts", r.counts()},
            {"stable_count", r.stable_count ? Json(*r.stable_count) : Json("unstable")},
            {"possibly_empty", r.possibly_empty},
            {"message", r.message},
            {"radii", radii},
            {"warnings", r.warnings},
            {"exact_evaluations", r.exact_evaluations}};
  if (with_directions) j["directions"] = r.directions;
  return j;
}

inline Json obstruction_json(const ObstructionVerdict& v, bool with_directions = false) {
  return {{"verdict", v.message}, {"obstructed", v.obstructed}, {"report", infinity_json(v.report, with_directions)}};
}

/// Reads {radii, n_samples, eps, seed, max_norm, candidates, threads}; absent
/// keys keep their defaults.
inline SampleConfig sample_config_from_json(const Json& j) {
  SampleConfig cfg;
  if (!j.is_object()) throw std::invalid_argument("sample config must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k == "radii") cfg.radii = it->get<std::vector<double>>();
    else if (k == "n_samples") cfg.n_samples = it->get<std::size_t>();
    else if (k == "eps") cfg.eps = it->get<double>();
    else if (k == "seed") cfg.seed = it->get<std::uint64_t>();
    else if (k == "max_norm") cfg.max_norm = it->get<double>();
    else if (k == "threads") cfg.threads = it->get<unsigned>();
    else if (k == "candidates") {
      for (const auto& c : *it) cfg.candidates.push_back(parse_point(c.get<std::string>()));
    } else {
      throw std::invalid_argument("sample config: unknown key '" + k + "'");
    }
  }
  cfg.validate();
  return cfg;
}

}  // namespace sinfty
