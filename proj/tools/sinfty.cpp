// sinfty command-line front end. JSON on stdout by default, --pretty for
// people. Exit codes: 0 success, 1 domain error, 2 usage error.

#include "sinfty/corpus.hpp"
#include "sinfty/sinfty.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace sinfty;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool g_pretty = false;
bool g_emit_ast = false;

std::string read_input(const std::string& path) {
  if (!fs::exists(path)) throw UsageError("no such file: " + path);
  return read_text_file(path);
}

RegularMap load_map(const std::string& path, Json& out) {
  RegularMap f = parse_map(read_input(path));
  if (auto hint = denominator_zero_hint(f)) {
    out["warnings"].push_back(*hint);
    std::cerr << "warning: " << *hint << "\n";
  }
  if (g_emit_ast) out["ast"] = ast_json(f);
  return f;
}

void emit(const Json& j, const std::string& human) {
  if (g_pretty)
    std::cout << human;
  else
    std::cout << j.dump() << "\n";
}

std::string verdict_text(const QPVerdict& v) {
  std::ostringstream s;
  s << to_string(v.status) << " (" << to_string(v.reason) << ")\n";
  s << "  d = " << v.data.d << ", e = " << v.data.e << "\n";
  s << "  F0' = " << to_text(v.data.F0prime, VarStyle::Homogeneous) << "\n";
  if (v.witness) {
    s << "  witness (" << v.witness->certificate << "): ";
    if (v.witness->exact)
      s << v.witness->exact->to_string();
    else {
      s << "approximately (";
      for (std::size_t i = 0; i < v.witness->approx.size(); ++i) s << (i ? ":" : "") << v.witness->approx[i];
      s << ")";
    }
    s << "\n";
  }
  if (!v.evidence.empty()) s << "  " << v.evidence << "\n";
  return s.str();
}

std::string bridge_text(const BridgeResult& r) {
  std::ostringstream s;
  s << "h = " << to_text(r.h) << "\n";
  s << "g = " << to_text(r.g) << "\n";
  for (const auto& c : r.report.checks) s << (c.passed ? "  PASS  " : "  FAIL  ") << c.name << "  " << c.detail << "\n";
  for (const auto& l : r.report.limits) {
    s << "  limit " << l.label << " along " << to_text(l.path) << ": ";
    s << (l.limit ? l.limit->point.integral_string() : l.error) << "\n";
  }
  for (const auto& n : r.report.notes) s << "  note: " << n << "\n";
  return s.str();
}

std::string infinity_text(const ObstructionVerdict& v) {
  std::ostringstream s;
  const auto& r = v.report;
  s << v.message << "\n";
  for (const auto& rr : r.radii) {
    s << "  R = " << rr.radius << ": kept " << rr.kept << "/" << rr.attempts << ", components " << rr.component_count
      << "\n";
  }
  s << "  stable count: " << (r.stable_count ? std::to_string(*r.stable_count) : "unstable") << "\n";
  for (const auto& c : r.clusters()) {
    s << "  cluster of " << c.size << " around (";
    for (std::size_t i = 0; i < c.centroid.size(); ++i) s << (i ? ", " : "") << std::setprecision(4) << c.centroid[i];
    s << "), extent " << c.extent;
    if (c.nearest_candidate) s << ", nearest candidate " << c.nearest_candidate->to_string();
    s << "\n";
  }
  if (!r.message.empty()) s << "  " << r.message << "\n";
  for (const auto& w : r.warnings) s << "  warning: " << w << "\n";
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Points at infinity of polynomial and regular images"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", g_pretty, "Human-readable output instead of JSON");
  app.add_flag("--emit-ast", g_emit_ast, "Include the parsed input as a JSON syntax tree");

  // classify
  auto* cls = app.add_subcommand("classify", "Quasi-polynomial classification of a regular map");
  std::string cls_file, cls_mode = "auto";
  cls->add_option("mapfile", cls_file, "Map file")->required();
  cls->add_option("--mode", cls_mode, "Emptiness test: exact, numeric or auto")
      ->check(CLI::IsMember({"exact", "numeric", "auto"}));

  // limit
  auto* lim = app.add_subcommand("limit", "Exact limit of a map along a rational path");
  std::string lim_file, lim_path;
  lim->add_option("mapfile", lim_file, "Map file")->required();
  lim->add_option("--path", lim_path, "Laurent path in t, e.g. \"(2/t, 1/t)\"")->required();

  // bridge
  auto* br = app.add_subcommand("bridge", "Bridging map through two paths to infinity");
  std::string br_file, br_alpha, br_beta;
  br->add_option("mapfile", br_file, "Map file")->required();
  br->add_option("--alpha", br_alpha, "First path")->required();
  br->add_option("--beta", br_beta, "Second path")->required();

  // qp-bridge
  auto* qb = app.add_subcommand("qp-bridge", "Quasi-polynomial bridge along one path");
  std::string qb_file, qb_alpha;
  std::optional<int> qb_ell;
  qb->add_option("mapfile", qb_file, "Map file")->required();
  qb->add_option("--alpha", qb_alpha, "Path to infinity")->required();
  qb->add_option("--ell", qb_ell, "Exponent l (at least the minimal admissible value)");

  // sample-infinity
  auto* si = app.add_subcommand("sample-infinity", "Sample the points at infinity and test connectivity");
  std::string si_map, si_set, si_config, si_svg;
  bool si_dirs = false;
  auto* om = si->add_option("--map", si_map, "Map file");
  auto* os = si->add_option("--set", si_set, "Set file");
  om->excludes(os);
  si->add_option("--config", si_config, "JSON sampler configuration (file path or inline JSON)");
  si->add_option("--svg", si_svg, "Write the circle at infinity (m = 2) to this SVG file");
  si->add_flag("--directions", si_dirs, "Include every sampled direction in the report");

  // examples
  auto* ex = app.add_subcommand("examples", "The example corpus");
  ex->require_subcommand(1);
  std::string corpus_path = "corpus/corpus.json", only;
  bool no_sample = false;
  ex->add_option("--corpus", corpus_path, "Corpus index");
  auto* ex_run = ex->add_subcommand("run", "Check every corpus expectation");
  ex_run->add_option("--only", only, "Run a single case by id");
  ex_run->add_flag("--no-sample", no_sample, "Skip the sampler checks");
  auto* ex_list = ex->add_subcommand("list", "List corpus cases");
  (void)ex_list;

  // compose
  auto* cp = app.add_subcommand("compose", "Compose two regular maps: outer o inner");
  std::string cp_outer, cp_inner;
  cp->add_option("outer", cp_outer, "Outer map file")->required();
  cp->add_option("inner", cp_inner, "Inner map file")->required();

  // parse
  auto* ps = app.add_subcommand("parse", "Parse and print in canonical form");
  std::string ps_file, ps_kind = "map";
  ps->add_option("file", ps_file, "Input file")->required();
  ps->add_option("--kind", ps_kind, "map, set or path")->check(CLI::IsMember({"map", "set", "path"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Json out = Json::object();
  try {
    if (*cls) {
      RegularMap f = load_map(cls_file, out);
      SolveMode mode = cls_mode == "exact" ? SolveMode::Exact : cls_mode == "numeric" ? SolveMode::Numeric : SolveMode::Auto;
      QPVerdict v = classify(f, mode);
      Json j = verdict_json(v);
      for (auto it = out.begin(); it != out.end(); ++it) j[it.key()] = it.value();
      emit(j, verdict_text(v));
      return 0;
    }
    if (*lim) {
      RegularMap f = load_map(lim_file, out);
      RationalPath path = parse_path(lim_path);
      LimitResult r = path_limit(f, path);
      Json j = limit_json(r);
      j["path"] = to_text(path);
      for (auto it = out.begin(); it != out.end(); ++it) j[it.key()] = it.value();
      emit(j, r.point.integral_string() + "\n");
      return 0;
    }
    if (*br) {
      RegularMap f = load_map(br_file, out);
      auto a = normalize_path(parse_path(br_alpha), PathTarget::Simple);
      auto b = normalize_path(parse_path(br_beta), PathTarget::Simple);
      BridgeResult r = build_bridge(f, a, b);
      Json j = bridge_json(r);
      for (auto it = out.begin(); it != out.end(); ++it) j[it.key()] = it.value();
      emit(j, bridge_text(r));
      return r.report.passed() ? 0 : 1;
    }
    if (*qb) {
      RegularMap f = load_map(qb_file, out);
      QPPrepared prep = prepare_qp_bridge(f, parse_path(qb_alpha));
      BridgeResult r = build_qp_bridge(prep.map, prep.alpha, qb_ell);
      Json j = bridge_json(r);
      Json order = Json::array(), rc = Json::array(), dc = Json::array();
      for (auto k : prep.shear.range_order) order.push_back(k + 1);
      j["prepared"] = {{"map", to_text(prep.map)},
                       {"path", to_text(prep.alpha.path)},
                       {"reparam", prep.alpha.reparam},
                       {"range_order", order},
                       {"range_coeffs", rats_json(prep.shear.range_coeffs)},
                       {"domain_coeffs", rats_json(prep.shear.domain_coeffs)}};
      for (auto it = out.begin(); it != out.end(); ++it) j[it.key()] = it.value();
      emit(j, "prepared map " + to_text(prep.map) + "\npath " + to_text(prep.alpha.path) + "\n" + bridge_text(r));
      return r.report.passed() ? 0 : 1;
    }
    if (*si) {
      if (si_map.empty() == si_set.empty()) throw UsageError("sample-infinity needs exactly one of --map or --set");
      SampleConfig cfg;
      if (!si_config.empty()) {
        std::string text = fs::exists(si_config) ? read_text_file(si_config) : si_config;
        Json cj;
        try {
          cj = Json::parse(text);
        } catch (const Json::parse_error&) {
          throw UsageError("--config is neither a file nor valid JSON: " + si_config);
        }
        cfg = sample_config_from_json(cj);
      }
      ObstructionVerdict v;
      if (!si_map.empty()) {
        RegularMap f = load_map(si_map, out);
        v = polynomial_image_obstruction(f, cfg);
      } else {
        SemialgebraicSet s = parse_set(read_input(si_set));
        if (g_emit_ast) out["ast"] = ast_json(s);
        v = polynomial_image_obstruction(s, cfg);
      }
      if (!si_svg.empty()) {
        std::ofstream svg(si_svg);
        if (!svg) throw UsageError("cannot write " + si_svg);
        svg << infinity_svg(v.report);
      }
      Json j = obstruction_json(v, si_dirs);
      for (auto it = out.begin(); it != out.end(); ++it) j[it.key()] = it.value();
      emit(j, infinity_text(v));
      return 0;
    }
    if (*ex) {
      if (!fs::exists(corpus_path)) throw UsageError("no such corpus index: " + corpus_path);
      auto cases = load_corpus(corpus_path);
      if (*ex_list) {
        Json list = Json::array();
        std::ostringstream s;
        for (const auto& c : cases) {
          list.push_back({{"id", c.id}, {"citation", c.citation}, {"kind", c.kind}, {"file", c.file}});
          s << std::left << std::setw(12) << c.id << std::setw(30) << c.citation << c.description << "\n";
        }
        emit({{"cases", list}}, s.str());
        return 0;
      }
      SampleConfig cfg;
      Json results = Json::array();
      std::ostringstream s;
      bool all = true;
      std::size_t ran = 0;
      for (const auto& c : cases) {
        if (!only.empty() && c.id != only) continue;
        ++ran;
        CaseResult r = run_example(c, fs::path(corpus_path).parent_path(), cfg, !no_sample);
        all = all && r.passed();
        results.push_back(case_result_json(r));
        s << (r.passed() ? "PASS  " : "FAIL  ") << std::left << std::setw(12) << r.id << std::setw(34) << r.citation
          << std::fixed << std::setprecision(2) << r.seconds << "s\n";
        for (const auto& ch : r.checks)
          s << "        " << (ch.passed ? "ok    " : "FAILED") << " " << ch.name << ": " << ch.detail << "\n";
      }
      if (ran == 0) throw UsageError("no corpus case with id " + only);
      emit({{"passed", all}, {"cases", results}}, s.str());
      return all ? 0 : 1;
    }
    if (*cp) {
      RegularMap outer = load_map(cp_outer, out), inner = load_map(cp_inner, out);
      RegularMap f = outer.compose_after(inner);
      emit({{"map", to_text(f)}}, to_text(f) + "\n");
      return 0;
    }
    if (*ps) {
      std::string text = read_input(ps_file);
      Json j;
      std::string canon;
      if (ps_kind == "map") {
        auto f = parse_map(text);
        canon = to_text(f);
        j = {{"text", canon}, {"ast", ast_json(f)}};
      } else if (ps_kind == "set") {
        auto s = parse_set(text);
        canon = to_text(s);
        j = {{"text", canon}, {"ast", ast_json(s)}};
      } else {
        auto p = parse_path(text);
        canon = to_text(p);
        j = {{"text", canon}, {"ast", ast_json(p)}};
      }
      emit(j, canon + "\n");
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    emit({{"error", {{"kind", "parse"}, {"line", e.line()}, {"col", e.col()}, {"message", e.message()}}}}, "");
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit({{"error", {{"kind", "domain"}, {"message", e.what()}}}}, "");
    return 1;
  }
  return 2;
}
