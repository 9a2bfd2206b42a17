#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "curvelab/analysis.hpp"
#include "curvelab/generators.hpp"
#include "curvelab/parse.hpp"
#include "curvelab/regression_suite.hpp"

namespace curvelab::cli {

namespace {

struct Inputs {
  std::string curve, surface, point;
  int ext_degree = -1;
  int depth_cap = -1;
  std::uint64_t seed = 1;
  bool approx = false, assume_smooth = false, timing = false;
  std::string format = "json";
  // generate
  std::string kind, tag = "T", params, name;
  int degree = 0;
  bool singular = false;
  // surface
  std::string mode;
  // verify-paper
  int criterion = 0;
};

std::string read_source(const std::string& text) {
  if (text.empty() || text.front() != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) fail(ErrorCode::InvalidArgument, "cannot read " + text.substr(1));
  std::stringstream s;
  s << in.rdbuf();
  std::string body = s.str();
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r' || body.back() == ' ')) body.pop_back();
  return body;
}

EngineOptions engine_options(const Inputs& in) {
  EngineOptions o;
  if (const char* env = std::getenv("CURVELAB_EXT_DEGREE")) {
    try {
      o.max_extension_degree = std::stoi(env);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "CURVELAB_EXT_DEGREE must be an integer");
    }
  }
  if (in.ext_degree >= 0) o.max_extension_degree = in.ext_degree;
  if (in.depth_cap >= 0) o.depth_cap = in.depth_cap;
  if (o.max_extension_degree < 1) fail(ErrorCode::InvalidArgument, "extension degree bound must be positive");
  return o;
}

PlaneCurve need_curve(const Inputs& in) {
  if (in.curve.empty()) fail(ErrorCode::InvalidArgument, "--curve is required");
  return PlaneCurve::parse(read_source(in.curve));
}

ProjPoint need_point(const Inputs& in, int dim) {
  if (in.point.empty()) fail(ErrorCode::InvalidArgument, "--point is required");
  const auto coords = parse_point(in.point);
  if (static_cast<int>(coords.size()) != dim)
    fail(ErrorCode::DimensionMismatch, "expected a point with " + std::to_string(dim) + " coordinates");
  return ProjPoint::from_rationals(coords);
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

ThresholdTag parse_tag(const std::string& t) {
  if (t == "T") return ThresholdTag::T;
  if (t == "K") return ThresholdTag::K;
  if (t == "TildeT") return ThresholdTag::TildeT;
  if (t == "TildeK") return ThresholdTag::TildeK;
  fail(ErrorCode::InvalidArgument, "tag must be T, K, TildeT or TildeK");
}

struct Outcome {
  Json json;
  int code = Ok;
};

Outcome cmd_analyze(const Inputs& in, const EngineOptions& o) {
  const AnalysisReport r = analyze(need_curve(in), o);
  return {to_json(r), r.partial ? Partial : Ok};
}

Outcome cmd_lct(const Inputs& in, const EngineOptions& o) {
  const PlaneCurve c = need_curve(in);
  if (!in.point.empty()) return {to_json(lct_at_point(c, need_point(in, 3), o))};
  const GlobalLct g = lct_global(c, o);
  return {to_json(g), g.partial ? Partial : Ok};
}

Outcome cmd_classify(const Inputs& in, const EngineOptions& o) {
  const PlaneCurve c = need_curve(in);
  const ProjPoint p = need_point(in, 3);
  const SingularityClass k = classify(c, p, o);
  Json j = to_json(k);
  j["point"] = to_json(p);
  if (k.multiplicity >= 2) j["threshold_class"] = to_json(threshold_class(c, p, o));
  return {j};
}

Outcome cmd_milnor(const Inputs& in, const EngineOptions& o) {
  const PlaneCurve c = need_curve(in);
  const ProjPoint p = need_point(in, 3);
  Json j{{"point", to_json(p)}, {"mu", milnor(c, p, o)}};
  j["oracle"] = p.is_rational() ? Json(milnor_oracle(c, p)) : Json(nullptr);
  return {j};
}

Outcome cmd_git(const Inputs& in, const EngineOptions& o) {
  const PlaneCurve c = need_curve(in);
  const StabilityVerdict v = stability(c, o);
  Json j = to_json(v);
  j["curve"] = to_json(c);
  return {j, v.search_space.truncated ? Partial : Ok};
}

Outcome cmd_surface(const Inputs& in, const EngineOptions& o) {
  if (in.surface.empty()) fail(ErrorCode::InvalidArgument, "--surface is required");
  SurfaceForm s = SurfaceForm::parse(read_source(in.surface));
  if (in.mode == "smooth") {
    verify_smooth(s, in.assume_smooth);
    return {to_json(s)};
  }
  const ProjPoint p = need_point(in, 4);
  if (in.mode == "star") {
    const TangentSection t = tangent_section(s, p);
    return {Json{{"point", to_json(p)}, {"star_point", t.germ.equation.order() == s.degree},
                 {"tangent_section", to_json(t.curve)}, {"multiplicity", t.germ.equation.order()}}};
  }
  verify_smooth(s, in.assume_smooth);
  Json j = to_json(alpha_probe(s, p, o));
  j["surface"] = to_json(s);
  return {j};
}

Outcome cmd_generate(const Inputs& in) {
  const std::string& k = in.kind;
  Json j{{"kind", k}};
  if (k == "cone" && in.params.find("inf") != std::string::npos) {
    std::vector<std::optional<Rational>> slopes;
    for (const auto& s : split(in.params))
      slopes.push_back(s == "inf" ? std::nullopt : std::optional<Rational>(Rational::parse(s)));
    j["curve"] = to_json(cone_curve(slopes));
    return {j};
  }
  GeneratorSpec spec;
  spec.degree = in.degree;
  spec.seed = in.seed;
  spec.singular = in.singular;
  for (const auto& s : split(in.params)) spec.params.push_back(Rational::parse(s));
  if (k == "cone") spec.kind = GeneratorKind::Cone;
  else if (k == "ploski-even") spec.kind = GeneratorKind::PloskiEven;
  else if (k == "ploski-odd") spec.kind = GeneratorKind::PloskiOdd;
  else if (k == "tk") spec.kind = GeneratorKind::TKFamily, spec.tag = parse_tag(in.tag);
  else if (k == "wall-quintic") spec.kind = GeneratorKind::WallQuintic;
  else if (k == "example-quartic-surface") spec.kind = GeneratorKind::ExampleQuarticSurface;
  else if (k == "kuwata") spec.kind = GeneratorKind::KuwataGerm;
  else if (k == "random") spec.kind = GeneratorKind::Random;
  else if (k == "named") {
    const NamedExample e = named_example(in.name);
    if (e.curve) j["curve"] = to_json(*e.curve);
    if (e.surface) j["surface"] = to_json(*e.surface);
    return {j};
  } else {
    fail(ErrorCode::UnknownName, "unknown generator kind '" + k + "'");
  }
  const Generated g = generate(spec);
  if (g.curve) j["curve"] = to_json(*g.curve);
  if (g.surface) j["surface"] = to_json(*g.surface);
  if (g.germ) j["germ"] = to_json(*g.germ);
  return {j};
}

int cmd_verify(const Inputs& in, const EngineOptions& o, std::ostream& out) {
  std::vector<CriterionResult> results;
  if (in.criterion > 0) results.push_back(run_criterion(in.criterion, o));
  else results = run_regression_suite(o);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (in.format == "json") {
    Json j = Json::array();
    for (const auto& r : results) j.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"details", r.details}});
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.name << "\n";
      for (const auto& d : r.details) out << "        " << d << "\n";
    }
  }
  return all ? Ok : CriteriaFailed;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ExtensionLimit:
    case ErrorCode::DepthExceeded:
    case ErrorCode::Unresolved: return Partial;
    default: return InputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Inputs in;
  CLI::App app{"Exact singularity, log canonical threshold and GIT analysis of plane curves", "curvelab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--curve", in.curve, "Ternary form in x, y, z, or @file");
  app.add_option("--surface", in.surface, "Quaternary form in x, y, z, w, or @file");
  app.add_option("--point", in.point, "Projective point a:b:c[:d] with rational coordinates");
  app.add_option("--ext-degree", in.ext_degree, "Largest number-field degree adjoined (default 6)");
  app.add_option("--depth-cap", in.depth_cap, "Largest blow-up depth");
  app.add_option("--seed", in.seed, "Seed for random generators");
  app.add_flag("--approx", in.approx, "Add labeled decimal approximations of exact values");
  app.add_flag("--assume-smooth", in.assume_smooth, "Skip the surface smoothness check");
  app.add_flag("--timing", in.timing, "Report wall-clock time");
  app.add_option("--format", in.format, "Output format (json; verify-paper also accepts table)");

  auto* analyze = app.add_subcommand("analyze", "Singular points, invariants, global lct and GIT verdict");
  auto* lct = app.add_subcommand("lct", "Log canonical threshold at a point or globally");
  auto* classify = app.add_subcommand("classify", "Singularity type at a point");
  auto* milnor = app.add_subcommand("milnor", "Milnor number with an independent resultant check");
  auto* git = app.add_subcommand("git", "GIT stability search");
  auto* surface = app.add_subcommand("surface", "Surface probes: alpha, smooth, star");
  surface->add_option("mode", in.mode, "alpha | smooth | star")->required()->check(CLI::IsMember({"alpha", "smooth", "star"}));
  auto* generate = app.add_subcommand("generate", "Emit a generated curve, surface or germ");
  generate->add_option("kind", in.kind,
                       "cone | ploski-even | ploski-odd | tk | wall-quintic | example-quartic-surface | kuwata | random | named")
      ->required();
  generate->add_option("--degree", in.degree, "Degree");
  generate->add_option("--params", in.params, "Comma-separated parameters");
  generate->add_option("--tag", in.tag, "T | K | TildeT | TildeK for the tk family");
  generate->add_option("--name", in.name, "Example name for 'named'");
  generate->add_flag("--singular", in.singular, "Random curve singular at [0:0:1]");
  auto* verify = app.add_subcommand("verify-paper", "Run the regression suite and print a pass/fail table");
  verify->add_option("--criterion", in.criterion, "Run a single criterion");

  std::vector<const char*> argv{"curvelab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  bool verify_table_default = true;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    for (const auto* opt : app.get_options())
      if (opt->get_name() == "--format" && opt->count() > 0) verify_table_default = false;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    out << Json{{"error", "UsageError"}, {"message", e.what()}}.dump(2) << "\n";
    return InputError;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (in.format != "json" && in.format != "table") fail(ErrorCode::InvalidArgument, "unsupported format " + in.format);
    const EngineOptions o = engine_options(in);
    if (verify->parsed()) {
      if (verify_table_default) in.format = "table";
      return cmd_verify(in, o, out);
    }
    if (in.format != "json") fail(ErrorCode::InvalidArgument, "only --format json is supported here");
    Outcome r;
    if (analyze->parsed()) r = cmd_analyze(in, o);
    else if (lct->parsed()) r = cmd_lct(in, o);
    else if (classify->parsed()) r = cmd_classify(in, o);
    else if (milnor->parsed()) r = cmd_milnor(in, o);
    else if (git->parsed()) r = cmd_git(in, o);
    else if (surface->parsed()) r = cmd_surface(in, o);
    else if (generate->parsed()) r = cmd_generate(in);
    if (in.approx) add_approximations(r.json);
    if (in.timing)
      r.json["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << r.json.dump(2) << "\n";
    return r.code;
  } catch (const Error& e) {
    out << error_json(e).dump(2) << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    out << Json{{"error", "InternalError"}, {"message", e.what()}}.dump(2) << "\n";
    return InputError;
  }
}

}  // namespace curvelab::cli
