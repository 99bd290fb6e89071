#include "ccq/commands.hpp"

#include <fstream>
#include <functional>

#include "ccq/export.hpp"
#include "ccq/io.hpp"
#include "ccq/pipeline.hpp"
#include "json.hpp"

namespace ccq {

namespace {

using nlohmann::ordered_json;

const Rational kDefaultEps(1, 1 << 20);
const Rational kPlotEps(1, 1000000);

ordered_json issues(const std::vector<Issue>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& i : v) a.push_back({{"code", i.code}, {"detail", i.detail}});
  return a;
}

ordered_json report(const ValidationReport& r) {
  return {{"ok", r.ok()}, {"violations", issues(r.violations)}, {"warnings", issues(r.warnings)}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  out << text;
}

// "g.dot" -> "g.resolved.dot"
std::string resolved_path(const std::string& path) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + ".resolved";
  return path.substr(0, dot) + ".resolved" + path.substr(dot);
}

struct Context {
  ProblemFile file;
  CommandOptions opts;
  Rational eps() const {
    const Rational e = opts.eps ? *opts.eps : (file.eps ? *file.eps : kDefaultEps);
    return e < kPlotEps ? e : kPlotEps;
  }
  std::optional<std::string> dot() const { return opts.dot_path ? opts.dot_path : file.dot_path; }
  std::optional<std::string> svg() const { return opts.svg_path ? opts.svg_path : file.svg_path; }
};

CommandOutput cmd_validate(const Context& ctx) {
  const ProblemFile& f = ctx.file;
  ordered_json j;
  const ValidationReport rc = validate_one_dim(f.curve);
  j["curve"] = report(rc);
  bool valid = rc.ok();
  if (f.queries) {
    ValidationReport rq = validate_zero_dim(*f.queries);
    j["queries"] = report(rq);
    valid = valid && rq.ok();
  } else {
    j["queries"] = nullptr;
  }
  int code = valid ? 0 : 2;
  ordered_json checks = ordered_json::array();
  if (valid) {
    for (const auto& c : genericity_report(f.curve, f.queries)) {
      checks.push_back({{"check", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
      if (c.status == CheckStatus::fail) code = 4;
    }
  }
  j["genericity"] = checks;
  j["valid"] = code == 0;
  return {code, dump(j), {}};
}

CommandOutput cmd_appsing(const Context& ctx) {
  require_valid(ctx.file.curve, std::nullopt);
  const ApparentResult r = apparent_singularities(ctx.file.curve);
  ordered_json j;
  j["q_app"] = to_string(r.q_app);
  j["roots"] = ordered_json::array();
  for (const auto& a : apparent_abscissas(r)) {
    j["roots"].push_back({{"lo", to_string(a.isol().lo)}, {"hi", to_string(a.isol().hi)}});
  }
  j["criterion_degenerate"] = r.criterion_degenerate;
  j["R"] = to_string(r.R);
  j["R_star"] = to_string(r.R_star);
  j["q"] = to_string(r.q);
  return {0, dump(j), {}};
}

CommandOutput cmd_topo(const Context& ctx) {
  const ProblemFile& f = ctx.file;
  require_valid(f.curve, f.queries);
  const ApparentResult app = apparent_singularities(f.curve);
  if (const auto* bad = first_failure(genericity_report(f.curve, f.queries, app))) {
    throw Error(ErrorCode::GenericityViolation, bad->name + ": " + bad->detail);
  }
  const TopologyGraph G = topo2d(f.curve, f.queries, app, ctx.eps());
  const std::string dot = to_dot(G);
  if (auto p = ctx.dot()) write_file(*p, dot);
  if (auto p = ctx.svg()) write_file(*p, to_svg(G));
  return {0, dot, {}};
}

CommandOutput cmd_connect(const Context& ctx) {
  const ProblemFile& f = ctx.file;
  std::optional<ZeroDimParam> queries = ctx.opts.components_only ? std::nullopt : f.queries;
  if (!ctx.opts.components_only && !queries) {
    throw Error(ErrorCode::InvalidInput, "connect needs queries (or --components-only)");
  }
  const PipelineResult r = run_pipeline(f.curve, queries, ctx.eps());
  if (auto p = ctx.dot()) {
    write_file(*p, to_dot(r.graph));
    write_file(resolved_path(*p), to_dot(r.resolved, "resolved"));
  }
  if (auto p = ctx.svg()) {
    write_file(*p, to_svg(r.graph));
    write_file(resolved_path(*p), to_svg(r.resolved, "resolved"));
  }
  ordered_json j;
  j["partition"] = ordered_json::array();
  for (const auto& b : r.partition.blocks) j["partition"].push_back(b);
  j["components"] = r.partition.component_count;
  return {0, dump(j), {}};
}

CommandOutput guarded(const std::function<CommandOutput()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {exit_code_for(e.code()), {}, std::string("ccq: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {5, {}, std::string("ccq: internal error: ") + e.what() + "\n"};
  }
}

CommandOutput dispatch(const std::string& command, const Context& ctx) {
  if (command == "validate") return cmd_validate(ctx);
  if (command == "appsing") return cmd_appsing(ctx);
  if (command == "topo") return cmd_topo(ctx);
  if (command == "connect") return cmd_connect(ctx);
  throw Error(ErrorCode::InvalidInput, "unknown command '" + command + "'");
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return 3;
    case ErrorCode::InvalidInput:
    case ErrorCode::NotSquareFree:
      return 2;
    case ErrorCode::GenericityViolation:
    case ErrorCode::CriticalPoint:
    case ErrorCode::DegenerateCurve:
      return 4;
    default:
      return 5;
  }
}

CommandOutput run_command(const std::string& command, const std::string& file, const CommandOptions& opts) {
  return guarded([&] { return dispatch(command, Context{load_problem(file), opts}); });
}

CommandOutput run_command_text(const std::string& command, const std::string& json_text, const CommandOptions& opts) {
  return guarded([&] { return dispatch(command, Context{parse_problem(json_text), opts}); });
}

}  // namespace ccq
