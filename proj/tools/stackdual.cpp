#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "stackdual/presets.hpp"
#include "stackdual/session.hpp"

using namespace stackdual;

namespace {

struct CommonFlags {
  std::string json_path;
  std::optional<int> depth;
  std::optional<int> bound;
  std::string order;
  bool timing = false;
};

void add_common(CLI::App* app, CommonFlags& f) {
  app->add_option("--json", f.json_path, "write the machine-readable report to PATH ('-' for stdout)");
  app->add_option("--depth", f.depth, "default resolution / Ext depth")->check(CLI::PositiveNumber);
  app->add_option("--bound", f.bound, "default Hilbert table bound")->check(CLI::NonNegativeNumber);
  app->add_option("--order", f.order, "default monomial order")->check(CLI::IsMember({"degrevlex", "lex"}));
  app->add_flag("--timing", f.timing, "include per-command timing_ms in the JSON report");
}

RunOptions options_from(const CommonFlags& f) {
  RunOptions o;
  o.depth = f.depth;
  o.bound = f.bound;
  if (!f.order.empty()) o.order = f.order == "lex" ? OrderKind::lex : OrderKind::degrevlex;
  o.timing = f.timing;
  o.limits = ResourceLimits::from_environment();
  return o;
}

// With the JSON document on stdout the human report moves to stderr.
std::ostream& human(const CommonFlags& f) { return f.json_path == "-" ? std::cerr : std::cout; }

int emit(const RunReport& report, const CommonFlags& f) {
  human(f) << report.to_text();
  for (const auto& e : report.errors) std::cerr << e << "\n";
  if (!f.json_path.empty()) {
    std::string doc = report.to_json().dump(2) + "\n";
    if (f.json_path == "-") {
      std::cout << doc;
    } else {
      std::ofstream out(f.json_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write " << f.json_path << "\n";
        return kExitInputError;
      }
      out << doc;
    }
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stackdual: dualizing modules of graded quotient singularities"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  std::string session_path;
  auto* run = app.add_subcommand("run", "execute a session file");
  run->add_option("file", session_path, "session file")->required();
  add_common(run, run_flags);

  CommonFlags preset_flags;
  std::string preset_name;
  std::map<std::string, std::int64_t> params;
  bool show_session = false;
  auto* preset = app.add_subcommand("preset", "run a named worked example");
  preset->add_option("name", preset_name, "preset name (see list-presets)")->required();
  add_common(preset, preset_flags);
  for (const char* p : {"a", "i", "j", "alpha", "beta"}) {
    preset->add_option_function<std::int64_t>(std::string("--") + p, [&params, p](const std::int64_t& v) {
      params[p] = v;
    }, std::string("preset parameter ") + p);
  }
  preset->add_flag("--show-session", show_session, "print the generated session text first");

  auto* list = app.add_subcommand("list-presets", "list the worked examples and their expected verdicts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  if (list->parsed()) {
    for (const auto& p : presets()) {
      std::cout << std::left << std::setw(18) << p.name << p.expectation << "\n";
      std::cout << std::setw(18) << "" << p.summary;
      if (!p.defaults.empty()) {
        std::cout << " [";
        bool first = true;
        for (const auto& [k, v] : p.defaults) {
          std::cout << (first ? "" : " ") << "--" << k << " " << v;
          first = false;
        }
        std::cout << "]";
      }
      std::cout << "\n";
    }
    return kExitOk;
  }

  if (run->parsed()) {
    std::ifstream in(session_path, std::ios::binary);
    if (!in) {
      std::cerr << "cannot read " << session_path << "\n";
      return kExitInputError;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return emit(run_text(buf.str(), options_from(run_flags)), run_flags);
  }

  const Preset* p = find_preset(preset_name);
  if (!p) {
    std::cerr << "unknown preset '" << preset_name << "' (see list-presets)\n";
    return kExitInputError;
  }
  PresetRun result;
  try {
    result = run_preset(*p, params, options_from(preset_flags));
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitInputError;
  }
  if (show_session) human(preset_flags) << result.session << "\n";
  int code = emit(result.report, preset_flags);
  for (const auto& f : result.failures) std::cerr << "expectation failed: " << f << "\n";
  if (result.failures.empty() && code == kExitOk) human(preset_flags) << "expectation met: " << p->expectation << "\n";
  return result.exit_code == kExitOk ? code : result.exit_code;
}
