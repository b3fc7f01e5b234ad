#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stackdual/dsl.hpp"
#include "stackdual/duality.hpp"
#include "stackdual/monomial.hpp"
#include "stackdual/resource.hpp"

namespace stackdual {

inline constexpr int kSchemaVersion = 1;

enum ExitCode { kExitOk = 0, kExitFailedCheck = 1, kExitInputError = 2, kExitResource = 3 };

struct RunOptions {
  std::optional<int> depth;
  std::optional<int> bound;
  std::optional<OrderKind> order;
  bool timing = false;
  ResourceLimits limits;
};

struct CommandReport {
  std::string name;
  nlohmann::json inputs;
  nlohmann::json result;
  nlohmann::json verdicts;
  std::optional<long long> timing_ms;
  std::string text;
  bool failed_check = false;
};

struct RunReport {
  std::vector<CommandReport> commands;
  bool partial = false;
  std::vector<std::string> errors;
  RunOptions options;
  int exit_code = kExitOk;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Executes the statements in order. Evaluation errors stop the run with
/// exit code 2, resource caps with exit code 3 (partial report).
RunReport run_session(const dsl::SessionAst& ast, const RunOptions& options);
/// Parses then runs; parse diagnostics are reported as errors with exit 2.
RunReport run_text(const std::string& text, const RunOptions& options);

Polynomial evaluate(const dsl::Expr& e, const RingPtr& ring);
/// Parses infix text such as "x^2*y - (1/2)*z" in the given ring.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

nlohmann::json to_json(const Bidegree& d);
nlohmann::json to_json(const ModulePresentation& m);
nlohmann::json to_json(const HilbertTable& t);
nlohmann::json to_json(const ChainComplex& c);
nlohmann::json to_json(const DualityReport& r);
nlohmann::json to_json(const CMReport& r);

}  // namespace stackdual
