#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stackdual/errors.hpp"

namespace stackdual::dsl {

struct Location {
  int line = 1;
  int column = 1;
};

struct Diagnostic {
  Location where;
  std::string message;
  std::vector<std::string> expected;

  std::string to_string() const;
};

class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Polynomial expression as written; evaluated once the ring is built.
struct Expr {
  enum class Kind { number, variable, add, sub, mul, div, pow, neg };
  Kind kind = Kind::number;
  std::string text;  // digits or variable name
  int exponent = 0;
  std::vector<Expr> args;

  bool operator==(const Expr&) const = default;
};

using Assignment = std::pair<std::string, std::int64_t>;

struct RingDecl {
  std::string name;
  std::vector<std::string> variables;
  std::vector<Expr> ideal;
  std::optional<std::int64_t> group;
  bool degrees_none = false;
  std::vector<Assignment> degrees;
  std::vector<Assignment> weights;
  std::optional<std::string> order;

  bool operator==(const RingDecl&) const = default;
};

struct MapDecl {
  std::string name;
  std::string source;
  std::string target;
  std::vector<std::pair<std::string, Expr>> images;

  bool operator==(const MapDecl&) const = default;
};

struct ModuleDecl {
  enum class Kind { presented, canonical, ring, twist, shriek };
  Kind kind = Kind::presented;
  std::string name;
  std::string base;  // ring, source module, or map
  std::vector<std::pair<std::int64_t, std::int64_t>> generators;
  std::vector<std::vector<Expr>> relations;
  std::pair<std::int64_t, std::int64_t> shift{0, 0};
  std::string argument;  // module for shriek (empty: the source ring)

  bool operator==(const ModuleDecl&) const = default;
};

struct Command {
  std::string kind;
  std::vector<std::string> names;
  std::vector<Expr> polynomials;
  std::map<std::string, std::int64_t> options;

  bool operator==(const Command&) const = default;
};

struct Statement {
  Location where;
  std::variant<RingDecl, MapDecl, ModuleDecl, Command> node;

  bool operator==(const Statement& o) const { return node == o.node; }
};

struct SessionAst {
  std::vector<Statement> statements;
  bool operator==(const SessionAst&) const = default;
};

/// Throws ParseError carrying every diagnostic found.
SessionAst parse_session(const std::string& text);
/// A single polynomial expression; variables are checked against `variables`.
Expr parse_expression(const std::string& text, const std::vector<std::string>& variables);

std::string print(const Expr& e);
std::string print(const Statement& s);
std::string print(const SessionAst& ast);

/// Command keywords in the order the grammar documents them.
const std::vector<std::string>& command_keywords();

}  // namespace stackdual::dsl
