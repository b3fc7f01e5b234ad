#include "stackdual/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace stackdual::dsl {

std::string Diagnostic::to_string() const {
  std::string out = std::to_string(where.line) + ":" + std::to_string(where.column) + ": error: " + message;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) out += (i ? ", " : "") + expected[i];
    out += ")";
  }
  return out;
}

namespace {

std::string join_messages(const std::vector<Diagnostic>& d) {
  std::string out;
  for (const auto& x : d) out += (out.empty() ? "" : "\n") + x.to_string();
  return out;
}

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error(join_messages(diagnostics)), diagnostics_(std::move(diagnostics)) {}

const std::vector<std::string>& command_keywords() {
  static const std::vector<std::string> k{"hom",         "ext",   "koszul",  "resolve",    "dualize-finite",
                                          "dualize-lci", "check", "hilbert", "invariants", "compare",
                                          "pushforward"};
  return k;
}

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { ident, number, punct, newline, end, error };

struct Token {
  Tok kind;
  std::string text;
  Location where;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::newline:
      return "end of line";
    case Tok::end:
      return "end of input";
    default:
      return "'" + t.text + "'";
  }
}

const std::set<std::string>& hyphenated() {
  static const std::set<std::string> s{"dualize-finite", "dualize-lci"};
  return s;
}

std::vector<Token> lex(const std::string& text, std::vector<Diagnostic>& diags) {
  std::vector<Token> out;
  int line = 1, col = 1;
  int nesting = 0;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    Location here{line, col};
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n') {
      if (nesting == 0) out.push_back({Tok::newline, "\n", here});
      advance(1);
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::string word = text.substr(i, j - i);
      if (j < text.size() && text[j] == '-') {
        std::size_t k = j + 1;
        while (k < text.size() && std::isalpha(static_cast<unsigned char>(text[k]))) ++k;
        std::string longer = text.substr(i, k - i);
        if (hyphenated().count(longer)) {
          word = longer;
          j = k;
        }
      }
      out.push_back({Tok::ident, word, here});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::number, text.substr(i, j - i), here});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::punct, "->", here});
      advance(2);
      continue;
    }
    static const std::string single = "=:{}[](),+-*/^;";
    if (single.find(c) != std::string::npos) {
      if (c == '(' || c == '[' || c == '{') ++nesting;
      if ((c == ')' || c == ']' || c == '}') && nesting > 0) --nesting;
      if (c == ';') nesting = 0;
      out.push_back({Tok::punct, std::string(1, c), here});
      advance(1);
      continue;
    }
    std::string bad(1, c);
    if (static_cast<unsigned char>(c) >= 0x80) {
      std::size_t j = i + 1;
      while (j < text.size() && (static_cast<unsigned char>(text[j]) & 0xC0) == 0x80) ++j;
      bad = text.substr(i, j - i);
    }
    diags.push_back({here, "unexpected character '" + bad + "'", {}});
    out.push_back({Tok::error, bad, here});
    advance(bad.size());
  }
  out.push_back({Tok::end, "", {line, col}});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

struct Abort {};

const std::set<std::string>& reserved() {
  static const std::set<std::string> s = [] {
    std::set<std::string> r{"ring",   "map",   "module", "over",  "gens",  "relations", "group",
                            "degrees", "weights", "order", "none", "canonical", "twist", "shriek",
                            "ideal",  "seq",   "omega",  "imax",  "depth", "bound", "Q"};
    for (const auto& k : command_keywords()) r.insert(k);
    return r;
  }();
  return s;
}

struct RingInfo {
  std::vector<std::string> variables;
  std::int64_t group = 1;
};

enum class Sym { ring, map, module };

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diags) : toks_(std::move(tokens)), diags_(diags) {}

  Expr lone_expression(const std::vector<std::string>& variables) {
    try {
      vars_ = &variables;
      Expr e = expr();
      vars_ = nullptr;
      if (peek().kind != Tok::end) fail({"operator", "end of input"});
      return e;
    } catch (const Abort&) {
      if (diags_.empty()) diags_.push_back({peek().where, "invalid expression", {}});
      throw ParseError(diags_);
    }
  }

  SessionAst run() {
    SessionAst ast;
    while (peek().kind != Tok::end) {
      if (at_terminator()) {
        ++pos_;
        continue;
      }
      std::size_t before = diags_.size();
      try {
        Statement s = statement();
        if (!at_terminator() && peek().kind != Tok::end) fail({"end of statement"});
        ast.statements.push_back(std::move(s));
      } catch (const Abort&) {
        if (diags_.size() == before && peek().kind != Tok::error) diags_.push_back({peek().where, "invalid statement", {}});
        while (peek().kind != Tok::end && !at_terminator()) ++pos_;
      }
    }
    return ast;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic>& diags_;
  std::map<std::string, Sym> symbols_;
  std::map<std::string, RingInfo> rings_;
  std::map<std::string, std::pair<std::string, std::string>> maps_;  // source, target
  std::map<std::string, std::pair<std::string, std::size_t>> modules_;  // ring, rank (0 when unknown)

  const Token& peek() const { return toks_[pos_]; }
  bool at_terminator() const {
    return peek().kind == Tok::newline || (peek().kind == Tok::punct && peek().text == ";");
  }
  bool is(const std::string& p) const {
    return (peek().kind == Tok::punct || peek().kind == Tok::ident) && peek().text == p;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    const Token& t = peek();
    if (t.kind != Tok::error) diags_.push_back({t.where, "unexpected " + describe(t), std::move(expected)});
    throw Abort{};
  }
  [[noreturn]] void error_at(const Location& where, std::string message) {
    diags_.push_back({where, std::move(message), {}});
    throw Abort{};
  }

  void expect(const std::string& p) {
    if (!is(p)) fail({"'" + p + "'"});
    ++pos_;
  }
  bool accept(const std::string& p) {
    if (!is(p)) return false;
    ++pos_;
    return true;
  }
  Token identifier(const std::string& what) {
    if (peek().kind != Tok::ident) fail({what});
    return toks_[pos_++];
  }
  std::int64_t integer(bool allow_sign) {
    bool negative = false;
    if (allow_sign && accept("-")) negative = true;
    if (peek().kind != Tok::number) fail({allow_sign ? "integer" : "nonnegative integer"});
    const Token& t = toks_[pos_];
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc()) error_at(t.where, "integer " + t.text + " is out of range");
    ++pos_;
    return negative ? -v : v;
  }

  std::string new_name() {
    Token t = identifier("name");
    if (reserved().count(t.text)) error_at(t.where, "'" + t.text + "' is a keyword and cannot name a declaration");
    if (symbols_.count(t.text)) error_at(t.where, "duplicate name '" + t.text + "'");
    return t.text;
  }
  std::string reference(Sym kind) {
    static const char* names[] = {"ring", "map", "module"};
    Token t = identifier(std::string(names[static_cast<int>(kind)]) + " name");
    auto it = symbols_.find(t.text);
    if (it == symbols_.end()) error_at(t.where, "unresolved reference '" + t.text + "'");
    if (it->second != kind)
      error_at(t.where, "'" + t.text + "' is not a " + names[static_cast<int>(kind)]);
    return t.text;
  }

  // expressions -------------------------------------------------------------
  const std::vector<std::string>* vars_ = nullptr;

  Expr expr() {
    Expr left = term();
    while (is("+") || is("-")) {
      Expr::Kind k = peek().text == "+" ? Expr::Kind::add : Expr::Kind::sub;
      ++pos_;
      Expr right = term();
      left = Expr{k, "", 0, {std::move(left), std::move(right)}};
    }
    return left;
  }
  Expr term() {
    Expr left = unary();
    while (is("*") || is("/")) {
      Expr::Kind k = peek().text == "*" ? Expr::Kind::mul : Expr::Kind::div;
      ++pos_;
      Expr right = unary();
      left = Expr{k, "", 0, {std::move(left), std::move(right)}};
    }
    return left;
  }
  Expr unary() {
    if (accept("-")) return Expr{Expr::Kind::neg, "", 0, {unary()}};
    Expr base = atom();
    if (accept("^")) {
      std::int64_t e = integer(false);
      if (e > 1000000) error_at(toks_[pos_ - 1].where, "exponent too large");
      return Expr{Expr::Kind::pow, "", static_cast<int>(e), {std::move(base)}};
    }
    return base;
  }
  Expr atom() {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      ++pos_;
      return Expr{Expr::Kind::number, t.text, 0, {}};
    }
    if (t.kind == Tok::ident) {
      if (vars_ && std::find(vars_->begin(), vars_->end(), t.text) == vars_->end())
        error_at(t.where, "unresolved reference '" + t.text + "': not a variable of the ring");
      ++pos_;
      return Expr{Expr::Kind::variable, t.text, 0, {}};
    }
    if (accept("(")) {
      Expr e = expr();
      expect(")");
      return e;
    }
    fail({"number", "variable", "'('", "'-'"});
  }
  std::vector<Expr> expr_list(const std::string& open, const std::string& close) {
    expect(open);
    std::vector<Expr> out;
    if (accept(close)) return out;
    do out.push_back(expr());
    while (accept(","));
    expect(close);
    return out;
  }

  // statements --------------------------------------------------------------
  Statement statement() {
    Statement s;
    s.where = peek().where;
    if (peek().kind != Tok::ident) fail({"'ring'", "'map'", "'module'", "command"});
    const std::string kw = peek().text;
    if (kw == "ring") {
      s.node = ring_decl();
    } else if (kw == "map") {
      s.node = map_decl();
    } else if (kw == "module") {
      s.node = module_decl();
    } else if (std::find(command_keywords().begin(), command_keywords().end(), kw) != command_keywords().end()) {
      s.node = command();
    } else {
      fail({"'ring'", "'map'", "'module'", "command"});
    }
    return s;
  }

  std::vector<Assignment> assignments(const RingDecl& r, const char* what) {
    std::vector<Assignment> out;
    expect("{");
    if (!is("}")) {
      do {
        Token v = identifier("variable");
        if (std::find(r.variables.begin(), r.variables.end(), v.text) == r.variables.end())
          error_at(v.where, "unresolved reference '" + v.text + "': not a variable of the ring");
        for (const auto& [n, _] : out)
          if (n == v.text) error_at(v.where, std::string("variable '") + v.text + "' given two " + what);
        expect(":");
        out.emplace_back(v.text, integer(false));
      } while (accept(","));
    }
    expect("}");
    return out;
  }

  RingDecl ring_decl() {
    expect("ring");
    RingDecl r;
    r.name = new_name();
    expect("=");
    expect("Q");
    expect("[");
    do {
      Token v = identifier("variable");
      if (reserved().count(v.text)) error_at(v.where, "'" + v.text + "' is a keyword and cannot name a variable");
      if (std::find(r.variables.begin(), r.variables.end(), v.text) != r.variables.end())
        error_at(v.where, "duplicate variable '" + v.text + "'");
      r.variables.push_back(v.text);
    } while (accept(","));
    expect("]");
    if (accept("/")) {
      vars_ = &r.variables;
      r.ideal = expr_list("(", ")");
      vars_ = nullptr;
    }
    Location weights_at{};
    while (peek().kind == Tok::ident) {
      const Token& opt = peek();
      if (opt.text == "group" && !r.group) {
        ++pos_;
        Location at = peek().where;
        r.group = integer(false);
        if (*r.group < 1) error_at(at, "group order must be at least 1");
      } else if (opt.text == "degrees" && !r.degrees_none && r.degrees.empty()) {
        ++pos_;
        if (accept("none")) {
          r.degrees_none = true;
        } else {
          Location at = peek().where;
          r.degrees = assignments(r, "degrees");
          for (const auto& [_, d] : r.degrees)
            if (d < 1) error_at(at, "Z-degrees must be positive");
        }
      } else if (opt.text == "weights" && r.weights.empty()) {
        ++pos_;
        weights_at = peek().where;
        r.weights = assignments(r, "weights");
      } else if (opt.text == "order" && !r.order) {
        ++pos_;
        Token o = identifier("'degrevlex' or 'lex'");
        if (o.text != "degrevlex" && o.text != "lex") {
          --pos_;
          fail({"'degrevlex'", "'lex'"});
        }
        r.order = o.text;
      } else {
        fail({"'group'", "'degrees'", "'weights'", "'order'", "end of statement"});
      }
    }
    std::int64_t a = r.group.value_or(1);
    for (const auto& [v, w] : r.weights)
      if (w < 0 || w >= a)
        error_at(weights_at, "weight " + std::to_string(w) + " of '" + v + "' is outside [0," + std::to_string(a) + ")");
    symbols_[r.name] = Sym::ring;
    rings_[r.name] = {r.variables, a};
    return r;
  }

  MapDecl map_decl() {
    expect("map");
    MapDecl m;
    m.name = new_name();
    expect(":");
    m.source = reference(Sym::ring);
    expect("->");
    m.target = reference(Sym::ring);
    Location open = peek().where;
    expect("{");
    const RingInfo& src = rings_[m.source];
    const RingInfo& tgt = rings_[m.target];
    if (!is("}")) {
      do {
        Token v = identifier("source variable");
        if (std::find(src.variables.begin(), src.variables.end(), v.text) == src.variables.end())
          error_at(v.where, "unresolved reference '" + v.text + "': not a variable of " + m.source);
        for (const auto& [n, _] : m.images)
          if (n == v.text) error_at(v.where, "variable '" + v.text + "' is assigned twice");
        expect("=");
        vars_ = &tgt.variables;
        Expr e = expr();
        vars_ = nullptr;
        m.images.emplace_back(v.text, std::move(e));
      } while (accept(","));
    }
    expect("}");
    if (m.images.size() != src.variables.size())
      error_at(open, "arity mismatch: map gives " + std::to_string(m.images.size()) + " images for " +
                         std::to_string(src.variables.size()) + " source variables");
    symbols_[m.name] = Sym::map;
    maps_[m.name] = {m.source, m.target};
    return m;
  }

  std::pair<std::int64_t, std::int64_t> bidegree(bool check_weight, std::int64_t a) {
    expect("(");
    std::int64_t z = integer(true);
    expect(",");
    Location at = peek().where;
    std::int64_t w = integer(true);
    expect(")");
    if (check_weight && (w < 0 || w >= a))
      error_at(at, "weight " + std::to_string(w) + " is outside [0," + std::to_string(a) + ")");
    return {z, w};
  }

  ModuleDecl module_decl() {
    expect("module");
    ModuleDecl m;
    m.name = new_name();
    std::string ring;
    std::size_t rank = 0;
    if (accept("over")) {
      m.kind = ModuleDecl::Kind::presented;
      m.base = reference(Sym::ring);
      ring = m.base;
      const RingInfo& info = rings_[ring];
      expect("gens");
      expect("[");
      if (!is("]")) {
        do m.generators.push_back(bidegree(true, info.group));
        while (accept(","));
      }
      expect("]");
      rank = m.generators.size();
      if (accept("relations")) {
        expect("[");
        if (!is("]")) {
          do {
            Location at = peek().where;
            vars_ = &info.variables;
            auto col = expr_list("(", ")");
            vars_ = nullptr;
            if (col.size() != rank)
              error_at(at, "arity mismatch: relation has " + std::to_string(col.size()) + " entries for " +
                               std::to_string(rank) + " generators");
            m.relations.push_back(std::move(col));
          } while (accept(","));
        }
        expect("]");
      }
    } else if (accept("=")) {
      if (accept("canonical")) {
        m.kind = ModuleDecl::Kind::canonical;
        m.base = reference(Sym::ring);
        ring = m.base;
        rank = 1;
      } else if (accept("ring")) {
        m.kind = ModuleDecl::Kind::ring;
        m.base = reference(Sym::ring);
        ring = m.base;
        rank = 1;
      } else if (accept("twist")) {
        m.kind = ModuleDecl::Kind::twist;
        m.base = reference(Sym::module);
        ring = modules_[m.base].first;
        rank = modules_[m.base].second;
        m.shift = bidegree(false, 1);
      } else if (accept("shriek")) {
        m.kind = ModuleDecl::Kind::shriek;
        m.base = reference(Sym::map);
        if (peek().kind == Tok::ident && !at_terminator()) {
          m.argument = reference(Sym::module);
          if (modules_[m.argument].first != maps_[m.base].first)
            error_at(toks_[pos_ - 1].where, "module '" + m.argument + "' is not over " + maps_[m.base].first);
        }
        ring = maps_[m.base].second;
      } else {
        fail({"'canonical'", "'ring'", "'twist'", "'shriek'"});
      }
    } else {
      fail({"'over'", "'='"});
    }
    symbols_[m.name] = Sym::module;
    modules_[m.name] = {ring, rank};
    return m;
  }

  std::string omega_ref(const std::string& ring) {
    if (accept("canonical")) return "canonical";
    Token t = peek();
    std::string name = reference(Sym::module);
    if (modules_[name].first != ring) error_at(t.where, "module '" + name + "' is not over " + ring);
    return name;
  }

  void options(Command& c, const std::set<std::string>& allowed) {
    while (peek().kind == Tok::ident && allowed.count(peek().text)) {
      Token o = toks_[pos_++];
      if (c.options.count(o.text)) error_at(o.where, "option '" + o.text + "' given twice");
      Location at = peek().where;
      std::int64_t v = integer(false);
      if (o.text == "depth" && v < 1)
        error_at(at, "depth must be at least 1");
      c.options[o.text] = v;
    }
    if (!at_terminator() && peek().kind != Tok::end) {
      std::vector<std::string> exp;
      for (const auto& a : allowed)
        if (!c.options.count(a)) exp.push_back("'" + a + "'");
      exp.push_back("end of statement");
      fail(exp);
    }
  }

  std::vector<Expr> polys_over(const std::string& ring) {
    vars_ = &rings_[ring].variables;
    auto out = expr_list("(", ")");
    vars_ = nullptr;
    return out;
  }

  Command command() {
    Command c;
    c.kind = identifier("command").text;
    const std::string& k = c.kind;
    if (k == "hom" || k == "compare") {
      Token first = peek();
      c.names.push_back(reference(Sym::module));
      Token second = peek();
      c.names.push_back(reference(Sym::module));
      if (modules_[c.names[0]].first != modules_[c.names[1]].first)
        error_at(second.where, "modules '" + c.names[0] + "' and '" + c.names[1] + "' live over different rings");
      if (k == "compare") options(c, {"bound"});
    } else if (k == "ext" || k == "check") {
      c.names.push_back(reference(Sym::ring));
      expect("ideal");
      c.polynomials = polys_over(c.names[0]);
      if (k == "ext") {
        expect("omega");
        c.names.push_back(omega_ref(c.names[0]));
      }
      options(c, {"imax"});
    } else if (k == "koszul") {
      c.names.push_back(reference(Sym::ring));
      expect("seq");
      c.polynomials = polys_over(c.names[0]);
    } else if (k == "resolve") {
      c.names.push_back(reference(Sym::module));
      options(c, {"depth"});
    } else if (k == "dualize-finite") {
      c.names.push_back(reference(Sym::map));
      if (accept("module")) {
        Token t = peek();
        c.names.push_back(reference(Sym::module));
        if (modules_[c.names[1]].first != maps_[c.names[0]].first)
          error_at(t.where, "module '" + c.names[1] + "' is not over " + maps_[c.names[0]].first);
      }
      options(c, {"depth"});
    } else if (k == "dualize-lci") {
      c.names.push_back(reference(Sym::ring));
      expect("seq");
      c.polynomials = polys_over(c.names[0]);
      expect("omega");
      c.names.push_back(omega_ref(c.names[0]));
      options(c, {"depth", "bound"});
    } else if (k == "hilbert" || k == "invariants") {
      c.names.push_back(reference(Sym::module));
      options(c, {"bound"});
    } else if (k == "pushforward") {
      c.names.push_back(reference(Sym::map));
      Token t1 = peek();
      c.names.push_back(reference(Sym::module));
      Token t2 = peek();
      c.names.push_back(reference(Sym::module));
      if (modules_[c.names[1]].first != maps_[c.names[0]].second)
        error_at(t1.where, "module '" + c.names[1] + "' is not over " + maps_[c.names[0]].second);
      if (modules_[c.names[2]].first != maps_[c.names[0]].first)
        error_at(t2.where, "module '" + c.names[2] + "' is not over " + maps_[c.names[0]].first);
      options(c, {"bound"});
    }
    return c;
  }
};

// ---------------------------------------------------------------------------
// Printer

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::add:
    case Expr::Kind::sub:
      return 1;
    case Expr::Kind::mul:
    case Expr::Kind::div:
      return 2;
    case Expr::Kind::neg:
      return 3;
    case Expr::Kind::pow:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const Expr& e, bool parens) { return parens ? "(" + print(e) + ")" : print(e); }

std::string binary(const Expr& e, const char* op) {
  int p = precedence(e);
  return wrap(e.args[0], precedence(e.args[0]) < p) + op + wrap(e.args[1], precedence(e.args[1]) <= p);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

std::string print_list(const std::vector<Expr>& v) {
  std::vector<std::string> parts;
  for (const auto& e : v) parts.push_back(print(e));
  return "(" + join(parts) + ")";
}

std::string print_assignments(const std::vector<Assignment>& v) {
  std::vector<std::string> parts;
  for (const auto& [n, d] : v) parts.push_back(n + ": " + std::to_string(d));
  return "{" + join(parts) + "}";
}

std::string print_pair(const std::pair<std::int64_t, std::int64_t>& p) {
  return "(" + std::to_string(p.first) + ", " + std::to_string(p.second) + ")";
}

struct StatementPrinter {
  std::string operator()(const RingDecl& r) const {
    std::string out = "ring " + r.name + " = Q[" + join(r.variables) + "]";
    if (!r.ideal.empty()) out += "/" + print_list(r.ideal);
    if (r.group) out += " group " + std::to_string(*r.group);
    if (r.degrees_none) out += " degrees none";
    if (!r.degrees.empty()) out += " degrees " + print_assignments(r.degrees);
    if (!r.weights.empty()) out += " weights " + print_assignments(r.weights);
    if (r.order) out += " order " + *r.order;
    return out;
  }
  std::string operator()(const MapDecl& m) const {
    std::vector<std::string> parts;
    for (const auto& [v, e] : m.images) parts.push_back(v + " = " + print(e));
    return "map " + m.name + " : " + m.source + " -> " + m.target + " { " + join(parts) + " }";
  }
  std::string operator()(const ModuleDecl& m) const {
    switch (m.kind) {
      case ModuleDecl::Kind::presented: {
        std::vector<std::string> gens;
        for (const auto& g : m.generators) gens.push_back(print_pair(g));
        std::string out = "module " + m.name + " over " + m.base + " gens [" + join(gens) + "]";
        if (!m.relations.empty()) {
          std::vector<std::string> rels;
          for (const auto& r : m.relations) rels.push_back(print_list(r));
          out += " relations [" + join(rels) + "]";
        }
        return out;
      }
      case ModuleDecl::Kind::canonical:
        return "module " + m.name + " = canonical " + m.base;
      case ModuleDecl::Kind::ring:
        return "module " + m.name + " = ring " + m.base;
      case ModuleDecl::Kind::twist:
        return "module " + m.name + " = twist " + m.base + " " + print_pair(m.shift);
      case ModuleDecl::Kind::shriek:
        return "module " + m.name + " = shriek " + m.base + (m.argument.empty() ? "" : " " + m.argument);
    }
    return {};
  }
  std::string operator()(const Command& c) const {
    std::string out = c.kind;
    const std::string& k = c.kind;
    if (k == "ext" || k == "check") {
      out += " " + c.names[0] + " ideal " + print_list(c.polynomials);
      if (k == "ext") out += " omega " + c.names[1];
    } else if (k == "koszul") {
      out += " " + c.names[0] + " seq " + print_list(c.polynomials);
    } else if (k == "dualize-lci") {
      out += " " + c.names[0] + " seq " + print_list(c.polynomials) + " omega " + c.names[1];
    } else if (k == "dualize-finite") {
      out += " " + c.names[0];
      if (c.names.size() > 1) out += " module " + c.names[1];
    } else {
      for (const auto& n : c.names) out += " " + n;
    }
    for (const auto& [o, v] : c.options) out += " " + o + " " + std::to_string(v);
    return out;
  }
};

}  // namespace

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number:
    case Expr::Kind::variable:
      return e.text;
    case Expr::Kind::add:
      return binary(e, " + ");
    case Expr::Kind::sub:
      return binary(e, " - ");
    case Expr::Kind::mul:
      return binary(e, "*");
    case Expr::Kind::div:
      return binary(e, "/");
    case Expr::Kind::neg:
      return "-" + wrap(e.args[0], precedence(e.args[0]) < 3);
    case Expr::Kind::pow:
      return wrap(e.args[0], precedence(e.args[0]) < 5) + "^" + std::to_string(e.exponent);
  }
  return {};
}

std::string print(const Statement& s) { return std::visit(StatementPrinter{}, s.node); }

std::string print(const SessionAst& ast) {
  std::string out;
  for (const auto& s : ast.statements) out += print(s) + "\n";
  return out;
}

Expr parse_expression(const std::string& text, const std::vector<std::string>& variables) {
  std::vector<Diagnostic> diags;
  auto tokens = lex(text, diags);
  std::erase_if(tokens, [](const Token& t) { return t.kind == Tok::newline; });
  if (!diags.empty()) throw ParseError(std::move(diags));
  Parser parser(std::move(tokens), diags);
  return parser.lone_expression(variables);
}

SessionAst parse_session(const std::string& text) {
  std::vector<Diagnostic> diags;
  auto tokens = lex(text, diags);
  Parser parser(std::move(tokens), diags);
  SessionAst ast = parser.run();
  if (!diags.empty()) {
    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
      return std::pair(a.where.line, a.where.column) < std::pair(b.where.line, b.where.column);
    });
    throw ParseError(std::move(diags));
  }
  return ast;
}

}  // namespace stackdual::dsl
