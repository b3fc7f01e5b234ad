#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "stackdual/dsl.hpp"

using namespace stackdual::dsl;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> golden(const std::string& dir) {
  std::vector<fs::path> out;
  for (auto& e : fs::directory_iterator(fs::path(STACKDUAL_GOLDEN_DIR) / dir))
    if (e.path().extension() == ".sd") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Diagnostic> diagnostics(const std::string& text) {
  try {
    parse_session(text);
  } catch (const ParseError& e) {
    return e.diagnostics();
  }
  return {};
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("ring declaration") {
  auto ast = parse_session("ring B = Q[x,y]/(x*y) group 3 weights {x:1, y:2}");
  REQUIRE(ast.statements.size() == 1);
  auto& r = std::get<RingDecl>(ast.statements[0].node);
  CHECK(r.name == "B");
  CHECK(r.variables == std::vector<std::string>{"x", "y"});
  CHECK(r.group == 3);
  CHECK(r.ideal.size() == 1);
  CHECK(r.weights == std::vector<Assignment>{{"x", 1}, {"y", 2}});
  CHECK_FALSE(r.degrees_none);
}

TEST_CASE("map declaration") {
  auto ast = parse_session(
      "ring A = Q[u,v]/(u*v)\nring B = Q[x,y]/(x*y)\nmap f : A -> B { u = x^3, v = y^3 }\n");
  REQUIRE(ast.statements.size() == 3);
  auto& m = std::get<MapDecl>(ast.statements[2].node);
  CHECK(m.name == "f");
  CHECK(m.source == "A");
  CHECK(m.target == "B");
  REQUIRE(m.images.size() == 2);
  CHECK(m.images[0].first == "u");
  CHECK(print(m.images[0].second) == "x^3");
  CHECK(ast.statements[2].where.line == 3);
}

TEST_CASE("lci command") {
  auto ast = parse_session(
      "ring C = Q[x,y,z] degrees {x:1, y:4, z:6}\n"
      "dualize-lci C seq (z*x^2 - y^2) omega canonical depth 4");
  auto& c = std::get<Command>(ast.statements[1].node);
  CHECK(c.kind == "dualize-lci");
  CHECK(c.names == std::vector<std::string>{"C", "canonical"});
  REQUIRE(c.polynomials.size() == 1);
  CHECK(print(c.polynomials[0]) == "z*x^2 - y^2");
  CHECK(c.options.at("depth") == 4);
}

TEST_CASE("expressions") {
  std::vector<std::string> vars = {"x", "y"};
  CHECK(print(parse_expression("x*(y+1)^2", vars)) == "x*(y + 1)^2");
  CHECK(print(parse_expression("-(1/2)*x", vars)) == "-(1/2)*x");
  CHECK(print(parse_expression("x - (y - 1)", vars)) == "x - (y - 1)");
  CHECK(parse_expression("x-y-1", vars) == parse_expression("(x-y)-1", vars));
  CHECK_THROWS_AS(parse_expression("x + w", vars), ParseError);
  CHECK_THROWS_AS(parse_expression("x +", vars), ParseError);
  CHECK_THROWS_AS(parse_expression("x y", vars), ParseError);
}

TEST_CASE("statements may be separated by semicolons") {
  auto a = parse_session("ring A = Q[u]; ring B = Q[x]\n");
  auto b = parse_session("ring A = Q[u]\nring B = Q[x]\n");
  CHECK(a == b);
  CHECK(a.statements.size() == 2);
}

TEST_CASE("printer round trip on golden sessions") {
  for (auto& p : golden("valid")) {
    CAPTURE(p.filename().string());
    auto ast = parse_session(slurp(p));
    auto printed = print(ast);
    auto again = parse_session(printed);
    CHECK(again == ast);
    CHECK(print(again) == printed);
  }
}

TEST_CASE("golden sessions reach every production") {
  std::set<std::string> seen;
  for (auto& p : golden("valid")) {
    for (auto& s : parse_session(slurp(p)).statements) {
      std::visit(
          [&](auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, RingDecl>) {
              seen.insert("ring");
              if (!n.ideal.empty()) seen.insert("ring/ideal");
              if (n.group) seen.insert("ring/group");
              if (n.degrees_none) seen.insert("ring/degrees-none");
              if (!n.degrees.empty()) seen.insert("ring/degrees");
              if (!n.weights.empty()) seen.insert("ring/weights");
              if (n.order) seen.insert("ring/order-" + *n.order);
            } else if constexpr (std::is_same_v<T, MapDecl>) {
              seen.insert("map");
            } else if constexpr (std::is_same_v<T, ModuleDecl>) {
              const char* kinds[] = {"presented", "canonical", "ring", "twist", "shriek"};
              seen.insert(std::string("module/") + kinds[static_cast<int>(n.kind)]);
              if (!n.relations.empty()) seen.insert("module/relations");
              if (n.kind == ModuleDecl::Kind::shriek && !n.argument.empty()) seen.insert("module/shriek-argument");
            } else {
              seen.insert(n.kind);
              for (auto& [k, v] : n.options) seen.insert(n.kind + "/" + k);
              if (n.names.size() > 1 && n.names[1] == "canonical") seen.insert(n.kind + "/canonical");
            }
          },
          s.node);
    }
  }
  std::vector<std::string> required = {
      "ring", "ring/ideal", "ring/group", "ring/degrees-none", "ring/degrees", "ring/weights",
      "ring/order-lex", "ring/order-degrevlex", "map", "module/presented", "module/relations",
      "module/canonical", "module/ring", "module/twist", "module/shriek", "module/shriek-argument",
      "ext/imax", "ext/canonical", "check/imax", "dualize-finite/depth", "dualize-lci/depth",
      "dualize-lci/bound", "dualize-lci/canonical", "resolve/depth", "hilbert/bound",
      "invariants/bound", "compare/bound", "pushforward/bound"};
  for (auto& k : command_keywords()) required.push_back(k);
  for (auto& r : required) {
    CAPTURE(r);
    CHECK(seen.count(r) == 1);
  }
}

TEST_CASE("golden diagnostics") {
  for (auto& p : golden("errors")) {
    CAPTURE(p.filename().string());
    auto diags = diagnostics(slurp(p));
    REQUIRE_FALSE(diags.empty());
    std::string joined;
    for (auto& d : diags) joined += d.to_string() + "\n";
    auto expected = p;
    expected.replace_extension(".err");
    CHECK(trim(joined) == trim(slurp(expected)));
  }
}

TEST_CASE("diagnostics carry positions and expected tokens") {
  auto d = diagnostics("ring A = Q[u]\nmap f : A A { u = u }\n");
  REQUIRE(d.size() == 1);
  CHECK(d[0].where.line == 2);
  CHECK(d[0].where.column == 11);
  CHECK(d[0].expected == std::vector<std::string>{"'->'"});

  d = diagnostics("ring R = Q[x] group 3 weights {x: 1}\nmodule M over R gens [(0, 3)]\n");
  REQUIRE(d.size() == 1);
  CHECK(d[0].message.find("outside [0,3)") != std::string::npos);
}

TEST_CASE("recovery reports several diagnostics") {
  auto d = diagnostics("ring A = Q[u] @\nring A = Q[v]\nhom A A\nring B = Q[x]\n");
  CHECK(d.size() == 3);
  CHECK(d[0].where.line == 1);
  CHECK(d[1].where.line == 2);
  CHECK(d[2].where.line == 3);
}

TEST_CASE("empty and comment-only sessions") {
  CHECK(parse_session("").statements.empty());
  CHECK(parse_session("# nothing\n\n;\n").statements.empty());
}

TEST_CASE("command keywords") {
  auto& k = command_keywords();
  for (auto name : {"hom", "ext", "koszul", "dualize-finite", "dualize-lci", "check", "hilbert", "invariants", "compare"})
    CHECK(std::find(k.begin(), k.end(), name) != k.end());
}
