#include "stackdual/session.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "stackdual/errors.hpp"

namespace stackdual {

using nlohmann::json;

Polynomial evaluate(const dsl::Expr& e, const RingPtr& ring) {
  using K = dsl::Expr::Kind;
  switch (e.kind) {
    case K::number:
      return Polynomial::constant(ring, Scalar(mpz_class(e.text)));
    case K::variable: {
      auto i = ring->index_of(e.text);
      if (!i) throw InvalidArgument("unknown variable '" + e.text + "'");
      return Polynomial::variable(ring, *i);
    }
    case K::add:
      return evaluate(e.args[0], ring) + evaluate(e.args[1], ring);
    case K::sub:
      return evaluate(e.args[0], ring) - evaluate(e.args[1], ring);
    case K::mul:
      return evaluate(e.args[0], ring) * evaluate(e.args[1], ring);
    case K::neg:
      return -evaluate(e.args[0], ring);
    case K::pow:
      return evaluate(e.args[0], ring).pow(static_cast<unsigned>(e.exponent));
    case K::div: {
      Polynomial d = evaluate(e.args[1], ring);
      if (d.is_zero()) throw InvalidArgument("division by zero");
      if (!d.is_constant()) throw InvalidArgument("division is only allowed by nonzero constants");
      return evaluate(e.args[0], ring) * Scalar(1 / d.terms().front().coef);
    }
  }
  throw InvalidArgument("bad expression");
}

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  std::vector<std::string> names;
  for (const auto& v : ring->variables()) names.push_back(v.name);
  return evaluate(dsl::parse_expression(text, names), ring);
}

// ---------------------------------------------------------------------------
// JSON encodings

json to_json(const Bidegree& d) {
  return {{"zdeg", d.zdeg()},
          {"weight", {{"residue", d.weight()}, {"modulus", d.modulus()}}},
          {"lambda_exponent", d.lambda()}};
}

json to_json(const ModulePresentation& m) {
  json gens = json::array(), rels = json::array();
  for (const auto& g : m.generators()) gens.push_back(to_json(g));
  for (const auto& r : m.relations()) {
    json col = json::array();
    for (const auto& p : to_polynomials(r, m.rank(), m.ring()->ambient())) col.push_back(p.to_string());
    rels.push_back(col);
  }
  return {{"ring", m.ring()->to_string()}, {"rank", m.rank()}, {"generators", gens}, {"relations", rels}};
}

json to_json(const HilbertTable& t) {
  json dims = json::array();
  for (const auto& [key, d] : t.dims)
    dims.push_back({{"degree", key.first}, {"weight", {{"residue", key.second}, {"modulus", t.modulus}}}, {"dim", d}});
  return {{"graded_by", t.zgraded ? "zdeg" : "maximal-ideal-filtration"}, {"lo", t.lo}, {"hi", t.hi}, {"dims", dims}};
}

json to_json(const ChainComplex& c) {
  json terms = json::array(), diffs = json::array();
  for (const auto& t : c.terms) {
    json gens = json::array();
    for (const auto& g : t.generators()) gens.push_back(to_json(g));
    terms.push_back({{"rank", t.rank()}, {"generators", gens}});
  }
  for (const auto& d : c.differentials) {
    json cols = json::array();
    for (const auto& col : d.matrix()) {
      json entries = json::array();
      for (const auto& p : to_polynomials(col, d.target().rank(), c.ring->ambient())) entries.push_back(p.to_string());
      cols.push_back(entries);
    }
    diffs.push_back(cols);
  }
  json out = {{"direction", c.direction == Direction::chain ? "chain" : "cochain"},
              {"ranks", c.ranks()},
              {"terms", terms},
              {"differentials", diffs},
              {"finite", c.finite}};
  out["truncated_at"] = c.truncated_at ? json(*c.truncated_at) : json(nullptr);
  out["period"] = c.period ? json(*c.period) : json(nullptr);
  return out;
}

namespace {

json profile_json(const std::map<int, ExtSummary>& p) {
  json out = json::array();
  for (const auto& [i, e] : p) out.push_back({{"index", i}, {"is_zero", e.is_zero}, {"generators", e.generators}});
  return out;
}

}  // namespace

json to_json(const DualityReport& r) {
  json gens = json::array();
  for (const auto& g : r.generator_bidegrees) gens.push_back(to_json(g));
  std::int64_t modulus = r.module ? r.module->ring()->modulus() : 1;
  json fiber = json::array();
  for (auto w : r.fiber_representation) fiber.push_back({{"residue", w}, {"modulus", modulus}});
  return {{"description", r.description},
          {"module", r.module ? to_json(*r.module) : json(nullptr)},
          {"generator_bidegrees", gens},
          {"fiber_representation", fiber},
          {"is_free_rank_one", r.is_free_rank_one},
          {"is_sheaf", r.is_sheaf},
          {"ext_profile", profile_json(r.ext_profile)},
          {"depth", r.depth},
          {"notes", r.notes}};
}

json to_json(const CMReport& r) {
  return {{"codimension", r.codimension ? json(*r.codimension) : json(nullptr)},
          {"expected_codimension", r.expected_codimension ? json(*r.expected_codimension) : json(nullptr)},
          {"ext_profile", profile_json(r.ext_profile)},
          {"cohen_macaulay", r.cohen_macaulay},
          {"gorenstein", r.gorenstein},
          {"inconclusive", r.inconclusive},
          {"notes", r.notes}};
}

json RunReport::to_json() const {
  json cmds = json::array();
  for (const auto& c : commands) {
    json entry = {{"name", c.name}, {"inputs", c.inputs}, {"result", c.result}, {"verdicts", c.verdicts}};
    if (c.timing_ms) entry["timing_ms"] = *c.timing_ms;
    cmds.push_back(entry);
  }
  json opts = json::object();
  if (options.depth) opts["depth"] = *options.depth;
  if (options.bound) opts["bound"] = *options.bound;
  if (options.order) opts["order"] = *options.order == OrderKind::lex ? "lex" : "degrevlex";
  return {{"schema_version", kSchemaVersion},
          {"options", opts},
          {"partial", partial},
          {"errors", errors},
          {"exit_code", exit_code},
          {"commands", cmds}};
}

std::string RunReport::to_text() const {
  std::string out;
  for (const auto& c : commands) out += c.text;
  if (partial) out += "(partial report: a resource cap was reached)\n";
  return out;
}

// ---------------------------------------------------------------------------
// Execution

namespace {

struct SessionError {
  dsl::Location where;
  std::string message;
};

class Executor {
 public:
  explicit Executor(const RunOptions& options) : options_(options) {}

  void run(const dsl::SessionAst& ast, RunReport& report) {
    for (const auto& s : ast.statements) {
      where_ = s.where;
      ResourceGuard guard(options_.limits);
      std::visit([&](const auto& node) { handle(node, report); }, s.node);
    }
  }

  dsl::Location where() const { return where_; }

 private:
  RunOptions options_;
  dsl::Location where_;
  std::map<std::string, GradedRingPtr> rings_;
  std::map<std::string, RingMorphism> maps_;
  std::map<std::string, ModulePresentation> modules_;

  // evaluation --------------------------------------------------------------
  static Polynomial eval(const dsl::Expr& e, const RingPtr& ring) { return evaluate(e, ring); }
  std::vector<Polynomial> eval_all(const std::vector<dsl::Expr>& v, const GradedRingPtr& ring) const {
    std::vector<Polynomial> out;
    for (const auto& e : v) out.push_back(ring->reduce(eval(e, ring->ambient())));
    return out;
  }

  int depth_or(const dsl::Command& c, int fallback) const {
    if (auto it = c.options.find("depth"); it != c.options.end()) return static_cast<int>(it->second);
    return options_.depth.value_or(fallback);
  }
  int bound_or(const dsl::Command& c, int fallback) const {
    if (auto it = c.options.find("bound"); it != c.options.end()) return static_cast<int>(it->second);
    return options_.bound.value_or(fallback);
  }
  const ModulePresentation& omega(const std::string& name, const GradedRingPtr& ring, ModulePresentation& storage) {
    if (name == "canonical") {
      storage = canonical_module(ring);
      return storage;
    }
    return modules_.at(name);
  }

  // declarations ------------------------------------------------------------
  void handle(const dsl::RingDecl& r, RunReport&) {
    std::vector<Ring::Variable> vars;
    for (const auto& v : r.variables) vars.push_back({v, 1, 0});
    auto index = [&](const std::string& n) {
      return static_cast<std::size_t>(std::find(r.variables.begin(), r.variables.end(), n) - r.variables.begin());
    };
    for (const auto& [v, d] : r.degrees) vars[index(v)].zdeg = d;
    for (const auto& [v, w] : r.weights) vars[index(v)].weight = w;
    std::optional<MonomialOrder> order;
    OrderKind kind = options_.order.value_or(OrderKind::degrevlex);
    if (r.order) kind = *r.order == "lex" ? OrderKind::lex : OrderKind::degrevlex;
    if (kind == OrderKind::lex) order = MonomialOrder::lex(vars.size());
    RingPtr amb = make_ring(std::move(vars), r.group.value_or(1), !r.degrees_none, order);
    std::vector<Polynomial> ideal;
    for (const auto& e : r.ideal) ideal.push_back(eval(e, amb));
    rings_[r.name] = make_graded_ring(amb, std::move(ideal), r.name);
  }

  void handle(const dsl::MapDecl& m, RunReport&) {
    const GradedRingPtr& src = rings_.at(m.source);
    const GradedRingPtr& tgt = rings_.at(m.target);
    std::vector<Polynomial> images(src->nvars(), Polynomial(tgt->ambient()));
    for (const auto& [v, e] : m.images) images[*src->ambient()->index_of(v)] = eval(e, tgt->ambient());
    maps_.emplace(m.name, RingMorphism(src, tgt, std::move(images), 0, m.name));
  }

  void handle(const dsl::ModuleDecl& m, RunReport&) {
    using K = dsl::ModuleDecl::Kind;
    switch (m.kind) {
      case K::presented: {
        const GradedRingPtr& ring = rings_.at(m.base);
        std::vector<Bidegree> gens;
        for (const auto& [z, w] : m.generators) gens.emplace_back(ring->zgraded() ? z : 0, w, ring->modulus());
        std::vector<Vec> rels;
        for (const auto& col : m.relations) {
          std::vector<Polynomial> entries;
          for (const auto& e : col) entries.push_back(eval(e, ring->ambient()));
          rels.push_back(from_polynomials(entries, ring->module_order()));
        }
        modules_.insert_or_assign(m.name, ModulePresentation(ring, std::move(gens), std::move(rels)));
        break;
      }
      case K::canonical:
        modules_.insert_or_assign(m.name, canonical_module(rings_.at(m.base)));
        break;
      case K::ring:
        modules_.insert_or_assign(m.name, ModulePresentation::ring_module(rings_.at(m.base)));
        break;
      case K::twist: {
        const ModulePresentation& base = modules_.at(m.base);
        Bidegree d(base.ring()->zgraded() ? m.shift.first : 0, m.shift.second, base.ring()->modulus());
        modules_.insert_or_assign(m.name, twist(base, d));
        break;
      }
      case K::shriek: {
        const RingMorphism& f = maps_.at(m.base);
        ModulePresentation arg =
            m.argument.empty() ? ModulePresentation::ring_module(f.source()) : modules_.at(m.argument);
        modules_.insert_or_assign(m.name, *finite_shriek(f, arg, 1).module);
        break;
      }
    }
  }

  // commands ----------------------------------------------------------------
  void handle(const dsl::Command& c, RunReport& report) {
    CommandReport out;
    out.name = c.kind;
    json names = json::array();
    for (const auto& n : c.names) names.push_back(n);
    out.inputs = {{"statement", dsl::print(dsl::Statement{where_, c})}, {"names", names}};
    auto start = std::chrono::steady_clock::now();
    std::ostringstream text;
    text << "== " << dsl::print(dsl::Statement{where_, c}) << "\n";
    execute(c, out, text);
    auto stop = std::chrono::steady_clock::now();
    if (options_.timing)
      out.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    out.text = text.str();
    report.commands.push_back(std::move(out));
  }

  static std::string weights_text(const std::vector<Bidegree>& gens) {
    std::string s;
    for (const auto& g : gens) s += (s.empty() ? "" : ", ") + g.to_string();
    return "[" + s + "]";
  }

  void execute(const dsl::Command& c, CommandReport& out, std::ostringstream& text) {
    const std::string& k = c.kind;
    if (k == "hom") {
      ModulePresentation h = hom_module(modules_.at(c.names[0]), modules_.at(c.names[1]));
      out.result = {{"module", to_json(h)}};
      out.verdicts = {{"rank", h.rank()}, {"is_zero", is_zero(h)}};
      text << "Hom: " << h.to_string() << "\n";
    } else if (k == "ext") {
      const GradedRingPtr& ring = rings_.at(c.names[0]);
      ModulePresentation storage = ModulePresentation(ring, {});
      const ModulePresentation& om = omega(c.names[1], ring, storage);
      int imax = static_cast<int>(c.options.count("imax") ? c.options.at("imax") : ring->nvars());
      auto exts = ext_dualizing(ring, eval_all(c.polynomials, ring), om, imax);
      json list = json::array();
      json zero = json::array();
      for (const auto& [i, e] : exts) {
        bool z = is_zero(e);
        list.push_back({{"index", i}, {"module", to_json(e)}, {"is_zero", z}});
        if (z) zero.push_back(i);
        text << "Ext^" << i << ": " << (z ? std::string("0") : e.to_string()) << "\n";
      }
      out.result = {{"ext", list}};
      out.verdicts = {{"vanishing_indices", zero}};
    } else if (k == "koszul") {
      const GradedRingPtr& ring = rings_.at(c.names[0]);
      ChainComplex kc = koszul(ring, eval_all(c.polynomials, ring));
      bool exact = true;
      json homs = json::array();
      for (std::size_t i = 0; i < kc.terms.size(); ++i) {
        ModulePresentation h = homology(kc, static_cast<int>(i));
        bool z = is_zero(h);
        if (i > 0 && !z) exact = false;
        homs.push_back({{"index", i}, {"is_zero", z}, {"generators", z ? 0 : h.rank()}});
      }
      out.result = {{"complex", to_json(kc)}, {"homology", homs}};
      out.verdicts = {{"d_squared_zero", composes_to_zero(kc)}, {"regular", exact}};
      text << "Koszul ranks:";
      for (auto r : kc.ranks()) text << " " << r;
      text << "\nregular sequence: " << (exact ? "yes" : "no") << "\n";
    } else if (k == "resolve") {
      int depth = depth_or(c, 6);
      ChainComplex res = resolve(modules_.at(c.names[0]), depth);
      bool dd = composes_to_zero(res);
      out.result = {{"complex", to_json(res)}};
      out.verdicts = {{"d_squared_zero", dd}, {"finite", res.finite}};
      text << "Betti ranks:";
      for (auto r : res.ranks()) text << " " << r;
      text << (res.finite ? " (finite)" : " (truncated at depth " + std::to_string(depth) + ")");
      if (res.period) text << ", period " << *res.period;
      text << "\n";
      for (std::size_t i = 0; i < res.terms.size(); ++i)
        text << "  F" << i << ": " << weights_text(res.terms[i].generators()) << "\n";
    } else if (k == "dualize-finite") {
      const RingMorphism& f = maps_.at(c.names[0]);
      ModulePresentation m =
          c.names.size() > 1 ? modules_.at(c.names[1]) : ModulePresentation::ring_module(f.source());
      DualityReport r = finite_shriek(f, m, depth_or(c, 4));
      report_duality(r, out, text);
    } else if (k == "dualize-lci") {
      const GradedRingPtr& ring = rings_.at(c.names[0]);
      ModulePresentation storage = ModulePresentation(ring, {});
      const ModulePresentation& om = omega(c.names[1], ring, storage);
      DualityReport r = lci_dualizing(ring, eval_all(c.polynomials, ring), om, bound_or(c, 12));
      report_duality(r, out, text);
      for (const auto& n : r.notes)
        if (n.find("distinct") != std::string::npos) out.failed_check = true;
    } else if (k == "check") {
      const GradedRingPtr& ring = rings_.at(c.names[0]);
      int imax = static_cast<int>(c.options.count("imax") ? c.options.at("imax") : ring->nvars());
      CMReport r = cm_gorenstein_check(ring, eval_all(c.polynomials, ring), imax);
      out.result = to_json(r);
      out.verdicts = {{"cohen_macaulay", r.cohen_macaulay},
                      {"gorenstein", r.gorenstein},
                      {"inconclusive", r.inconclusive}};
      text << "codimension " << (r.codimension ? std::to_string(*r.codimension) : "?") << ", Cohen-Macaulay "
           << (r.cohen_macaulay ? "yes" : "no") << ", Gorenstein " << (r.gorenstein ? "yes" : "no")
           << (r.inconclusive ? " (inconclusive)" : "") << "\n";
      for (const auto& [i, e] : r.ext_profile)
        text << "  Ext^" << i << ": " << (e.is_zero ? "0" : std::to_string(e.generators) + " generators") << "\n";
    } else if (k == "hilbert") {
      const ModulePresentation& m = modules_.at(c.names[0]);
      int bound = bound_or(c, 12);
      std::int64_t lo = lowest_generator_degree(m);
      HilbertTable t = hilbert_function(m, lo, lo + bound);
      out.result = {{"table", to_json(t)}};
      out.verdicts = json::object();
      text << "Hilbert function (degree: dims by weight)\n";
      for (std::int64_t z = t.lo; z <= t.hi; ++z) {
        text << "  " << z << ":";
        for (std::int64_t w = 0; w < t.modulus; ++w) text << " " << t.dim(z, w);
        text << "\n";
      }
    } else if (k == "invariants") {
      InvariantPart inv = invariant_part(modules_.at(c.names[0]), bound_or(c, 12));
      out.result = {{"table", to_json(inv.table)}, {"low_degree_basis", inv.low_degree_basis}};
      out.verdicts = json::object();
      text << "invariant dimensions:";
      for (std::int64_t z = inv.table.lo; z <= inv.table.hi; ++z) text << " " << inv.table.dim(z, 0);
      text << "\n";
    } else if (k == "compare") {
      Comparison cmp = compare_modules(modules_.at(c.names[0]), modules_.at(c.names[1]), bound_or(c, 12));
      out.result = {{"witness", cmp.witness}};
      out.verdicts = {{"verdict", to_string(cmp.verdict)}};
      out.failed_check = cmp.verdict == Verdict::distinct;
      text << to_string(cmp.verdict) << (cmp.witness.empty() ? "" : ": " + cmp.witness) << "\n";
    } else if (k == "pushforward") {
      PushforwardResult p =
          pushforward_check(maps_.at(c.names[0]), modules_.at(c.names[1]), modules_.at(c.names[2]), bound_or(c, 12));
      out.result = {{"invariants", to_json(p.invariants)}, {"expected", to_json(p.expected)},
                    {"discrepancy", p.discrepancy}};
      out.verdicts = {{"equal", p.equal}};
      out.failed_check = !p.equal;
      text << "pushforward " << (p.equal ? "matches" : "differs: " + p.discrepancy) << "\n";
    }
  }

  static void report_duality(const DualityReport& r, CommandReport& out, std::ostringstream& text) {
    out.result = to_json(r);
    json fiber = out.result["fiber_representation"];
    out.verdicts = {{"is_free_rank_one", r.is_free_rank_one},
                    {"is_sheaf", r.is_sheaf},
                    {"fiber_representation", fiber},
                    {"generator_bidegrees", out.result["generator_bidegrees"]}};
    text << "dualizing module: " << (r.module ? r.module->to_string() : "-") << "\n";
    text << "  free of rank one: " << (r.is_free_rank_one ? "yes" : "no") << "\n";
    text << "  generator bidegrees: " << weights_text(r.generator_bidegrees) << "\n";
    text << "  Ext vanishing up to depth " << r.depth << ": " << (r.is_sheaf ? "yes" : "no") << "\n";
    for (const auto& n : r.notes) text << "  note: " << n << "\n";
  }
};

}  // namespace

RunReport run_session(const dsl::SessionAst& ast, const RunOptions& options) {
  RunReport report;
  report.options = options;
  Executor exec(options);
  try {
    exec.run(ast, report);
  } catch (const ResourceExceeded& e) {
    report.partial = true;
    report.errors.push_back(std::to_string(exec.where().line) + ":" + std::to_string(exec.where().column) +
                            ": resource cap: " + e.what());
    report.exit_code = kExitResource;
    return report;
  } catch (const std::exception& e) {
    report.errors.push_back(std::to_string(exec.where().line) + ":" + std::to_string(exec.where().column) +
                            ": error: " + e.what());
    report.exit_code = kExitInputError;
    return report;
  }
  for (const auto& c : report.commands)
    if (c.failed_check) report.exit_code = kExitFailedCheck;
  return report;
}

RunReport run_text(const std::string& text, const RunOptions& options) {
  try {
    return run_session(dsl::parse_session(text), options);
  } catch (const dsl::ParseError& e) {
    RunReport report;
    report.options = options;
    for (const auto& d : e.diagnostics()) report.errors.push_back(d.to_string());
    report.exit_code = kExitInputError;
    return report;
  }
}

}  // namespace stackdual
