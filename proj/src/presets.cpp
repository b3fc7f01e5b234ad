#include "stackdual/presets.hpp"

#include <algorithm>
#include <numeric>

#include "stackdual/errors.hpp"

namespace stackdual {

namespace {

using nlohmann::json;
using Failures = std::vector<std::string>;

std::string n(std::int64_t v) { return std::to_string(v); }

std::int64_t mod(std::int64_t v, std::int64_t a) { return ((v % a) + a) % a; }

const CommandReport* command(const RunReport& r, const std::string& name, std::size_t nth = 0) {
  for (const auto& c : r.commands)
    if (c.name == name && nth-- == 0) return &c;
  return nullptr;
}

/// Checks a dualize report: free of rank one, generator weight and (when
/// given) Z-degree, Ext vanishing.
void expect_line_bundle(const RunReport& r, const std::string& cmd, std::int64_t weight, std::int64_t modulus,
                        std::optional<std::int64_t> zdeg, Failures& f) {
  const CommandReport* c = command(r, cmd);
  if (!c) {
    f.push_back(cmd + " did not run");
    return;
  }
  const json& v = c->verdicts;
  if (!v["is_free_rank_one"].get<bool>()) f.push_back("dualizing module is not free of rank one");
  if (!v["is_sheaf"].get<bool>()) f.push_back("higher Ext does not vanish");
  const json& gens = v["generator_bidegrees"];
  if (gens.size() != 1) return;
  std::int64_t got = gens[0]["weight"]["residue"].get<std::int64_t>();
  if (got != mod(weight, modulus))
    f.push_back("generator weight " + n(got) + " differs from expected " + n(mod(weight, modulus)) + " mod " +
                n(modulus));
  if (zdeg && gens[0]["zdeg"].get<std::int64_t>() != *zdeg)
    f.push_back("generator zdeg " + n(gens[0]["zdeg"].get<std::int64_t>()) + " differs from expected " + n(*zdeg));
}

void expect_pushforward(const RunReport& r, Failures& f) {
  const CommandReport* c = command(r, "pushforward");
  if (!c) {
    f.push_back("pushforward did not run");
    return;
  }
  if (!c->verdicts["equal"].get<bool>())
    f.push_back("pushforward mismatch: " + c->result["discrepancy"].get<std::string>());
}

std::string node_rings(const PresetParams& p) {
  return "ring A = Q[u, v]/(u*v) degrees {u: " + n(p.at("alpha")) + ", v: " + n(p.at("beta")) + "}\n" +
         "ring B = Q[x, y]/(x*y) group " + n(p.at("a")) + " weights {x: " + n(p.at("i")) + ", y: " + n(p.at("j")) +
         "}\n" + "map f : A -> B { u = x^" + n(p.at("alpha")) + ", v = y^" + n(p.at("beta")) + " }\n";
}

PresetParams node_defaults() { return {{"a", 3}, {"i", 1}, {"j", 2}, {"alpha", 3}, {"beta", 3}, {"depth", 4}, {"bound", 8}}; }

std::vector<Preset> build() {
  std::vector<Preset> out;

  out.push_back(
      {"balanced-node",
       "balanced irreducible node chart t^5 - u^2 + t^2 with weights (1,1) mod 3",
       "structure sheaf (weight 0)",
       {},
       [](const PresetParams&) {
         return std::string(
             "ring C = Q[t, u] group 3 degrees none weights {t: 1, u: 1}\n"
             "dualize-lci C seq (t^5 - u^2 + t^2) omega canonical\n");
       },
       [](const RunReport& r, const PresetParams&) {
         Failures f;
         expect_line_bundle(r, "dualize-lci", 0, 3, std::nullopt, f);
         return f;
       }});

  out.push_back(
      {"cusp-line",
       "cusp y^2 = x^3 over the affine line, weights (0,1) mod 2",
       "free rank 1, generator weight -1 mod 2; pushforward matches",
       {{"depth", 4}, {"bound", 8}},
       [](const PresetParams& p) {
         return "ring A = Q[u] degrees {u: 2}\n"
                "ring B = Q[x, y]/(y^2 - x^3) group 2 degrees {x: 2, y: 3} weights {x: 0, y: 1}\n"
                "map f : A -> B { u = x }\n"
                "dualize-finite f depth " + n(p.at("depth")) + "\n" +
                "module WA = canonical A\n"
                "module WB = shriek f WA\n"
                "pushforward f WB WA bound " + n(p.at("bound")) + "\n";
       },
       [](const RunReport& r, const PresetParams&) {
         Failures f;
         expect_line_bundle(r, "dualize-finite", -1, 2, -3, f);
         expect_pushforward(r, f);
         return f;
       }});

  out.push_back({"node",
                 "node xy = 0 over its moduli chart uv = 0, weights (i,j) mod a",
                 "free rank 1, generator weight 0, Ext vanishing; pushforward matches",
                 node_defaults(),
                 [](const PresetParams& p) {
                   return node_rings(p) + "dualize-finite f depth " + n(p.at("depth")) + "\n" +
                          "module WB = shriek f\n"
                          "module OA = ring A\n"
                          "pushforward f WB OA bound " + n(p.at("bound")) + "\n";
                 },
                 [](const RunReport& r, const PresetParams& p) {
                   Failures f;
                   expect_line_bundle(r, "dualize-finite", 0, p.at("a"), 0, f);
                   expect_pushforward(r, f);
                   return f;
                 }});

  out.push_back({"p146-curve",
                 "curve z*x^2 = y^2 in P(1,4,6)",
                 "O(-3)",
                 {},
                 [](const PresetParams&) {
                   return std::string(
                       "ring C = Q[x, y, z] degrees {x: 1, y: 4, z: 6}\n"
                       "dualize-lci C seq (z*x^2 - y^2) omega canonical depth 3\n");
                 },
                 [](const RunReport& r, const PresetParams&) {
                   Failures f;
                   expect_line_bundle(r, "dualize-lci", 0, 1, 3, f);
                   return f;
                 }});

  out.push_back({"pija-node",
                 "node xy = 0 in P(i,j,a)",
                 "O(-a)",
                 {{"i", 1}, {"j", 2}, {"a", 3}},
                 [](const PresetParams& p) {
                   return "ring C = Q[x, y, z] degrees {x: " + n(p.at("i")) + ", y: " + n(p.at("j")) +
                          ", z: " + n(p.at("a")) + "}\n" + "dualize-lci C seq (x*y) omega canonical\n";
                 },
                 [](const RunReport& r, const PresetParams& p) {
                   Failures f;
                   expect_line_bundle(r, "dualize-lci", 0, 1, p.at("a"), f);
                   return f;
                 }});

  out.push_back({"pushforward-node",
                 "invariant part of the node dualizing module against the moduli chart",
                 "invariants of the dualizing module equal the chart ring up to the bound",
                 node_defaults(),
                 [](const PresetParams& p) {
                   return node_rings(p) +
                          "module WB = shriek f\n"
                          "module OA = ring A\n"
                          "invariants WB bound " + n(p.at("bound")) + "\n" +
                          "pushforward f WB OA bound " + n(p.at("bound")) + "\n";
                 },
                 [](const RunReport& r, const PresetParams&) {
                   Failures f;
                   expect_pushforward(r, f);
                   return f;
                 }});

  out.push_back({"root-cover",
                 "root construction u = t^a with t of weight 1 mod a",
                 "free rank 1, generator weight -(a-1) mod a",
                 {{"a", 3}, {"depth", 2}},
                 [](const PresetParams& p) {
                   return "ring A = Q[u] degrees {u: " + n(p.at("a")) + "}\n" + "ring B = Q[t] group " +
                          n(p.at("a")) + " weights {t: 1}\n" + "map f : A -> B { u = t^" + n(p.at("a")) + " }\n" +
                          "dualize-finite f depth " + n(p.at("depth")) + "\n";
                 },
                 [](const RunReport& r, const PresetParams& p) {
                   Failures f;
                   expect_line_bundle(r, "dualize-finite", -(p.at("a") - 1), p.at("a"), -(p.at("a") - 1), f);
                   return f;
                 }});

  out.push_back({"tacnode-cusp",
                 "tac-node y^2 = x^4 over the cusp t^2 = u^3, weights (1,1) mod 2",
                 "free rank 1, generator weight 0 (trivial coaction)",
                 {{"depth", 4}},
                 [](const PresetParams& p) {
                   return "ring A = Q[u, t]/(t^2 - u^3) degrees {u: 2, t: 3}\n"
                          "ring B = Q[x, y]/(y^2 - x^4) group 2 degrees {x: 1, y: 2} weights {x: 1, y: 1}\n"
                          "map f : A -> B { u = x^2, t = x*y }\n"
                          "dualize-finite f depth " + n(p.at("depth")) + "\n";
                 },
                 [](const RunReport& r, const PresetParams&) {
                   Failures f;
                   expect_line_bundle(r, "dualize-finite", 0, 2, std::nullopt, f);
                   return f;
                 }});

  out.push_back({"tacnode-node",
                 "tac-node y^2 = x^4 over the node y^2 = u^2, weights (1,0) mod 2",
                 "free rank 1, generator weight -1 mod 2",
                 {{"depth", 4}},
                 [](const PresetParams& p) {
                   return "ring A = Q[u, y]/(y^2 - u^2) degrees {u: 2, y: 2}\n"
                          "ring B = Q[x, y]/(y^2 - x^4) group 2 degrees {x: 1, y: 2} weights {x: 1, y: 0}\n"
                          "map f : A -> B { u = x^2, y = y }\n"
                          "dualize-finite f depth " + n(p.at("depth")) + "\n";
                 },
                 [](const RunReport& r, const PresetParams&) {
                   Failures f;
                   expect_line_bundle(r, "dualize-finite", -1, 2, std::nullopt, f);
                   return f;
                 }});

  out.push_back(
      {"triple-point",
       "three general points uv = t^2, ut = v^2, vt = u^2 with all weights 1 mod a",
       "Betti 1,3,2; Ext^2 with 2 generators of weight -3 mod a; Cohen-Macaulay, not Gorenstein",
       {{"a", 3}},
       [](const PresetParams& p) {
         const std::string ideal = "(u*v - t^2, u*t - v^2, v*t - u^2)";
         return "ring C = Q[u, v, t] group " + n(p.at("a")) + " weights {u: 1, v: 1, t: 1}\n" +
                "module OC over C gens [(0, 0)] relations [(u*v - t^2), (u*t - v^2), (v*t - u^2)]\n" +
                "module O = ring C\n" + "resolve OC depth 3\n" + "ext C ideal " + ideal + " omega O imax 3\n" +
                "check C ideal " + ideal + " imax 3\n";
       },
       [](const RunReport& r, const PresetParams& p) {
         Failures f;
         const std::int64_t a = p.at("a");
         if (const CommandReport* res = command(r, "resolve")) {
           if (res->result["complex"]["ranks"] != json({1, 3, 2, 0})) f.push_back("unexpected Betti ranks");
         } else {
           f.push_back("resolve did not run");
         }
         if (const CommandReport* ext = command(r, "ext")) {
           for (const auto& e : ext->result["ext"]) {
             int i = e["index"].get<int>();
             const json& gens = e["module"]["generators"];
             if (i == 2) {
               if (gens.size() != 2) f.push_back("Ext^2 does not have 2 minimal generators");
               for (const auto& g : gens)
                 if (g["weight"]["residue"].get<std::int64_t>() != mod(-3, a))
                   f.push_back("Ext^2 generator weight differs from -3 mod a");
               if (e["module"]["relations"].size() != 3) f.push_back("Ext^2 does not have 3 relations");
             } else if (!e["is_zero"].get<bool>()) {
               f.push_back("Ext^" + n(i) + " does not vanish");
             }
           }
         } else {
           f.push_back("ext did not run");
         }
         if (const CommandReport* chk = command(r, "check")) {
           if (!chk->verdicts["cohen_macaulay"].get<bool>()) f.push_back("not reported Cohen-Macaulay");
           if (chk->verdicts["gorenstein"].get<bool>()) f.push_back("reported Gorenstein");
         } else {
           f.push_back("check did not run");
         }
         return f;
       }});

  std::sort(out.begin(), out.end(), [](const Preset& x, const Preset& y) { return x.name < y.name; });
  return out;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = build();
  return all;
}

const Preset* find_preset(const std::string& name) {
  for (const auto& p : presets())
    if (p.name == name) return &p;
  return nullptr;
}

PresetRun run_preset(const Preset& preset, const PresetParams& overrides, const RunOptions& options) {
  PresetParams params = preset.defaults;
  for (const auto& [k, v] : overrides) {
    if (!params.count(k)) throw InvalidArgument("preset " + preset.name + " has no parameter '" + k + "'");
    params[k] = v;
  }
  if (options.depth && params.count("depth")) params["depth"] = *options.depth;
  if (options.bound && params.count("bound")) params["bound"] = *options.bound;
  PresetRun run;
  run.session = preset.session(params);
  run.report = run_text(run.session, options);
  run.exit_code = run.report.exit_code;
  if (run.exit_code == kExitOk || run.exit_code == kExitFailedCheck) {
    run.failures = preset.check(run.report, params);
    if (!run.failures.empty()) run.exit_code = kExitFailedCheck;
  }
  return run;
}

}  // namespace stackdual
