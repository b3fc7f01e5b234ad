#include <doctest.h>

#include <algorithm>

#include "oracle_values.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Polynomial monic(const Polynomial& p) {
  return p * Scalar(1 / leading_term(p).coef);
}

std::vector<std::string> canonical(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (auto& p : ps) out.push_back(monic(p).to_string());
  std::sort(out.begin(), out.end());
  return out;
}

RingPtr xyz() { return ring({{"x"}, {"y"}, {"z"}}); }
RingPtr uvt() { return ring({{"u"}, {"v"}, {"t"}}); }

/// sum a_j rows_j, reduced modulo the ring ideal.
Vec combine(const GradedRingPtr& r, const Vec& coeffs, const std::vector<Vec>& rows, std::size_t n) {
  auto a = to_polynomials(coeffs, n, r->ambient());
  Vec out;
  for (std::size_t j = 0; j < n; ++j) out = add(out, multiply(a[j], rows[j], r->module_order()), r->module_order());
  return r->reduce(out);
}

}  // namespace

TEST_CASE("buchberger small cases") {
  auto r = ring({{"x"}, {"y"}});
  auto gb = buchberger(r, {P(r, "x*y")});
  CHECK(canonical(gb.generators) == std::vector<std::string>{"x*y"});
  gb = buchberger(r, {P(r, "y^2 - x^3")});
  CHECK(gb.generators.size() == 1);
  CHECK(monic(gb.generators[0]) == P(r, "x^3 - y^2"));
  gb = buchberger(r, {});
  CHECK(gb.generators.empty());
  CHECK(normal_form(P(r, "x+1"), gb) == P(r, "x+1"));
}

TEST_CASE("triple point basis") {
  auto r = uvt();
  auto gb = buchberger(r, Ps(r, {"u*v - t^2", "u*t - v^2", "v*t - u^2"}));
  CHECK(canonical(gb.generators) == canonical(Ps(r, oracle::kTriplePointGB)));
  CHECK(ideal_contains(gb, P(r, "v^3 - t^3")));
  CHECK(normal_form(P(r, "u*v*t"), gb) == P(r, oracle::kTriplePointNFuvt));
  for (auto& g : gb.generators) CHECK(leading_term(g).coef == 1);
}

TEST_CASE("normal_form") {
  auto r = ring({{"x"}, {"y"}});
  auto gb = buchberger(r, {P(r, "x*y")});
  CHECK(normal_form(P(r, "x*y"), gb).is_zero());
  CHECK(normal_form(P(r, "x^3"), gb) == P(r, "x^3"));
  CHECK(normal_form(P(r, "x^2*y + y^5 - 2"), gb) == P(r, "y^5 - 2"));
}

TEST_CASE("random ideals against an independent basis") {
  auto r = xyz();
  int index = 0;
  for (const auto& c : oracle::kRandomIdeals) {
    CAPTURE(index);
    auto gb = buchberger(r, Ps(r, c.gens));
    CHECK(canonical(gb.generators) == canonical(Ps(r, c.gb)));
    ++index;
  }
}

TEST_CASE("basis is independent of input order") {
  auto r = xyz();
  for (const auto& c : oracle::kRandomIdeals) {
    if (c.gens.size() < 2) continue;
    auto gens = Ps(r, c.gens);
    auto reference = buchberger(r, gens).generators;
    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
      return a.to_string() < b.to_string();
    });
    do {
      auto gb = buchberger(r, gens).generators;
      REQUIRE(gb.size() == reference.size());
      for (std::size_t i = 0; i < gb.size(); ++i) CHECK(gb[i] == reference[i]);
    } while (std::next_permutation(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
      return a.to_string() < b.to_string();
    }));
  }
}

TEST_CASE("normal form is idempotent and linear") {
  std::mt19937 rng(20261016);
  auto r = xyz();
  for (std::size_t k = 0; k < oracle::kRandomIdeals.size(); ++k) {
    auto gb = buchberger(r, Ps(r, oracle::kRandomIdeals[k].gens));
    for (int trial = 0; trial < 5; ++trial) {
      auto p = random_poly(rng, r, 5, 5);
      auto q = random_poly(rng, r, 5, 5);
      auto np = normal_form(p, gb);
      CHECK(normal_form(np, gb) == np);
      CHECK(normal_form(p + q, gb) == normal_form(np + normal_form(q, gb), gb));
      CHECK(normal_form(p * Scalar(3, 7), gb) == np * Scalar(3, 7));
      CHECK(ideal_contains(gb, p - np));
    }
    for (auto& g : Ps(r, oracle::kRandomIdeals[k].gens)) CHECK(normal_form(g, gb).is_zero());
  }
}

TEST_CASE("every S-polynomial reduces to zero") {
  auto r = xyz();
  for (const auto& c : oracle::kRandomIdeals) {
    auto gb = buchberger(r, Ps(r, c.gens));
    const auto& g = gb.generators;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        auto li = leading_term(g[i]), lj = leading_term(g[j]);
        auto l = lcm(li.mono, lj.mono);
        auto s = g[i].times_term(quotient(l, li.mono), 1 / li.coef) -
                 g[j].times_term(quotient(l, lj.mono), 1 / lj.coef);
        CHECK(normal_form(s, gb).is_zero());
      }
    // auto-reduced: no leading term divides a term of another generator
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (i == j) continue;
        for (auto& t : g[j].terms()) CHECK_FALSE(divides(leading_term(g[i]).mono, t.mono));
      }
  }
}

TEST_CASE("syzygies") {
  auto r = quotient(ring({{"x"}, {"y"}}));
  std::vector<Vec> rows = {vec(r, {P(r->ambient(), "x")}), vec(r, {P(r->ambient(), "y")})};
  auto s = syzygies(r, 1, rows, {r->zero_degree()});
  REQUIRE(s.size() == 1);
  auto a = to_polynomials(s[0], 2, r->ambient());
  CHECK(((a[0] == P(r->ambient(), "-y") && a[1] == P(r->ambient(), "x")) ||
         (a[0] == P(r->ambient(), "y") && a[1] == P(r->ambient(), "-x"))));

  auto unit = syzygies(r, 1, {vec(r, {P(r->ambient(), "1")})}, {r->zero_degree()});
  CHECK(unit.empty());
}

TEST_CASE("syzygies over a quotient ring") {
  auto amb = ring({{"x"}, {"y"}});
  auto node = quotient(amb, {"x*y"});
  auto s = syzygies(node, 1, {vec(node, {P(amb, "x")})}, {node->zero_degree()});
  REQUIRE(s.size() == 1);
  CHECK(to_polynomials(s[0], 1, amb)[0] == P(amb, "y"));

  auto tp = quotient(uvt(), {"u*v - t^2", "u*t - v^2", "v*t - u^2"});
  auto t = tp->ambient();
  std::vector<Vec> rows = {vec(tp, {P(t, "u"), P(t, "v")}), vec(tp, {P(t, "t"), P(t, "u")}),
                           vec(tp, {P(t, "v"), P(t, "t")})};
  std::vector<Bidegree> degs = {tp->zero_degree(), tp->zero_degree()};
  auto syz = syzygies(tp, 2, rows, degs);
  CHECK_FALSE(syz.empty());
  for (auto& v : syz) CHECK(combine(tp, v, rows, rows.size()).empty());
}

TEST_CASE("syzygy property on random homogeneous rows") {
  std::mt19937 rng(20261016);
  auto amb = xyz();
  auto base = quotient(amb);
  auto q = quotient(amb, {"x*y - z^2"});
  for (int trial = 0; trial < 12; ++trial) {
    auto r = trial % 2 ? q : base;
    std::vector<Vec> rows;
    int n = 2 + trial % 2;
    for (int k = 0; k < n; ++k) {
      auto f = random_form(rng, amb, 3, 2);
      auto g = random_form(rng, amb, 3, 2);
      rows.push_back(vec(r, {f, g}));
    }
    std::vector<Bidegree> degs = {r->zero_degree(), r->zero_degree()};
    bool homogeneous = true;
    for (auto& v : rows)
      if (!v.empty() && !is_homogeneous(v, *amb, degs)) homogeneous = false;
    REQUIRE(homogeneous);
    auto syz = syzygies(r, 2, rows, degs);
    for (auto& v : syz) CHECK(combine(r, v, rows, rows.size()).empty());
  }
}

TEST_CASE("lifter") {
  auto amb = ring({{"x"}, {"y"}});
  auto r = quotient(amb);
  Lifter lifter(r, 1, {vec(r, {P(amb, "x")}), vec(r, {P(amb, "y")})});
  auto a = lifter.lift(vec(r, {P(amb, "x^2 + 3*x*y - y^3")}));
  REQUIRE(a);
  CHECK(((*a)[0] * P(amb, "x") + (*a)[1] * P(amb, "y")) == P(amb, "x^2 + 3*x*y - y^3"));
  CHECK_FALSE(lifter.lift(vec(r, {P(amb, "1")})));
}
