#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

std::vector<std::int64_t> zdegs(const ModulePresentation& m) {
  std::vector<std::int64_t> out;
  for (auto& g : m.generators()) out.push_back(g.zdeg());
  return out;
}

bool homogeneous(const ChainComplex& c) {
  for (auto& t : c.terms)
    for (auto& rel : t.relations())
      if (!is_homogeneous(rel, *c.ring->ambient(), t.generators())) return false;
  for (auto& d : c.differentials) {
    const auto& src = d.source().generators();
    for (std::size_t i = 0; i < d.matrix().size(); ++i) {
      if (d.matrix()[i].empty()) continue;
      auto deg = vec_degree(d.matrix()[i], *c.ring->ambient(), d.target().generators());
      if (!deg || !(*deg == src[i] + d.shift())) return false;
    }
  }
  return true;
}

RingMorphism node_map(int a, int i, int j) {
  auto A = quotient(ring({{"u", a}, {"v", a}}), {"u*v"});
  auto rb = ring({{"x", 1, i}, {"y", 1, j}}, a);
  auto B = quotient(rb, {"x*y"});
  auto e = std::to_string(a);
  return RingMorphism(A, B, {P(rb, "x^" + e), P(rb, "y^" + e)});
}

struct Sequence {
  RingPtr ring;
  std::vector<std::string> seq;
};

std::vector<Sequence> regular_sequences() {
  return {
      {ring({{"x"}, {"y"}}), {"x*y"}},
      {ring({{"x"}, {"y"}}), {"x", "y"}},
      {ring({{"x", 1}, {"y", 4}, {"z", 6}}), {"z*x^2 - y^2"}},
      {ring({{"x"}, {"y"}, {"z"}}), {"x*z - y^2", "x + z"}},
      {ring({{"x"}, {"y"}, {"z"}}), {"x", "y", "z"}},
      {ring({{"t", 0, 1}, {"u", 0, 1}}, 3, false), {"t^5 - u^2 + t^2"}},
      {ring({{"u", 1, 1}, {"v", 1, 1}, {"t", 1, 1}}, 3), {"u*v - t^2", "u^2 + v^2"}},
  };
}

}  // namespace

TEST_CASE("koszul complexes") {
  auto r = quotient(ring({{"x", 1, 1}, {"y", 1, 0}}, 2));
  auto amb = r->ambient();
  auto k1 = koszul(r, {P(amb, "x")});
  CHECK(k1.ranks() == std::vector<std::size_t>{1, 1});
  CHECK(k1.terms[1].generators()[0] == Bidegree(1, 1, 2));
  CHECK(k1.all_free());

  auto k2 = koszul(r, Ps(amb, {"x", "y"}));
  CHECK(k2.ranks() == std::vector<std::size_t>{1, 2, 1});
  CHECK(k2.terms[2].generators()[0] == Bidegree(2, 1, 2));
  CHECK(composes_to_zero(k2));

  auto c = quotient(ring({{"x", 1}, {"y", 4}, {"z", 6}}));
  auto kc = koszul(c, {P(c->ambient(), "z*x^2 - y^2")});
  CHECK(kc.ranks() == std::vector<std::size_t>{1, 1});
  CHECK(kc.terms[1].generators()[0].zdeg() == 8);

  CHECK_THROWS_AS(koszul(r, {P(amb, "x + y^2")}), Inhomogeneous);
}

TEST_CASE("koszul homology of regular sequences") {
  for (auto& s : regular_sequences()) {
    CAPTURE(s.seq.front());
    auto r = quotient(s.ring);
    auto seq = Ps(s.ring, s.seq);
    auto k = koszul(r, seq);
    CHECK(composes_to_zero(k));
    CHECK(homogeneous(k));
    for (std::size_t i = 1; i < k.length(); ++i) CHECK(is_zero(homology(k, static_cast<int>(i))));
    auto h0 = homology(k, 0);
    auto expected = ModulePresentation::cyclic(r, seq);
    CHECK(compare_modules(h0, expected, 8).verdict == Verdict::isomorphic_up_to_bound);
  }
}

TEST_CASE("koszul homology detects non-regular sequences") {
  auto r = quotient(ring({{"x"}, {"y"}}));
  auto k = koszul(r, Ps(r->ambient(), {"x*y", "x^2"}));
  CHECK_FALSE(is_zero(homology(k, 1)));
}

TEST_CASE("resolutions") {
  auto c = quotient(ring({{"u"}, {"v"}, {"t"}}));
  auto amb = c->ambient();
  auto tp = ModulePresentation::cyclic(c, Ps(amb, {"u*v - t^2", "u*t - v^2", "v*t - u^2"}));
  auto res = resolve(tp, 3);
  CHECK(res.ranks() == std::vector<std::size_t>{1, 3, 2, 0});
  CHECK(res.finite);
  CHECK(zdegs(res.terms[0]) == std::vector<std::int64_t>{0});
  CHECK(zdegs(res.terms[1]) == std::vector<std::int64_t>{2, 2, 2});
  CHECK(zdegs(res.terms[2]) == std::vector<std::int64_t>{3, 3});
  CHECK(composes_to_zero(res));
  CHECK(homogeneous(res));

  auto line = quotient(ring({{"x"}, {"y"}}));
  auto res2 = resolve(ModulePresentation::cyclic(line, {P(line->ambient(), "x^2 - y^2")}), 2);
  CHECK(res2.ranks() == std::vector<std::size_t>{1, 1, 0});
  CHECK(res2.finite);
}

TEST_CASE("periodic resolution of the node") {
  for (int a : {2, 3}) {
    auto f = node_map(a, 1, a - 1);
    auto b = restrict_along(f, ModulePresentation::ring_module(f.target()));
    auto res = resolve(b, 4);
    auto n = static_cast<std::size_t>(2 * a);
    CHECK(res.ranks() == std::vector<std::size_t>{n - 1, n - 2, n - 2, n - 2, n - 2});
    CHECK_FALSE(res.finite);
    CHECK(res.truncated_at == 4);
    CHECK(res.period.has_value());
    CHECK(composes_to_zero(res));
    CHECK(homogeneous(res));
    for (int i = 1; i < 4; ++i) CHECK(is_zero(homology(res, i)));
    CHECK(hilbert_function(homology(res, 0), 0, 8) == hilbert_function(b, 0, 8));

    auto dual = hom_complex(res, ModulePresentation::ring_module(res.ring));
    CHECK(dual.direction == Direction::cochain);
    CHECK(composes_to_zero(dual));
    for (int i = 1; i <= 3; ++i) CHECK(is_zero(homology(dual, i)));
    CHECK_FALSE(is_zero(homology(dual, 0)));
  }
}

TEST_CASE("resolution exactness on random modules") {
  std::mt19937 rng(11);
  auto amb = ring({{"x"}, {"y"}, {"z"}});
  auto r = quotient(amb);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_form(rng, amb, 3, 2), g = random_form(rng, amb, 3, 2);
    if (f.is_zero() || g.is_zero()) continue;
    auto m = ModulePresentation::cyclic(r, {f, g});
    auto res = resolve(m, 4);
    CHECK(res.finite);
    CHECK(composes_to_zero(res));
    for (std::size_t i = 1; i + 1 < res.length(); ++i) CHECK(is_zero(homology(res, static_cast<int>(i))));
    CHECK(hilbert_function(homology(res, 0), 0, 8) == hilbert_function(m, 0, 8));
  }
}

TEST_CASE("hom complexes") {
  auto r = quotient(ring({{"x", 1, 1}, {"y", 1, 1}}, 3));
  auto amb = r->ambient();
  auto n = ModulePresentation(r, {Bidegree(0, 1, 3)}, {vec(r, {P(amb, "x^2")})});
  ChainComplex single;
  single.ring = r;
  single.terms = {ModulePresentation::ring_module(r)};
  auto hs = hom_complex(single, n);
  REQUIRE(hs.length() == 1);
  CHECK(hilbert_function(homology(hs, 0), 0, 6) == hilbert_function(n, 0, 6));

  auto k = koszul(r, Ps(amb, {"x", "y"}));
  auto d = hom_complex(k, ModulePresentation::ring_module(r));
  CHECK(d.ranks() == std::vector<std::size_t>{1, 2, 1});
  CHECK(composes_to_zero(d));
  CHECK(d.terms[2].generators()[0] == Bidegree(-2, -2, 3));

  ChainComplex bad;
  bad.ring = r;
  bad.terms = {n};
  CHECK_THROWS(hom_complex(bad, n));
}

TEST_CASE("koszul self-duality") {
  for (auto& s : regular_sequences()) {
    CAPTURE(s.seq.front());
    auto r = quotient(s.ring);
    auto seq = Ps(s.ring, s.seq);
    auto d = hom_complex(koszul(r, seq), ModulePresentation::ring_module(r));
    int top = static_cast<int>(seq.size());
    for (int i = 0; i < top; ++i) CHECK(is_zero(homology(d, i)));
    auto h = homology(d, top);
    Bidegree sum = r->zero_degree();
    for (auto& f : seq) sum += *bidegree_of(f).degree;
    auto expected = twist(ModulePresentation::cyclic(r, seq), sum);
    REQUIRE(h.rank() == 1);
    CHECK(h.generators()[0] == -sum);
    CHECK(compare_modules(h, expected, 8).verdict == Verdict::isomorphic_up_to_bound);
  }
}

TEST_CASE("homology of koszul on (x, y)") {
  auto r = quotient(ring({{"x"}, {"y"}}));
  auto k = koszul(r, Ps(r->ambient(), {"x", "y"}));
  auto h0 = homology(k, 0);
  CHECK(totals(hilbert_function(h0, 0, 4)) == std::vector<std::int64_t>{1, 0, 0, 0, 0});
  CHECK(is_zero(homology(k, 1)));
  CHECK(is_zero(homology(k, 2)));
  CHECK_THROWS(homology(k, 3));
  CHECK_THROWS(homology(k, -1));
}
