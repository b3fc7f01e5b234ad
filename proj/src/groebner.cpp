#include "stackdual/groebner.hpp"

#include <algorithm>
#include <set>

#include "stackdual/errors.hpp"
#include "stackdual/resource.hpp"

namespace stackdual {

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::size_t comp;
};

bool single_component(const Vec& v) {
  for (const auto& t : v)
    if (t.comp != v.front().comp) return false;
  return true;
}

/// Reduce using the elements whose indices are listed as active.
Vec reduce_active(const Vec& v, const std::vector<Vec>& divisors, const std::vector<bool>& active,
                  const ModuleOrder& order) {
  Vec rest = v;
  Vec out;
  while (!rest.empty()) {
    const VecTerm& lt = rest.front();
    const Vec* hit = nullptr;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      if (!active.empty() && !active[k]) continue;
      const VecTerm& d = divisors[k].front();
      if (d.comp == lt.comp && divides(d.mono, lt.mono)) {
        hit = &divisors[k];
        break;
      }
    }
    if (hit == nullptr) {
      out.push_back(lt);
      rest.erase(rest.begin());
      continue;
    }
    Scalar c = -lt.coef / hit->front().coef;
    Monomial m = quotient(lt.mono, hit->front().mono);
    rest = axpy(rest, c, m, *hit, order);
  }
  return out;
}

}  // namespace

Vec reduce_by(const Vec& v, const std::vector<Vec>& divisors, const ModuleOrder& order) {
  return reduce_active(v, divisors, {}, order);
}

ModuleGB::ModuleGB(ModuleOrder order, std::vector<Vec> generators) : order_(std::move(order)) {
  std::vector<Vec> g;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;

  auto add_element = [&](Vec v) {
    make_monic(v);
    std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i].front().comp != v.front().comp) continue;
      pending.push_back(Pair{i, n, lcm(g[i].front().mono, v.front().mono), v.front().comp});
      pending_keys.insert({i, n});
    }
    g.push_back(std::move(v));
  };

  for (auto& gen : generators) {
    Vec v = resort(std::move(gen), order_);
    v = reduce_by(v, g, order_);
    if (!v.empty()) add_element(std::move(v));
  }

  while (!pending.empty()) {
    check_deadline();
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      int da = a.lcm.degree(), db = b.lcm.degree();
      if (da != db) return da < db;
      return order_.compare(VecTerm{a.lcm, a.comp, 0}, VecTerm{b.lcm, b.comp, 0}) < 0;
    });
    Pair p = *best;
    pending.erase(best);
    pending_keys.erase({p.i, p.j});

    const Vec& gi = g[p.i];
    const Vec& gj = g[p.j];
    if (coprime(gi.front().mono, gj.front().mono) && single_component(gi) && single_component(gj) &&
        gi.front().comp == gj.front().comp && gj.front().comp == gi.back().comp)
      continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == p.i || k == p.j || g[k].front().comp != p.comp) continue;
      if (!divides(g[k].front().mono, p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::pair{std::min(a, b), std::max(a, b)}; };
      if (!pending_keys.contains(key(p.i, k)) && !pending_keys.contains(key(p.j, k))) chain = true;
    }
    if (chain) continue;

    Vec s = axpy({}, Scalar(1), quotient(p.lcm, gi.front().mono), gi, order_);
    s = axpy(s, -gi.front().coef / gj.front().coef, quotient(p.lcm, gj.front().mono), gj, order_);
    s = reduce_by(s, g, order_);
    if (!s.empty()) add_element(std::move(s));
  }

  // Minimalize: drop elements whose leading term is a multiple of another's.
  std::vector<bool> keep(g.size(), true);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t k = 0; k < g.size() && keep[i]; ++k) {
      if (k == i || !keep[k]) continue;
      const auto& a = g[k].front();
      const auto& b = g[i].front();
      if (a.comp == b.comp && divides(a.mono, b.mono) && (!(a.mono == b.mono) || k < i)) keep[i] = false;
    }
  }
  // Tail reduction against the other minimal elements.
  std::vector<Vec> reduced;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!keep[i]) continue;
    std::vector<bool> active = keep;
    active[i] = false;
    Vec v = reduce_active(g[i], g, active, order_);
    make_monic(v);
    reduced.push_back(std::move(v));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Vec& a, const Vec& b) { return order_.compare(a.front(), b.front()) < 0; });
  basis_ = std::move(reduced);
}

Vec ModuleGB::reduce(const Vec& v) const { return reduce_by(resort(v, order_), basis_, order_); }

bool ModuleGB::is_leading_multiple(const Monomial& m, std::size_t comp) const {
  for (const auto& b : basis_)
    if (b.front().comp == comp && divides(b.front().mono, m)) return true;
  return false;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw InvalidArgument("buchberger needs a ring; use the ring overload");
  RingPtr ring = gens.front().ring();
  for (const auto& g : gens)
    if (!same_ring(g.ring(), ring)) throw RingMismatch();
  ModuleOrder mo(order);
  std::vector<Vec> vs;
  for (const auto& g : gens)
    if (!g.is_zero()) vs.push_back(from_polynomial(g, 0, mo));
  GroebnerBasis gb{ring, order, {}, ModuleGB(mo, std::move(vs))};
  for (const auto& v : gb.engine.basis()) gb.generators.push_back(component(v, 0, ring));
  return gb;
}

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  if (gens.empty()) {
    ModuleOrder mo(ring->order());
    return GroebnerBasis{ring, ring->order(), {}, ModuleGB(mo, {})};
  }
  return buchberger(gens, ring->order());
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (!same_ring(p.ring(), gb.ring)) throw RingMismatch();
  Vec r = gb.engine.reduce(from_polynomial(p, 0, gb.engine.order()));
  return component(r, 0, p.ring());
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p) {
  return normal_form(p, gb).is_zero();
}

}  // namespace stackdual
