#include "stackdual/gmodule.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "stackdual/errors.hpp"
#include "stackdual/resource.hpp"

namespace stackdual {

// ---------------------------------------------------------------------------
// Presentations and maps

ModulePresentation::ModulePresentation(GradedRingPtr ring, std::vector<Bidegree> generators,
                                       std::vector<Vec> relations)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.modulus() != ring_->modulus())
      throw InvalidArgument("generator bidegree uses modulus " + std::to_string(g.modulus()) +
                            " over a ring of group order " + std::to_string(ring_->modulus()));
  for (auto& r : relations) {
    for (const auto& t : r)
      if (t.comp >= generators_.size()) throw InvalidArgument("relation refers to a missing generator");
    Vec reduced = ring_->reduce(r);
    if (reduced.empty()) continue;
    auto d = vec_degree(reduced, *ring_->ambient(), generators_);
    if (!d) throw Inhomogeneous("relation " + vec_to_string(reduced, *ring_->ambient(), rank()) +
                                " is not bihomogeneous");
    relations_.push_back(std::move(reduced));
    relation_degrees_.push_back(*d);
  }
}

ModulePresentation ModulePresentation::free(GradedRingPtr ring, std::vector<Bidegree> degrees) {
  return ModulePresentation(std::move(ring), std::move(degrees));
}

ModulePresentation ModulePresentation::ring_module(GradedRingPtr ring) {
  Bidegree zero = ring->zero_degree();
  return ModulePresentation(std::move(ring), {zero});
}

ModulePresentation ModulePresentation::cyclic(GradedRingPtr ring, const std::vector<Polynomial>& ideal) {
  std::vector<Vec> rels;
  for (const auto& f : ideal) rels.push_back(from_polynomial(f, 0, ring->module_order()));
  Bidegree zero = ring->zero_degree();
  return ModulePresentation(std::move(ring), {zero}, std::move(rels));
}

Polynomial ModulePresentation::entry(std::size_t i, std::size_t j) const {
  return component(relations_.at(j), i, ring_->ambient());
}

ModulePresentation ModulePresentation::rebased(GradedRingPtr ring) const {
  if (!(ring->nvars() == ring_->nvars())) throw RingMismatch("cannot rebase across ambient rings");
  std::vector<Bidegree> gens;
  for (const auto& g : generators_) gens.push_back(g.with_modulus(ring->modulus()));
  return ModulePresentation(std::move(ring), std::move(gens), relations_);
}

std::string ModulePresentation::to_string() const {
  std::string out = "gens [";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].to_string();
  }
  out += "] relations [";
  for (std::size_t j = 0; j < relations_.size(); ++j) {
    if (j) out += ", ";
    out += vec_to_string(relations_[j], *ring_->ambient(), rank());
  }
  return out + "]";
}

ModuleMap::ModuleMap(ModulePresentation source, ModulePresentation target, std::vector<Vec> matrix,
                     Bidegree shift)
    : source_(std::move(source)),
      target_(std::move(target)),
      matrix_(std::move(matrix)),
      shift_(shift) {
  if (!same_graded_ring(source_.ring(), target_.ring())) throw RingMismatch();
  if (matrix_.size() != source_.rank()) throw InvalidArgument("map needs one column per source generator");
  const GradedRing& ring = *target_.ring();
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    matrix_[i] = ring.reduce(matrix_[i]);
    if (matrix_[i].empty()) continue;
    auto d = vec_degree(matrix_[i], *ring.ambient(), target_.generators());
    if (!d || !(*d == source_.generators()[i] + shift_))
      throw Inhomogeneous("map column " + std::to_string(i) + " is not homogeneous of the declared shift");
  }
  ModuleGB gb = lifted_basis(ring, target_.rank(), target_.relations());
  for (const auto& rel : source_.relations()) {
    Vec image;
    auto entries = to_polynomials(rel, source_.rank(), ring.ambient());
    for (std::size_t i = 0; i < entries.size(); ++i)
      image = add(image, multiply(entries[i], matrix_[i], ring.module_order()), ring.module_order());
    if (!gb.contains(image)) throw IllDefinedMap("a source relation does not map into the target relations");
  }
}

bool is_zero(const ModulePresentation& m) {
  if (m.rank() == 0) return true;
  ModuleGB gb = lifted_basis(*m.ring(), m.rank(), m.relations());
  const std::size_t n = m.ring()->nvars();
  for (std::size_t i = 0; i < m.rank(); ++i)
    if (!gb.is_leading_multiple(Monomial(n), i)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Minimalization

namespace {

std::optional<std::pair<std::size_t, std::size_t>> find_unit(const std::vector<Vec>& rels) {
  for (std::size_t j = 0; j < rels.size(); ++j) {
    std::optional<std::size_t> best;
    std::map<std::size_t, int> terms_per_comp;
    for (const auto& t : rels[j]) terms_per_comp[t.comp]++;
    for (const auto& t : rels[j])
      if (t.mono.is_one() && terms_per_comp[t.comp] == 1 && (!best || t.comp > *best)) best = t.comp;
    if (best) return std::pair{j, *best};
  }
  return std::nullopt;
}

}  // namespace

MinimalizeResult minimalize_tracked(const ModulePresentation& m) {
  const GradedRingPtr& ring = m.ring();
  const ModuleOrder& order = ring->module_order();
  std::vector<Bidegree> gens = m.generators();
  std::vector<Vec> rels = m.relations();
  std::vector<std::size_t> kept(gens.size());
  std::iota(kept.begin(), kept.end(), 0);

  while (auto unit = find_unit(rels)) {
    check_deadline();
    auto [j, i] = *unit;
    Vec pivot = rels[j];
    Scalar c;
    for (const auto& t : pivot)
      if (t.comp == i) c = t.coef;
    std::vector<Vec> next;
    for (std::size_t k = 0; k < rels.size(); ++k) {
      if (k == j) continue;
      Polynomial p = component(rels[k], i, ring->ambient());
      Vec r = rels[k];
      if (!p.is_zero()) r = add(r, multiply(p * Scalar(-1 / c), pivot, order), order);
      std::vector<VecTerm> renumbered;
      for (auto& t : r) {
        if (t.comp == i) continue;
        renumbered.push_back(VecTerm{t.mono, t.comp > i ? t.comp - 1 : t.comp, t.coef});
      }
      Vec reduced = ring->reduce(normalize(std::move(renumbered), order));
      if (!reduced.empty()) next.push_back(std::move(reduced));
    }
    rels = std::move(next);
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
  }

  auto minimal = minimal_generating_subset(ring, gens.size(), gens, rels);
  std::vector<Vec> chosen;
  for (auto k : minimal) chosen.push_back(rels[k]);
  return {ModulePresentation(ring, std::move(gens), std::move(chosen)), std::move(kept)};
}

ModulePresentation minimalize(const ModulePresentation& m) { return minimalize_tracked(m).module; }

// ---------------------------------------------------------------------------
// Kernels and Hom

Embedded kernel_of(const ModulePresentation& source, const ModulePresentation& target,
                   const std::vector<Vec>& matrix) {
  const GradedRingPtr& ring = source.ring();
  const std::size_t k = source.rank();
  if (k == 0) return {ModulePresentation(ring, {}), {}};
  std::vector<Vec> pre;
  if (target.rank() == 0) {
    for (std::size_t j = 0; j < k; ++j)
      pre.push_back({VecTerm{Monomial(ring->nvars()), j, Scalar(1)}});
  } else {
    Lifter lifter(ring, target.rank(), matrix, target.relations());
    pre = lifter.syzygies();
  }
  auto idx = minimal_generating_subset(ring, k, source.generators(), pre, source.relations());
  std::vector<Vec> gens;
  std::vector<Bidegree> degrees;
  for (auto i : idx) {
    auto d = vec_degree(pre[i], *ring->ambient(), source.generators());
    if (!d) throw Inhomogeneous("kernel generator is not bihomogeneous");
    gens.push_back(pre[i]);
    degrees.push_back(*d);
  }
  std::vector<Vec> rels;
  if (!gens.empty()) rels = Lifter(ring, k, gens, source.relations()).syzygies();
  auto mr = minimalize_tracked(ModulePresentation(ring, std::move(degrees), std::move(rels)));
  std::vector<Vec> inclusion;
  for (auto i : mr.kept) inclusion.push_back(gens[i]);
  return {std::move(mr.module), std::move(inclusion)};
}

Embedded kernel(const ModuleMap& f) { return kernel_of(f.source(), f.target(), f.matrix()); }

ModulePresentation hom_from_free(const std::vector<Bidegree>& shifts, const ModulePresentation& n) {
  const ModuleOrder& order = n.ring()->module_order();
  std::vector<Bidegree> gens;
  std::vector<Vec> rels;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    for (const auto& g : n.generators()) gens.push_back(g - shifts[i]);
    for (const auto& r : n.relations()) rels.push_back(shift_components(r, i * n.rank(), order));
  }
  return ModulePresentation(n.ring(), std::move(gens), std::move(rels));
}

Vec apply_matrix(const GradedRing& ring, const std::vector<Vec>& matrix, const Vec& v) {
  const ModuleOrder& order = ring.module_order();
  Vec out;
  for (const auto& t : v) {
    if (t.comp >= matrix.size()) throw InvalidArgument("vector has more coordinates than the map has columns");
    out = axpy(out, t.coef, t.mono, matrix[t.comp], order);
  }
  return ring.reduce(out);
}

Embedded hom_embedded(const ModulePresentation& m, const ModulePresentation& n) {
  if (!same_graded_ring(m.ring(), n.ring())) throw RingMismatch();
  const GradedRingPtr& ring = m.ring();
  const ModuleOrder& order = ring->module_order();
  const std::size_t k0 = m.rank(), r1 = m.relations().size(), rn = n.rank();
  ModulePresentation hom0 = hom_from_free(m.generators(), n);
  if (k0 == 0 || rn == 0) return {ModulePresentation(ring, {}), {}};
  ModulePresentation hom1 = hom_from_free(m.relation_degrees(), n);
  std::vector<Vec> matrix;
  for (std::size_t i = 0; i < k0; ++i) {
    for (std::size_t j = 0; j < rn; ++j) {
      std::vector<VecTerm> terms;
      for (std::size_t c = 0; c < r1; ++c)
        for (const auto& t : m.relations()[c])
          if (t.comp == i) terms.push_back(VecTerm{t.mono, c * rn + j, t.coef});
      matrix.push_back(normalize(std::move(terms), order));
    }
  }
  return kernel_of(hom0, hom1, matrix);
}

ModulePresentation hom_module(const ModulePresentation& m, const ModulePresentation& n) {
  return hom_embedded(m, n).module;
}

ModulePresentation tensor(const ModulePresentation& m, const ModulePresentation& n) {
  if (!same_graded_ring(m.ring(), n.ring())) throw RingMismatch();
  const ModuleOrder& order = m.ring()->module_order();
  const std::size_t r2 = n.rank();
  std::vector<Bidegree> gens;
  for (const auto& a : m.generators())
    for (const auto& b : n.generators()) gens.push_back(a + b);
  std::vector<Vec> rels;
  for (const auto& r : m.relations()) {
    for (std::size_t j = 0; j < r2; ++j) {
      std::vector<VecTerm> terms;
      for (const auto& t : r) terms.push_back(VecTerm{t.mono, t.comp * r2 + j, t.coef});
      rels.push_back(normalize(std::move(terms), order));
    }
  }
  for (const auto& s : n.relations()) {
    for (std::size_t i = 0; i < m.rank(); ++i) rels.push_back(shift_components(s, i * r2, order));
  }
  return minimalize(ModulePresentation(m.ring(), std::move(gens), std::move(rels)));
}

ModulePresentation exterior_power(const GradedRingPtr& ring, const FreeModule& f, std::size_t r) {
  if (r > f.rank()) throw InvalidArgument("exterior power exceeds the rank");
  std::vector<Bidegree> gens;
  std::vector<std::size_t> subset(r);
  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t start, std::size_t depth) {
    if (depth == r) {
      Bidegree d = ring->zero_degree();
      for (auto s : subset) d += f.degrees[s];
      gens.push_back(d);
      return;
    }
    for (std::size_t i = start; i < f.rank(); ++i) {
      subset[depth] = i;
      visit(i + 1, depth + 1);
    }
  };
  visit(0, 0);
  return ModulePresentation::free(ring, std::move(gens));
}

ModulePresentation exterior_power(const ModulePresentation& m, std::size_t r) {
  ModulePresentation min = minimalize(m);
  if (!min.is_free()) throw InvalidArgument("exterior power is implemented for free modules only");
  return exterior_power(min.ring(), min.free_part(), r);
}

ModulePresentation twist(const ModulePresentation& m, const Bidegree& d) {
  std::vector<Bidegree> gens;
  for (const auto& g : m.generators()) gens.push_back(g - d);
  return ModulePresentation(m.ring(), std::move(gens), m.relations());
}

ModulePresentation base_change(const ModulePresentation& m, const GradedRingPtr& quotient_ring) {
  if (!(*m.ring()->ambient() == *quotient_ring->ambient()))
    throw RingMismatch("base change needs a quotient of the same ambient ring");
  return ModulePresentation(quotient_ring, m.generators(), m.relations());
}

// ---------------------------------------------------------------------------
// Hilbert functions

namespace {

struct StandardMonomial {
  Monomial mono;
  std::size_t comp;
  Bidegree degree;
  std::int64_t level;  // filtration degree of the monomial part
};

/// Monomials x^m e_i outside the leading-term module with filtration
/// degree at most budget_i.
std::vector<StandardMonomial> standard_monomials(const ModuleGB& gb, const Ring& ring,
                                                 const std::vector<Bidegree>& gens,
                                                 const std::vector<std::int64_t>& budget) {
  std::vector<StandardMonomial> out;
  const std::size_t n = ring.nvars();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (budget[i] < 0) continue;
    std::function<void(std::size_t, Monomial&, std::int64_t)> walk = [&](std::size_t from, Monomial& m,
                                                                          std::int64_t level) {
      check_deadline();
      out.push_back({m, i, ring.degree_of(m) + gens[i], level});
      for (std::size_t v = from; v < n; ++v) {
        std::int64_t step = ring.zgraded() ? ring.variables()[v].zdeg : 1;
        if (level + step > budget[i]) continue;
        m[v] += 1;
        if (!gb.is_leading_multiple(m, i)) walk(v, m, level + step);
        m[v] -= 1;
      }
    };
    Monomial one(n);
    if (!gb.is_leading_multiple(one, i)) walk(0, one, 0);
  }
  return out;
}

std::vector<Vec> maximal_ideal_power(std::size_t nvars, std::size_t rank, int k) {
  std::vector<Vec> out;
  std::vector<Monomial> monos;
  Monomial m(nvars);
  std::function<void(std::size_t, int)> walk = [&](std::size_t from, int left) {
    if (left == 0) {
      monos.push_back(m);
      return;
    }
    for (std::size_t v = from; v < nvars; ++v) {
      m[v] += 1;
      walk(v, left - 1);
      m[v] -= 1;
    }
  };
  walk(0, k);
  for (std::size_t i = 0; i < rank; ++i)
    for (const auto& mono : monos) out.push_back({VecTerm{mono, i, Scalar(1)}});
  return out;
}

}  // namespace

std::int64_t HilbertTable::dim(std::int64_t degree, std::int64_t weight) const {
  auto it = dims.find({degree, positive_mod(weight, modulus)});
  return it == dims.end() ? 0 : it->second;
}

std::int64_t HilbertTable::dim(std::int64_t degree) const {
  std::int64_t total = 0;
  for (std::int64_t w = 0; w < modulus; ++w) total += dim(degree, w);
  return total;
}

HilbertTable hilbert_function(const ModulePresentation& m, std::int64_t zmin, std::int64_t zmax) {
  const GradedRing& ring = *m.ring();
  const Ring& amb = *ring.ambient();
  HilbertTable table;
  table.zgraded = ring.zgraded();
  table.lo = zmin;
  table.hi = zmax;
  table.modulus = ring.modulus();
  if (ring.zgraded()) {
    ModuleGB gb = lifted_basis(ring, m.rank(), m.relations());
    std::vector<std::int64_t> budget;
    for (const auto& g : m.generators()) budget.push_back(zmax - g.zdeg());
    for (const auto& s : standard_monomials(gb, amb, m.generators(), budget)) {
      if (s.degree.zdeg() < zmin) continue;
      table.dims[{s.degree.zdeg(), s.degree.weight()}] += 1;
    }
  } else {
    // Associated graded of the m-adic filtration: dim M/m^{k+1}M - dim M/m^k M.
    std::map<std::int64_t, std::int64_t> previous;
    for (std::int64_t k = 0; k <= zmax; ++k) {
      std::vector<Vec> gens = m.relations();
      auto power = maximal_ideal_power(amb.nvars(), m.rank(), static_cast<int>(k + 1));
      gens.insert(gens.end(), power.begin(), power.end());
      ModuleGB gb = lifted_basis(ring, m.rank(), gens);
      std::vector<std::int64_t> budget(m.rank(), k);
      std::map<std::int64_t, std::int64_t> current;
      for (const auto& s : standard_monomials(gb, amb, m.generators(), budget)) current[s.degree.weight()] += 1;
      if (k >= zmin) {
        for (std::int64_t w = 0; w < ring.modulus(); ++w) {
          std::int64_t d = current[w] - previous[w];
          if (d != 0) table.dims[{k, w}] = d;
        }
      }
      previous = std::move(current);
    }
  }
  return table;
}

HilbertTable hilbert_function(const ModulePresentation& m, std::int64_t zmax) {
  std::int64_t lo = 0;
  if (m.ring()->zgraded() && m.rank() > 0) {
    lo = m.generators().front().zdeg();
    for (const auto& g : m.generators()) lo = std::min(lo, g.zdeg());
  }
  return hilbert_function(m, lo, zmax);
}

InvariantPart invariant_part(const ModulePresentation& m, std::int64_t bound) {
  InvariantPart out;
  std::int64_t lo = 0;
  if (m.ring()->zgraded() && m.rank() > 0) {
    lo = m.generators().front().zdeg();
    for (const auto& g : m.generators()) lo = std::min(lo, g.zdeg());
  }
  HilbertTable full = hilbert_function(m, lo, lo + bound);
  out.table = full;
  out.table.dims.clear();
  std::optional<std::int64_t> lowest;
  for (const auto& [key, d] : full.dims) {
    if (key.second != 0) continue;
    out.table.dims[key] = d;
    if (!lowest || key.first < *lowest) lowest = key.first;
  }
  if (lowest && m.ring()->zgraded()) {
    const GradedRing& ring = *m.ring();
    ModuleGB gb = lifted_basis(ring, m.rank(), m.relations());
    std::vector<std::int64_t> budget;
    for (const auto& g : m.generators()) budget.push_back(*lowest - g.zdeg());
    for (const auto& s : standard_monomials(gb, *ring.ambient(), m.generators(), budget)) {
      if (s.degree.zdeg() != *lowest || s.degree.weight() != 0) continue;
      std::string mono = monomial_to_string(*ring.ambient(), s.mono);
      out.low_degree_basis.push_back((mono == "1" ? "" : mono + "*") + "e" + std::to_string(s.comp));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Restriction of scalars

FiniteRestriction::FiniteRestriction(const RingMorphism& f, const ModulePresentation& n)
    : target_(f.target()), rank_(n.rank()) {
  if (!same_graded_ring(n.ring(), f.target())) throw RingMismatch("module is not over the target ring");
  const GradedRing& b = *target_;
  const Ring& bamb = *b.ambient();
  const std::int64_t a = b.modulus();
  source_ = f.source()->modulus() == a ? f.source() : f.source()->with_modulus(a);
  const Ring& aamb = *source_->ambient();
  const std::size_t nb = bamb.nvars(), na = aamb.nvars();

  // Generators of N over A: a monomial basis of N / f(m_A) N.
  std::vector<Vec> fiber = n.relations();
  for (const auto& im : f.images())
    for (std::size_t i = 0; i < rank_; ++i)
      if (!im.is_zero()) fiber.push_back(from_polynomial(im, i, b.module_order()));
  ModuleGB fgb = lifted_basis(b, rank_, fiber);
  std::int64_t max_step = 1;
  for (const auto& v : bamb.variables()) max_step = std::max<std::int64_t>(max_step, bamb.zgraded() ? v.zdeg : 1);
  std::vector<std::int64_t> budget(rank_, f.guard_degree() + max_step);
  auto staircase = standard_monomials(fgb, bamb, n.generators(), budget);
  std::vector<Bidegree> gen_degrees;
  std::sort(staircase.begin(), staircase.end(), [&](const auto& x, const auto& y) {
    if (x.comp != y.comp) return x.comp < y.comp;
    if (x.mono.degree() != y.mono.degree()) return x.mono.degree() < y.mono.degree();
    return bamb.order().compare(x.mono, y.mono) > 0;
  });
  for (const auto& s : staircase) {
    if (s.level >= f.guard_degree())
      throw NotModuleFinite("module is not finite over the source: staircase reaches the guard degree " +
                            std::to_string(f.guard_degree()));
    generators_.push_back({VecTerm{s.mono, s.comp, Scalar(1)}});
    gen_degrees.push_back(s.degree);
  }
  const std::size_t s = generators_.size();

  // Combined ring Q[x (eliminated), u] with u_k = f_k(x).
  std::vector<Ring::Variable> vars;
  for (const auto& v : bamb.variables()) vars.push_back({"B." + v.name, v.zdeg, v.weight});
  for (const auto& v : aamb.variables()) vars.push_back({"A." + v.name, v.zdeg, v.weight});
  std::vector<std::size_t> prec(nb + na);
  std::iota(prec.begin(), prec.end(), 0);
  if (!bamb.zgraded())
    for (auto& v : vars) v.zdeg = 0;
  combined_ = make_ring(std::move(vars), a, bamb.zgraded(),
                        MonomialOrder(OrderKind::degrevlex, prec, {nb, na}));
  std::vector<int> blocks(rank_ + s, 0);
  std::fill(blocks.begin() + static_cast<std::ptrdiff_t>(rank_), blocks.end(), 1);
  order_ = ModuleOrder(combined_->order(), blocks);

  std::vector<std::size_t> bmap(nb), amap(na);
  std::iota(bmap.begin(), bmap.end(), 0);
  std::iota(amap.begin(), amap.end(), nb);
  auto embed_vec = [&](const Vec& v) {
    std::vector<VecTerm> terms;
    for (const auto& t : v) {
      Monomial m(nb + na);
      for (std::size_t i = 0; i < nb; ++i) m[i] = t.mono[i];
      terms.push_back(VecTerm{std::move(m), t.comp, t.coef});
    }
    return normalize(std::move(terms), order_);
  };

  std::vector<Vec> gens;
  for (std::size_t l = 0; l < s; ++l) {
    std::vector<VecTerm> terms = embed_vec(generators_[l]);
    terms.push_back(VecTerm{Monomial(nb + na), rank_ + l, Scalar(1)});
    gens.push_back(normalize(std::move(terms), order_));
  }
  for (const auto& r : n.relations()) gens.push_back(embed_vec(r));
  std::vector<Polynomial> zero_on_n;
  for (const auto& g : b.ideal_basis().generators) zero_on_n.push_back(embed(g, combined_, bmap));
  for (std::size_t k = 0; k < na; ++k)
    zero_on_n.push_back(Polynomial::variable(combined_, nb + k) - embed(f.images()[k], combined_, bmap));
  for (const auto& p : zero_on_n)
    for (std::size_t i = 0; i < rank_ + s; ++i) gens.push_back(from_polynomial(p, i, order_));
  gb_ = ModuleGB(order_, std::move(gens));

  // Relations over A: basis elements living in the tag block and free of x.
  std::vector<Vec> rels;
  const ModuleOrder& aorder = source_->module_order();
  for (const auto& g : gb_.basis()) {
    if (g.front().comp < rank_) continue;
    bool x_free = true;
    for (const auto& t : g)
      for (std::size_t i = 0; i < nb; ++i)
        if (t.mono[i] != 0) x_free = false;
    if (!x_free) continue;
    std::vector<VecTerm> terms;
    for (const auto& t : g) {
      Monomial m(na);
      for (std::size_t k = 0; k < na; ++k) m[k] = t.mono[nb + k];
      terms.push_back(VecTerm{std::move(m), t.comp - rank_, t.coef});
    }
    Vec r = source_->reduce(normalize(std::move(terms), aorder));
    if (!r.empty()) rels.push_back(std::move(r));
  }
  auto minimal = minimal_generating_subset(source_, s, gen_degrees, rels);
  std::vector<Vec> chosen;
  for (auto i : minimal) chosen.push_back(rels[i]);
  module_ = ModulePresentation(source_, std::move(gen_degrees), std::move(chosen));
}

std::vector<Polynomial> FiniteRestriction::coordinates(const Vec& element) const {
  const std::size_t nb = target_->nvars();
  const std::size_t na = source_->nvars();
  std::vector<VecTerm> terms;
  for (const auto& t : element) {
    Monomial m(nb + na);
    for (std::size_t i = 0; i < nb; ++i) m[i] = t.mono[i];
    terms.push_back(VecTerm{std::move(m), t.comp, t.coef});
  }
  Vec r = gb_.reduce(normalize(std::move(terms), order_));
  std::vector<VecTerm> coeffs;
  for (const auto& t : r) {
    if (t.comp < rank_) throw InvalidArgument("element is not in the module");
    Monomial m(na);
    for (std::size_t i = 0; i < nb; ++i)
      if (t.mono[i] != 0) throw Error("restriction failed to eliminate target variables");
    for (std::size_t k = 0; k < na; ++k) m[k] = t.mono[nb + k];
    coeffs.push_back(VecTerm{std::move(m), t.comp - rank_, -t.coef});
  }
  auto polys = to_polynomials(normalize(std::move(coeffs), source_->module_order()), generators_.size(),
                              source_->ambient());
  for (auto& p : polys) p = source_->reduce(p);
  return polys;
}

ModulePresentation restrict_along(const RingMorphism& f, const ModulePresentation& n) {
  return FiniteRestriction(f, n).module();
}

}  // namespace stackdual
