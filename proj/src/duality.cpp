#include "stackdual/duality.hpp"

#include <algorithm>
#include <bit>

#include "stackdual/errors.hpp"
#include "stackdual/resource.hpp"

namespace stackdual {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::isomorphic_up_to_bound:
      return "isomorphic-up-to-bound";
    case Verdict::distinct:
      return "distinct";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::int64_t lowest_generator_degree(const ModulePresentation& m) {
  if (!m.ring()->zgraded() || m.rank() == 0) return 0;
  std::int64_t lo = m.generators().front().zdeg();
  for (const auto& g : m.generators()) lo = std::min(lo, g.zdeg());
  return lo;
}

namespace {

void fill_verdicts(DualityReport& r, const ModulePresentation& module) {
  r.generator_bidegrees = module.generators();
  r.fiber_representation.clear();
  for (const auto& g : module.generators()) r.fiber_representation.push_back(g.weight());
  r.is_free_rank_one = module.rank() == 1 && module.is_free();
  r.module = module;
}

/// Sum over l of c_l * block_l, blocks of width `width`.
Vec combine_blocks(const GradedRing& ring, const std::vector<Polynomial>& c, const Vec& v, std::size_t width) {
  const ModuleOrder& order = ring.module_order();
  std::vector<Vec> blocks(c.size());
  for (const auto& t : v) blocks[t.comp / width].push_back(VecTerm{t.mono, t.comp % width, t.coef});
  Vec out;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero() && !blocks[k].empty())
      out = add(out, multiply(c[k], normalize(std::move(blocks[k]), order), order), order);
  return out;
}

Polynomial push(const Polynomial& p, const RingMorphism& f) {
  return f.target()->reduce(substitute(p.rebased(f.source()->ambient()), f.images()));
}

}  // namespace

DualityReport finite_shriek(const RingMorphism& f, const ModulePresentation& m, int depth) {
  if (depth < 1) throw InvalidArgument("depth must be at least 1");
  const GradedRingPtr& b = f.target();
  FiniteRestriction p(f, ModulePresentation::ring_module(b));
  const GradedRingPtr& a = p.source_ring();
  if (!same_graded_ring(m.ring(), f.source()) && !same_graded_ring(m.ring(), a))
    throw RingMismatch("module is not over the source ring");
  ModulePresentation ma = m.rebased(a);
  const GradedRing& ar = *a;
  const std::size_t s = p.generators().size();
  const std::size_t width = ma.rank();

  Embedded h = hom_embedded(p.module(), ma);
  ModulePresentation hom_target = hom_from_free(p.module().generators(), ma);
  Lifter lifter(a, s * width, h.inclusion, hom_target.relations());

  std::vector<Vec> rels;
  for (const auto& rel : h.module.relations()) {
    std::vector<VecTerm> terms;
    for (const auto& t : rel) {
      Polynomial image = push(Polynomial(ar.ambient(), {Term{t.mono, t.coef}}), f);
      for (const auto& bt : image.terms()) terms.push_back(VecTerm{bt.mono, t.comp, bt.coef});
    }
    rels.push_back(normalize(std::move(terms), b->module_order()));
  }
  const std::size_t nb = b->nvars();
  for (std::size_t v = 0; v < nb; ++v) {
    check_deadline();
    std::vector<std::vector<Polynomial>> coeff;
    for (const auto& g : p.generators()) coeff.push_back(p.coordinates(multiply(b->variable(v), g, b->module_order())));
    for (std::size_t q = 0; q < h.inclusion.size(); ++q) {
      // (x_v phi)(b_l) = phi(x_v b_l) = sum_k c_{l,k} phi(b_k)
      std::vector<VecTerm> acted;
      for (std::size_t l = 0; l < s; ++l) {
        Vec part = combine_blocks(ar, coeff[l], h.inclusion[q], width);
        for (auto& t : part) acted.push_back(VecTerm{t.mono, l * width + t.comp, t.coef});
      }
      auto alpha = lifter.lift(ar.reduce(normalize(std::move(acted), ar.module_order())));
      if (!alpha) throw Error("module structure on Hom could not be lifted");
      std::vector<VecTerm> rel{VecTerm{Monomial::variable(nb, v), q, Scalar(1)}};
      for (std::size_t r = 0; r < alpha->size(); ++r) {
        Polynomial image = push((*alpha)[r], f);
        for (const auto& bt : image.terms()) rel.push_back(VecTerm{bt.mono, r, -bt.coef});
      }
      rels.push_back(normalize(std::move(rel), b->module_order()));
    }
  }
  ModulePresentation upstairs = minimalize(ModulePresentation(b, h.module.generators(), std::move(rels)));

  DualityReport report;
  report.description = "Hom over the source of the target ring, with its module structure upstairs";
  report.depth = depth;
  fill_verdicts(report, upstairs);

  ChainComplex res = resolve(p.module(), depth + 1);
  ChainComplex dual = hom_complex(res, ma);
  report.is_sheaf = true;
  for (int i = 1; i <= depth; ++i) {
    check_deadline();
    ExtSummary e;
    if (static_cast<std::size_t>(i) < dual.terms.size()) {
      ModulePresentation ext = homology(dual, i);
      e.is_zero = is_zero(ext);
      e.generators = e.is_zero ? 0 : ext.rank();
    }
    report.is_sheaf = report.is_sheaf && e.is_zero;
    report.ext_profile[i] = e;
  }
  if (res.period) report.notes.push_back("resolution over the source is periodic of period " + std::to_string(*res.period));
  if (!report.is_sheaf) report.notes.push_back("higher Ext does not vanish; no single-sheaf verdict");
  return report;
}

std::vector<std::pair<int, ModulePresentation>> ext_dualizing(const GradedRingPtr& c,
                                                              const std::vector<Polynomial>& ideal,
                                                              const ModulePresentation& omega, int imax) {
  if (!c->is_polynomial_ring()) throw InvalidArgument("Ext dualizing needs a regular ambient ring");
  if (imax < 0) throw InvalidArgument("imax must be nonnegative");
  GradedRingPtr quotient = c->quotient(ideal);
  ModulePresentation cyclic = ModulePresentation::cyclic(c, ideal);
  ChainComplex res = resolve(cyclic, static_cast<int>(c->nvars()) + 1);
  ChainComplex dual = hom_complex(res, omega);
  std::vector<std::pair<int, ModulePresentation>> out;
  for (int i = 0; i <= imax; ++i) {
    check_deadline();
    if (static_cast<std::size_t>(i) < dual.terms.size()) {
      out.emplace_back(i, minimalize(base_change(homology(dual, i), quotient)));
    } else {
      out.emplace_back(i, ModulePresentation(quotient, {}));
    }
  }
  return out;
}

ModulePresentation canonical_module(const GradedRingPtr& c) {
  if (!c->is_polynomial_ring()) throw InvalidArgument("canonical module needs a ring without equations");
  Bidegree d = c->zero_degree();
  for (std::size_t i = 0; i < c->nvars(); ++i) d += c->ambient()->variable_degree(i);
  return ModulePresentation::free(c, {d});
}

DualityReport lci_dualizing(const GradedRingPtr& c, const std::vector<Polynomial>& seq,
                            const ModulePresentation& omega, int bound) {
  if (!c->is_polynomial_ring()) throw InvalidArgument("l.c.i. formula needs a regular ambient ring");
  ChainComplex k = koszul(c, seq);
  for (std::size_t i = 1; i < k.terms.size(); ++i)
    if (!is_zero(homology(k, static_cast<int>(i))))
      throw NotRegularSequence("Koszul homology H_" + std::to_string(i) + " does not vanish");
  ModulePresentation om = minimalize(omega);
  if (!(om.rank() == 1 && om.is_free())) throw InvalidArgument("omega must be free of rank one");
  const int r = static_cast<int>(seq.size());
  GradedRingPtr b = c->quotient(seq);

  // Conormal module I/I^2: generators f_k, relations the syzygies of seq.
  std::vector<Vec> cols;
  std::vector<Bidegree> degs;
  for (const auto& f : seq) {
    cols.push_back(from_polynomial(f.rebased(c->ambient()), 0, c->module_order()));
    degs.push_back(*bidegree_of(f).degree);
  }
  std::vector<Vec> syz = r > 0 ? Lifter(c, 1, cols).syzygies() : std::vector<Vec>{};
  ModulePresentation conormal = minimalize(ModulePresentation(b, degs, syz));
  if (!conormal.is_free() || conormal.rank() != static_cast<std::size_t>(r))
    throw NotRegularSequence("conormal module is not free of rank " + std::to_string(r));
  ModulePresentation det = exterior_power(hom_module(conormal, ModulePresentation::ring_module(b)), r);
  ModulePresentation result = minimalize(tensor(base_change(om, b), det));

  DualityReport report;
  report.description = "omega tensor the top exterior power of the dual conormal module";
  report.depth = static_cast<int>(c->nvars());
  fill_verdicts(report, result);

  auto exts = ext_dualizing(c, seq, om, static_cast<int>(c->nvars()));
  for (const auto& [i, e] : exts) {
    ExtSummary s;
    s.is_zero = is_zero(e);
    s.generators = s.is_zero ? 0 : e.rank();
    report.ext_profile[i] = s;
    if (i != r && !s.is_zero) report.is_sheaf = false;
  }
  Comparison cmp = compare_modules(result, exts[static_cast<std::size_t>(r)].second, bound);
  report.notes.push_back("cross-check against Ext^" + std::to_string(r) + ": " + to_string(cmp.verdict) +
                         (cmp.witness.empty() ? "" : " (" + cmp.witness + ")"));
  return report;
}

int krull_dimension(const GradedRingPtr& c, const std::vector<Polynomial>& ideal) {
  GradedRingPtr q = c->quotient(ideal);
  const auto& gens = q->ideal_basis().generators;
  const std::size_t n = c->nvars();
  std::vector<Monomial> leads;
  for (const auto& g : gens) {
    if (g.is_constant()) return -1;
    leads.push_back(leading_term(g, c->ambient()->order()).mono);
  }
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : leads) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i)
        if (m[i] > 0 && !(mask >> i & 1)) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

CMReport cm_gorenstein_check(const GradedRingPtr& c, const std::vector<Polynomial>& ideal, int imax) {
  CMReport report;
  auto exts = ext_dualizing(c, ideal, canonical_module(c), imax);
  std::optional<std::size_t> first_gens;
  for (const auto& [i, e] : exts) {
    ExtSummary s;
    s.is_zero = is_zero(e);
    s.generators = s.is_zero ? 0 : e.rank();
    report.ext_profile[i] = s;
    if (!s.is_zero && !report.codimension) {
      report.codimension = i;
      first_gens = s.generators;
    }
  }
  int dim = krull_dimension(c, ideal);
  if (dim >= 0) report.expected_codimension = static_cast<int>(c->nvars()) - dim;
  if (!report.codimension) {
    report.inconclusive = true;
    report.notes.push_back("no nonvanishing Ext in the computed range");
    return report;
  }
  report.cohen_macaulay = true;
  for (const auto& [i, s] : report.ext_profile)
    if (i != *report.codimension && !s.is_zero) report.cohen_macaulay = false;
  report.gorenstein = report.cohen_macaulay && first_gens == 1u;
  if (report.expected_codimension != report.codimension) {
    report.inconclusive = true;
    report.notes.push_back("first nonvanishing Ext index disagrees with the dimension count");
  }
  return report;
}

PushforwardResult pushforward_check(const RingMorphism& f, const ModulePresentation& omega_b,
                                    const ModulePresentation& omega_a, int bound) {
  if (!f.target()->zgraded()) throw InvalidArgument("pushforward check needs Z-graded rings");
  for (const auto& im : f.images()) {
    auto d = bidegree_of(im);
    if (d.degree && d.degree->weight() != 0)
      throw InvalidArgument("image " + im.to_string() + " has nonzero weight");
  }
  PushforwardResult out;
  std::int64_t lo = std::min(lowest_generator_degree(omega_b), lowest_generator_degree(omega_a));
  HilbertTable tb = hilbert_function(omega_b, lo, lo + bound);
  out.expected = hilbert_function(omega_a, lo, lo + bound);
  out.invariants = tb;
  out.invariants.dims.clear();
  for (const auto& [key, d] : tb.dims)
    if (key.second == 0) out.invariants.dims[key] = d;
  out.equal = true;
  for (std::int64_t z = lo; z <= lo + bound; ++z) {
    std::int64_t got = out.invariants.dim(z, 0);
    std::int64_t want = out.expected.dim(z);
    if (got != want) {
      out.equal = false;
      out.discrepancy = "degree " + std::to_string(z) + ": invariants " + std::to_string(got) + ", expected " +
                        std::to_string(want);
      break;
    }
  }
  return out;
}

namespace {

std::string degree_list(std::vector<Bidegree> v) {
  std::sort(v.begin(), v.end());
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + "]";
}

}  // namespace

Comparison compare_modules(const ModulePresentation& m, const ModulePresentation& n, int bound) {
  if (!same_graded_ring(m.ring(), n.ring())) throw RingMismatch("compared modules live over different rings");
  ModulePresentation a = minimalize(m), b = minimalize(n);
  const bool graded = m.ring()->zgraded();
  Comparison out;
  std::vector<Bidegree> ga = a.generators(), gb = b.generators();
  std::sort(ga.begin(), ga.end());
  std::sort(gb.begin(), gb.end());
  if (ga != gb) {
    out.verdict = graded ? Verdict::distinct : Verdict::inconclusive;
    out.witness = "minimal generators " + degree_list(ga) + " vs " + degree_list(gb);
    if (graded) return out;
  }
  std::int64_t lo = std::min(lowest_generator_degree(a), lowest_generator_degree(b));
  HilbertTable ha = hilbert_function(a, lo, lo + bound), hb = hilbert_function(b, lo, lo + bound);
  for (std::int64_t z = lo; z <= lo + bound; ++z) {
    for (std::int64_t w = 0; w < ha.modulus; ++w) {
      if (ha.dim(z, w) != hb.dim(z, w)) {
        out.verdict = Verdict::distinct;
        out.witness = "dimension in degree (" + std::to_string(z) + ", " + std::to_string(w) + "): " +
                      std::to_string(ha.dim(z, w)) + " vs " + std::to_string(hb.dim(z, w));
        return out;
      }
    }
  }
  if (out.verdict == Verdict::inconclusive && !out.witness.empty()) return out;
  if (graded) {
    std::vector<Bidegree> ra = a.relation_degrees(), rb = b.relation_degrees();
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    if (ra != rb) {
      out.verdict = Verdict::distinct;
      out.witness = "minimal relations " + degree_list(ra) + " vs " + degree_list(rb);
      return out;
    }
  }
  if (a.rank() == 1) {
    std::vector<Polynomial> ia, ib;
    for (const auto& r : a.relations()) ia.push_back(component(r, 0, a.ring()->ambient()));
    for (const auto& r : b.relations()) ib.push_back(component(r, 0, b.ring()->ambient()));
    GradedRingPtr qa = a.ring()->quotient(ia), qb = b.ring()->quotient(ib);
    if (!(*qa == *qb)) {
      out.verdict = Verdict::distinct;
      out.witness = "annihilators of the cyclic generator differ";
      return out;
    }
  }
  out.verdict = Verdict::isomorphic_up_to_bound;
  out.witness.clear();
  return out;
}

}  // namespace stackdual
