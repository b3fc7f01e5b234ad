#include "stackdual/complexes.hpp"

#include <algorithm>

#include "stackdual/errors.hpp"
#include "stackdual/resource.hpp"

namespace stackdual {

std::vector<std::size_t> ChainComplex::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(t.rank());
  return out;
}

bool ChainComplex::all_free() const {
  for (const auto& t : terms)
    if (!t.is_free()) return false;
  return true;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ChainComplex koszul(const GradedRingPtr& ring, const std::vector<Polynomial>& seq) {
  const ModuleOrder& order = ring->module_order();
  std::vector<Bidegree> degs;
  std::vector<Polynomial> fs;
  for (const auto& f : seq) {
    Polynomial r = ring->reduce(f.rebased(ring->ambient()));
    if (r.is_zero()) throw InvalidArgument("Koszul sequence contains zero");
    auto h = bidegree_of(r);
    if (!h.degree) throw Inhomogeneous("Koszul entry " + r.to_string() + " is not bihomogeneous");
    degs.push_back(*h.degree);
    fs.push_back(r);
  }
  const std::size_t r = fs.size();
  ChainComplex c;
  c.ring = ring;
  std::vector<std::vector<std::vector<std::size_t>>> wedge(r + 1);
  for (std::size_t k = 0; k <= r; ++k) {
    std::vector<std::size_t> cur;
    subsets(r, k, 0, cur, wedge[k]);
    std::vector<Bidegree> gens;
    for (const auto& s : wedge[k]) {
      Bidegree d = ring->zero_degree();
      for (auto i : s) d += degs[i];
      gens.push_back(d);
    }
    c.terms.push_back(ModulePresentation::free(ring, std::move(gens)));
  }
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<Vec> matrix;
    for (const auto& s : wedge[k + 1]) {
      Vec col;
      for (std::size_t p = 0; p < s.size(); ++p) {
        std::vector<std::size_t> rest = s;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
        auto it = std::find(wedge[k].begin(), wedge[k].end(), rest);
        std::size_t idx = static_cast<std::size_t>(it - wedge[k].begin());
        Polynomial term = p % 2 == 0 ? fs[s[p]] : -fs[s[p]];
        col = add(col, from_polynomial(term, idx, order), order);
      }
      matrix.push_back(std::move(col));
    }
    c.differentials.emplace_back(c.terms[k + 1], c.terms[k], std::move(matrix), ring->zero_degree());
  }
  return c;
}

namespace {

bool same_up_to_shift(const ModulePresentation& a, const ModulePresentation& b) {
  if (a.rank() != b.rank()) return false;
  if (a.rank() == 0) return true;
  Bidegree shift = b.generators()[0] - a.generators()[0];
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (!(b.generators()[i] - a.generators()[i] == shift)) return false;
  return true;
}

bool same_matrix(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t k = 0; k < a[i].size(); ++k)
      if (!(a[i][k].mono == b[i][k].mono) || a[i][k].comp != b[i][k].comp || a[i][k].coef != b[i][k].coef)
        return false;
  }
  return true;
}

std::optional<int> detect_period(const ChainComplex& c) {
  const auto& d = c.differentials;
  for (int p = 1; p <= 2; ++p) {
    if (d.size() < static_cast<std::size_t>(p + 2)) continue;
    std::size_t k = d.size() - 1;
    if (same_matrix(d[k].matrix(), d[k - p].matrix()) &&
        same_up_to_shift(d[k].source(), d[k - p].source()) && same_up_to_shift(d[k].target(), d[k - p].target()))
      return p;
  }
  return std::nullopt;
}

/// Minimal generators of the syzygies among the columns of a free-target map.
std::vector<Vec> minimal_syzygies(const GradedRingPtr& ring, const ModulePresentation& source,
                                  const ModulePresentation& target, const std::vector<Vec>& columns) {
  Lifter lifter(ring, target.rank(), columns, target.relations());
  auto syz = lifter.syzygies();
  auto keep = minimal_generating_subset(ring, source.rank(), source.generators(), syz);
  std::vector<Vec> out;
  for (auto i : keep) out.push_back(syz[i]);
  return out;
}

}  // namespace

ChainComplex resolve(const ModulePresentation& m, int depth) {
  if (depth < 1) throw InvalidArgument("resolution depth must be at least 1");
  const GradedRingPtr& ring = m.ring();
  ModulePresentation min = minimalize(m);
  ChainComplex c;
  c.ring = ring;
  c.terms.push_back(ModulePresentation::free(ring, min.generators()));
  std::vector<Vec> columns = min.relations();
  std::vector<Bidegree> degrees = min.relation_degrees();
  for (int k = 1; k <= depth; ++k) {
    check_deadline();
    ModulePresentation term = ModulePresentation::free(ring, degrees);
    c.differentials.emplace_back(term, c.terms.back(), columns, ring->zero_degree());
    c.terms.push_back(term);
    if (term.rank() == 0) {
      c.finite = true;
      return c;
    }
    std::vector<Vec> next = minimal_syzygies(ring, term, c.terms[c.terms.size() - 2], columns);
    std::vector<Bidegree> next_degrees;
    for (const auto& v : next) {
      auto d = vec_degree(v, *ring->ambient(), term.generators());
      if (!d) throw Inhomogeneous("syzygy is not bihomogeneous");
      next_degrees.push_back(*d);
    }
    columns = std::move(next);
    degrees = std::move(next_degrees);
  }
  if (degrees.empty()) {
    c.finite = true;
  } else {
    c.finite = false;
    c.truncated_at = depth;
    c.period = detect_period(c);
  }
  return c;
}

ChainComplex hom_complex(const ChainComplex& c, const ModulePresentation& n) {
  if (c.direction != Direction::chain) throw InvalidArgument("hom_complex expects a chain complex");
  if (!c.all_free()) throw InvalidArgument("hom_complex needs free terms");
  if (!same_graded_ring(c.ring, n.ring())) throw RingMismatch();
  const GradedRing& ring = *c.ring;
  const ModuleOrder& order = ring.module_order();
  const std::size_t rn = n.rank();
  ChainComplex h;
  h.direction = Direction::cochain;
  h.ring = c.ring;
  h.finite = c.finite;
  h.truncated_at = c.truncated_at;
  for (const auto& t : c.terms) h.terms.push_back(hom_from_free(t.generators(), n));
  for (std::size_t i = 0; i < c.differentials.size(); ++i) {
    const auto& d = c.differentials[i].matrix();
    const std::size_t src = c.terms[i].rank();
    std::vector<std::vector<VecTerm>> cols(src * rn);
    for (std::size_t l = 0; l < d.size(); ++l)
      for (const auto& t : d[l])
        for (std::size_t j = 0; j < rn; ++j) cols[t.comp * rn + j].push_back(VecTerm{t.mono, l * rn + j, t.coef});
    std::vector<Vec> matrix;
    for (auto& col : cols) matrix.push_back(normalize(std::move(col), order));
    h.differentials.emplace_back(h.terms[i], h.terms[i + 1], std::move(matrix), ring.zero_degree());
  }
  return h;
}

ModulePresentation homology(const ChainComplex& c, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= c.terms.size())
    throw InvalidArgument("homology index " + std::to_string(i) + " is out of range");
  const std::size_t k = static_cast<std::size_t>(i);
  const ModulePresentation& term = c.terms[k];
  const ModuleMap* out = nullptr;
  const ModuleMap* in = nullptr;
  if (c.direction == Direction::chain) {
    if (k >= 1) out = &c.differentials[k - 1];
    if (k < c.differentials.size()) in = &c.differentials[k];
  } else {
    if (k < c.differentials.size()) out = &c.differentials[k];
    if (k >= 1) in = &c.differentials[k - 1];
  }
  Embedded ker = out ? kernel_of(term, out->target(), out->matrix())
                     : kernel_of(term, ModulePresentation(c.ring, {}), {});
  if (ker.module.rank() == 0) return ker.module;
  std::vector<Vec> base = term.relations();
  if (in)
    for (const auto& col : in->matrix())
      if (!col.empty()) base.push_back(col);
  auto rels = Lifter(c.ring, term.rank(), ker.inclusion, base).syzygies();
  return minimalize(ModulePresentation(c.ring, ker.module.generators(), std::move(rels)));
}

bool composes_to_zero(const ChainComplex& c) {
  const GradedRing& ring = *c.ring;
  for (std::size_t i = 0; i + 1 < c.differentials.size(); ++i) {
    const ModuleMap& first = c.direction == Direction::chain ? c.differentials[i + 1] : c.differentials[i];
    const ModuleMap& second = c.direction == Direction::chain ? c.differentials[i] : c.differentials[i + 1];
    ModuleGB gb = lifted_basis(ring, second.target().rank(), second.target().relations());
    for (const auto& col : first.matrix())
      if (!gb.contains(apply_matrix(ring, second.matrix(), col))) return false;
  }
  return true;
}

}  // namespace stackdual
