#include "stackdual/syzygy.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

#include "stackdual/errors.hpp"

namespace stackdual {

namespace {

std::vector<int> two_blocks(std::size_t rank, std::size_t count) {
  std::vector<int> blocks(rank + count, 0);
  std::fill(blocks.begin() + static_cast<std::ptrdiff_t>(rank), blocks.end(), 1);
  return blocks;
}

}  // namespace

ModuleGB lifted_basis(const GradedRing& ring, std::size_t rank, const std::vector<Vec>& gens) {
  const ModuleOrder& order = ring.module_order();
  std::vector<Vec> all;
  all.reserve(gens.size() + rank * ring.ideal_basis().generators.size());
  for (const auto& g : gens)
    if (!g.empty()) all.push_back(resort(g, order));
  for (const auto& f : ring.ideal_basis().generators)
    for (std::size_t i = 0; i < rank; ++i) all.push_back(from_polynomial(f, i, order));
  return ModuleGB(order, std::move(all));
}

Lifter::Lifter(GradedRingPtr ring, std::size_t rank, std::vector<Vec> elements, std::vector<Vec> base)
    : ring_(std::move(ring)),
      rank_(rank),
      count_(elements.size()),
      order_(ring_->ambient()->order(), two_blocks(rank, elements.size())) {
  std::vector<Vec> gens;
  const std::size_t n = ring_->nvars();
  for (std::size_t j = 0; j < count_; ++j) {
    std::vector<VecTerm> terms = elements[j];
    terms.push_back(VecTerm{Monomial(n), rank_ + j, Scalar(1)});
    gens.push_back(normalize(std::move(terms), order_));
  }
  for (auto& w : base)
    if (!w.empty()) gens.push_back(resort(std::move(w), order_));
  for (const auto& f : ring_->ideal_basis().generators)
    for (std::size_t i = 0; i < rank_ + count_; ++i) gens.push_back(from_polynomial(f, i, order_));
  gb_ = ModuleGB(order_, std::move(gens));
}

std::optional<std::vector<Polynomial>> Lifter::lift(const Vec& target) const {
  Vec r = gb_.reduce(target);
  for (const auto& t : r)
    if (t.comp < rank_) return std::nullopt;
  Vec coeffs = scale(slice_components(r, rank_, rank_ + count_, ring_->module_order()), Scalar(-1));
  auto polys = to_polynomials(coeffs, count_, ring_->ambient());
  for (auto& p : polys) p = ring_->reduce(p);
  return polys;
}

std::vector<Vec> Lifter::syzygies() const {
  std::vector<Vec> out;
  for (const auto& b : gb_.basis()) {
    if (b.front().comp < rank_) continue;
    Vec s = ring_->reduce(slice_components(b, rank_, rank_ + count_, ring_->module_order()));
    if (!s.empty()) out.push_back(std::move(s));
  }
  return out;
}

std::vector<Vec> syzygies(const GradedRingPtr& ring, std::size_t rank, const std::vector<Vec>& rows,
                          const std::vector<Bidegree>& generator_degrees) {
  std::vector<Bidegree> row_degrees;
  for (const auto& r : rows) {
    Vec reduced = ring->reduce(r);
    if (reduced.empty()) {
      row_degrees.push_back(ring->zero_degree());
      continue;
    }
    auto d = vec_degree(reduced, *ring->ambient(), generator_degrees);
    if (!d) throw Inhomogeneous("syzygies need bihomogeneous rows");
    row_degrees.push_back(*d);
  }
  Lifter lifter(ring, rank, rows);
  auto syz = lifter.syzygies();
  auto keep = minimal_generating_subset(ring, rows.size(), row_degrees, syz);
  std::vector<Vec> out;
  for (auto i : keep) out.push_back(syz[i]);
  return out;
}

std::vector<std::size_t> minimal_generating_subset(const GradedRingPtr& ring, std::size_t rank,
                                                   const std::vector<Bidegree>& generator_degrees,
                                                   const std::vector<Vec>& candidates,
                                                   const std::vector<Vec>& base) {
  const Ring& amb = *ring->ambient();
  std::vector<std::tuple<std::int64_t, int, std::size_t>> keys;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Vec r = ring->reduce(candidates[i]);
    if (r.empty()) continue;
    std::int64_t primary = 0;
    if (amb.zgraded()) {
      auto d = vec_degree(r, amb, generator_degrees);
      primary = d ? d->zdeg() : std::numeric_limits<std::int64_t>::max();
    }
    keys.emplace_back(primary, max_standard_degree(r), i);
  }
  std::sort(keys.begin(), keys.end());

  std::vector<Vec> span = base;
  std::vector<std::size_t> kept;
  ModuleGB gb = lifted_basis(*ring, rank, span);
  for (const auto& [primary, secondary, index] : keys) {
    if (gb.contains(candidates[index])) continue;
    kept.push_back(index);
    span.push_back(candidates[index]);
    gb = lifted_basis(*ring, rank, span);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace stackdual
