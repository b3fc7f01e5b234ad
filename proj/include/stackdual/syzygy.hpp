#pragma once

#include <optional>
#include <vector>

#include "stackdual/graded_ring.hpp"

namespace stackdual {

/// Gröbner basis of the lifted system [elements | identity] together with
/// [base | 0] and the ring ideal on every component, over the ambient ring of
/// a (possibly quotient) GradedRing. The component blocks eliminate the
/// first `rank` coordinates, so the same basis answers membership/lifting
/// questions and yields the relation module among the elements.
class Lifter {
 public:
  Lifter(GradedRingPtr ring, std::size_t rank, std::vector<Vec> elements, std::vector<Vec> base = {});

  /// Coefficients a with target = sum a_j elements_j modulo base and the
  /// ideal, or nullopt when target is outside that span.
  std::optional<std::vector<Polynomial>> lift(const Vec& target) const;

  /// Generators of { a : sum a_j elements_j in base + I }, entries reduced
  /// modulo the ideal, zero vectors removed. Not minimalized.
  std::vector<Vec> syzygies() const;

  std::size_t rank() const { return rank_; }
  std::size_t count() const { return count_; }

 private:
  GradedRingPtr ring_;
  std::size_t rank_;
  std::size_t count_;
  ModuleOrder order_;
  ModuleGB gb_;
};

/// Syzygies of the given elements of a free module over a quotient ring,
/// minimalized when the elements are bihomogeneous.
std::vector<Vec> syzygies(const GradedRingPtr& ring, std::size_t rank, const std::vector<Vec>& rows,
                          const std::vector<Bidegree>& generator_degrees);

/// Gröbner basis of the submodule generated by `gens` plus the ideal on each
/// of the `rank` components, in the ring's standard module order.
ModuleGB lifted_basis(const GradedRing& ring, std::size_t rank, const std::vector<Vec>& gens);

/// Indices of a minimal subset of `candidates` that, together with `base`
/// and the ideal, generates the same submodule. Candidates are visited by
/// increasing degree (graded Nakayama), ties by index.
std::vector<std::size_t> minimal_generating_subset(const GradedRingPtr& ring, std::size_t rank,
                                                   const std::vector<Bidegree>& generator_degrees,
                                                   const std::vector<Vec>& candidates,
                                                   const std::vector<Vec>& base = {});

}  // namespace stackdual
