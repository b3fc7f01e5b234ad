#pragma once

#include <vector>

#include "stackdual/polynomial.hpp"
#include "stackdual/vec.hpp"

namespace stackdual {

/// Reduced Gröbner basis of a submodule of a free module over an ambient
/// polynomial ring (an ideal is the rank-one case). Built with Buchberger's
/// algorithm using the coprime-leading-term and chain criteria.
class ModuleGB {
 public:
  ModuleGB() = default;
  ModuleGB(ModuleOrder order, std::vector<Vec> generators);

  const std::vector<Vec>& basis() const { return basis_; }
  const ModuleOrder& order() const { return order_; }

  /// Full normal form (every term reduced).
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return reduce(v).empty(); }

  /// Leading term of the i-th basis element.
  const VecTerm& leading(std::size_t i) const { return basis_[i].front(); }
  /// True iff x^m e_comp is divisible by some leading term.
  bool is_leading_multiple(const Monomial& m, std::size_t comp) const;

 private:
  ModuleOrder order_;
  std::vector<Vec> basis_;
};

/// Full reduction of v by `divisors` (any list, need not be a basis).
Vec reduce_by(const Vec& v, const std::vector<Vec>& divisors, const ModuleOrder& order);

/// Reduced, monic Gröbner basis of an ideal, generators sorted increasingly by
/// leading monomial.
struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order;
  std::vector<Polynomial> generators;
  ModuleGB engine;
};

/// An empty generator list yields the zero ideal.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);
GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens);

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);
bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p);

}  // namespace stackdual
