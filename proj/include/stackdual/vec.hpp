#pragma once

#include <optional>
#include <vector>

#include "stackdual/bidegree.hpp"
#include "stackdual/monomial.hpp"
#include "stackdual/polynomial.hpp"
#include "stackdual/ring.hpp"

namespace stackdual {

/// One term c * x^m * e_comp of a vector in a free module over an ambient ring.
struct VecTerm {
  Monomial mono;
  std::size_t comp = 0;
  Scalar coef;
};

/// Sparse vector, terms sorted decreasingly for some ModuleOrder, no zeros.
using Vec = std::vector<VecTerm>;

/// Order on module terms: component block first (lower block number is
/// larger), then the monomial, then position (lower index is larger). With a
/// single block this is term-over-position.
class ModuleOrder {
 public:
  ModuleOrder() = default;
  explicit ModuleOrder(MonomialOrder mono, std::vector<int> comp_block = {});

  int compare(const VecTerm& a, const VecTerm& b) const;
  int block(std::size_t comp) const {
    return comp < block_.size() ? block_[comp] : 0;
  }
  const MonomialOrder& monomial_order() const { return mono_; }

 private:
  MonomialOrder mono_;
  std::vector<int> block_;
};

/// Sort, merge equal terms and drop zeros.
Vec normalize(std::vector<VecTerm> terms, const ModuleOrder& order);
/// a + c * m * b.
Vec axpy(const Vec& a, const Scalar& c, const Monomial& m, const Vec& b, const ModuleOrder& order);
Vec add(const Vec& a, const Vec& b, const ModuleOrder& order);
Vec scale(const Vec& v, const Scalar& c);
/// p * v for a polynomial p of the same ambient ring.
Vec multiply(const Polynomial& p, const Vec& v, const ModuleOrder& order);
void make_monic(Vec& v);

Vec from_polynomial(const Polynomial& p, std::size_t comp, const ModuleOrder& order);
/// Component `comp` of v as a polynomial.
Polynomial component(const Vec& v, std::size_t comp, const RingPtr& ring);
std::vector<Polynomial> to_polynomials(const Vec& v, std::size_t rank, const RingPtr& ring);
Vec from_polynomials(const std::vector<Polynomial>& entries, const ModuleOrder& order);

/// Add `offset` to every component index (re-sorting under `order`).
Vec shift_components(const Vec& v, std::size_t offset, const ModuleOrder& order);
/// Keep components in [begin, end), renumbered from 0.
Vec slice_components(const Vec& v, std::size_t begin, std::size_t end, const ModuleOrder& order);
Vec resort(Vec v, const ModuleOrder& order);

/// Common bidegree of all terms given generator bidegrees; nullopt if the
/// vector is inhomogeneous or zero.
std::optional<Bidegree> vec_degree(const Vec& v, const Ring& ring,
                                   const std::vector<Bidegree>& generator_degrees);
bool is_homogeneous(const Vec& v, const Ring& ring, const std::vector<Bidegree>& generator_degrees);

/// Largest standard degree among the monomials of v.
int max_standard_degree(const Vec& v);

std::string vec_to_string(const Vec& v, const Ring& ring, std::size_t rank);

}  // namespace stackdual
