#pragma once

#include <memory>
#include <string>
#include <vector>

#include "stackdual/groebner.hpp"
#include "stackdual/polynomial.hpp"
#include "stackdual/vec.hpp"

namespace stackdual {

/// Quotient C/I of an ambient bigraded polynomial ring by a bihomogeneous
/// ideal, with the reduced Gröbner basis of I cached at construction.
class GradedRing {
 public:
  GradedRing(RingPtr ambient, std::vector<Polynomial> ideal, std::string label = {});

  const RingPtr& ambient() const { return ambient_; }
  const std::vector<Polynomial>& ideal() const { return ideal_; }
  const GroebnerBasis& ideal_basis() const { return basis_; }
  const std::string& label() const { return label_; }
  std::int64_t modulus() const { return ambient_->modulus(); }
  bool zgraded() const { return ambient_->zgraded(); }
  std::size_t nvars() const { return ambient_->nvars(); }
  Bidegree zero_degree() const { return ambient_->zero_degree(); }
  /// Term-over-position order used for every stored module vector.
  const ModuleOrder& module_order() const { return module_order_; }

  /// No defining equations (the ideal is zero).
  bool is_polynomial_ring() const { return basis_.generators.empty(); }

  Polynomial reduce(const Polynomial& p) const;
  /// Componentwise normal form modulo the ideal.
  Vec reduce(const Vec& v) const;
  bool is_zero(const Polynomial& p) const { return reduce(p).is_zero(); }

  Polynomial variable(std::size_t i) const { return Polynomial::variable(ambient_, i); }
  Polynomial constant(const Scalar& c) const { return Polynomial::constant(ambient_, c); }

  std::shared_ptr<const GradedRing> with_modulus(std::int64_t modulus) const;
  /// C/(I + extra).
  std::shared_ptr<const GradedRing> quotient(const std::vector<Polynomial>& extra,
                                             std::string label = {}) const;

  bool operator==(const GradedRing& other) const;
  std::string to_string() const;

 private:
  RingPtr ambient_;
  std::vector<Polynomial> ideal_;
  std::string label_;
  GroebnerBasis basis_;
  ModuleOrder module_order_;
};

using GradedRingPtr = std::shared_ptr<const GradedRing>;

GradedRingPtr make_graded_ring(RingPtr ambient, std::vector<Polynomial> ideal = {},
                               std::string label = {});
bool same_graded_ring(const GradedRingPtr& a, const GradedRingPtr& b);

/// Finite homomorphism A -> B given by the images of A's variables.
class RingMorphism {
 public:
  /// Validates bidegrees of the images, that A's ideal maps into B's ideal
  /// and that B is module-finite over A (staircase of B/(images) below the
  /// guard degree; guard 0 selects the default of four times the largest
  /// degree among the images and ideal generators).
  RingMorphism(GradedRingPtr source, GradedRingPtr target, std::vector<Polynomial> images,
               int guard_degree = 0, std::string label = {});

  const GradedRingPtr& source() const { return source_; }
  const GradedRingPtr& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }
  const std::string& label() const { return label_; }
  int guard_degree() const { return guard_degree_; }

  /// f(p), reduced modulo the target ideal.
  Polynomial apply(const Polynomial& p) const;

  /// The identity morphism of a ring.
  static RingMorphism identity(const GradedRingPtr& ring);

 private:
  GradedRingPtr source_;
  GradedRingPtr target_;
  std::vector<Polynomial> images_;
  int guard_degree_ = 0;
  std::string label_;
};

/// Degree measure used for guards and filtrations: the Z-degree on Z-graded
/// rings, the standard degree otherwise.
std::int64_t filtration_degree(const Ring& ring, const Monomial& m);

}  // namespace stackdual
