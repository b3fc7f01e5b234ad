#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stackdual/graded_ring.hpp"
#include "stackdual/syzygy.hpp"

namespace stackdual {

/// Free module: the list of generator bidegrees. A generator of bidegree d
/// spans a copy of R(-d), so O(-n) has its generator at Z-degree n.
struct FreeModule {
  std::vector<Bidegree> degrees;
  std::size_t rank() const { return degrees.size(); }
};

/// Cokernel of a homogeneous relation matrix: generators with bidegrees and
/// relation columns stored as vectors (component = generator index). Entries
/// are kept reduced modulo the ring ideal and zero columns are dropped.
class ModulePresentation {
 public:
  ModulePresentation(GradedRingPtr ring, std::vector<Bidegree> generators,
                     std::vector<Vec> relations = {});

  static ModulePresentation free(GradedRingPtr ring, std::vector<Bidegree> degrees);
  /// R itself, generated in bidegree zero.
  static ModulePresentation ring_module(GradedRingPtr ring);
  /// R/(ideal) as a cyclic R-module.
  static ModulePresentation cyclic(GradedRingPtr ring, const std::vector<Polynomial>& ideal);

  const GradedRingPtr& ring() const { return ring_; }
  const std::vector<Bidegree>& generators() const { return generators_; }
  const std::vector<Vec>& relations() const { return relations_; }
  const std::vector<Bidegree>& relation_degrees() const { return relation_degrees_; }
  std::size_t rank() const { return generators_.size(); }
  bool is_free() const { return relations_.empty(); }
  FreeModule free_part() const { return {generators_}; }

  /// Entry (generator i, relation j) of the relation matrix.
  Polynomial entry(std::size_t i, std::size_t j) const;
  /// Same data over a ring that differs only in its group order.
  ModulePresentation rebased(GradedRingPtr ring) const;

  std::string to_string() const;

 private:
  GradedRingPtr ring_;
  std::vector<Bidegree> generators_;
  std::vector<Vec> relations_;
  std::vector<Bidegree> relation_degrees_;
};

/// Homogeneous map of presentations given on generators: column i is the
/// image of source generator i in the target's ambient coordinates.
class ModuleMap {
 public:
  /// Checks bihomogeneity of the declared shift and that source relations
  /// land in the target relations (throws IllDefinedMap otherwise).
  ModuleMap(ModulePresentation source, ModulePresentation target, std::vector<Vec> matrix,
            Bidegree shift);

  const ModulePresentation& source() const { return source_; }
  const ModulePresentation& target() const { return target_; }
  const std::vector<Vec>& matrix() const { return matrix_; }
  const Bidegree& shift() const { return shift_; }

 private:
  ModulePresentation source_;
  ModulePresentation target_;
  std::vector<Vec> matrix_;
  Bidegree shift_;
};

/// A presentation together with the images of its generators in some
/// ambient free module (the inclusion of a kernel, the Hom representation).
struct Embedded {
  ModulePresentation module;
  std::vector<Vec> inclusion;
};

struct MinimalizeResult {
  ModulePresentation module;
  /// Original indices of the surviving generators (they keep their meaning).
  std::vector<std::size_t> kept;
};

bool is_zero(const ModulePresentation& m);

MinimalizeResult minimalize_tracked(const ModulePresentation& m);
ModulePresentation minimalize(const ModulePresentation& m);

Embedded kernel(const ModuleMap& f);
/// ker(source free/cokernel -> target) without constructing a ModuleMap.
Embedded kernel_of(const ModulePresentation& source, const ModulePresentation& target,
                   const std::vector<Vec>& matrix);

/// Hom_R(M, N). The inclusion expresses each generator phi as the vector of
/// its values on M's generators: block i (N.rank() coordinates) is phi(e_i).
Embedded hom_embedded(const ModulePresentation& m, const ModulePresentation& n);
ModulePresentation hom_module(const ModulePresentation& m, const ModulePresentation& n);
/// Hom_R(F, N) for F free on the given degrees: N^rank with generator
/// (block i, j) in degree deg(n_j) - degrees_i.
ModulePresentation hom_from_free(const std::vector<Bidegree>& degrees, const ModulePresentation& n);

/// Image of v (coordinates on the source generators) under a matrix given by
/// its columns, reduced modulo the ring ideal.
Vec apply_matrix(const GradedRing& ring, const std::vector<Vec>& matrix, const Vec& v);

ModulePresentation tensor(const ModulePresentation& m, const ModulePresentation& n);
/// r-th exterior power of a free module (after minimalization).
ModulePresentation exterior_power(const ModulePresentation& m, std::size_t r);
ModulePresentation exterior_power(const GradedRingPtr& ring, const FreeModule& f, std::size_t r);
/// M(d): degree e of the twist is degree d+e of M, so generators move by -d.
ModulePresentation twist(const ModulePresentation& m, const Bidegree& d);
/// Same generators and relations over a quotient of the ring (M / I M).
ModulePresentation base_change(const ModulePresentation& m, const GradedRingPtr& quotient_ring);

/// Bigraded dimension table. On Z-graded rings the keys are (zdeg, weight)
/// of M itself; on weight-only rings they are (k, weight) for the associated
/// graded module of the filtration by powers of the maximal ideal at the
/// origin.
struct HilbertTable {
  bool zgraded = true;
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::int64_t modulus = 1;
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> dims;

  std::int64_t dim(std::int64_t degree, std::int64_t weight) const;
  /// Total over weights in one degree.
  std::int64_t dim(std::int64_t degree) const;
  bool operator==(const HilbertTable&) const = default;
};

HilbertTable hilbert_function(const ModulePresentation& m, std::int64_t zmin, std::int64_t zmax);
/// Table from the smallest generator Z-degree (or 0) up to zmax.
HilbertTable hilbert_function(const ModulePresentation& m, std::int64_t zmax);

struct InvariantPart {
  HilbertTable table;  // weight-0 column only
  /// Weight-0 basis monomials x^m e_i in the lowest nonzero degree.
  std::vector<std::string> low_degree_basis;
};

InvariantPart invariant_part(const ModulePresentation& m, std::int64_t bound);

/// N viewed as a module over A along a finite map f : A -> B. The source ring
/// is lifted to the target's group order so generator weights survive.
class FiniteRestriction {
 public:
  FiniteRestriction(const RingMorphism& f, const ModulePresentation& n);

  const ModulePresentation& module() const { return *module_; }
  /// Generators x^m e_i of N over A, in N's ambient coordinates.
  const std::vector<Vec>& generators() const { return generators_; }
  const GradedRingPtr& source_ring() const { return source_; }

  /// Coefficients c (polynomials of the lifted source ring) with
  /// element = sum f(c_l) generator_l in N.
  std::vector<Polynomial> coordinates(const Vec& element) const;

 private:
  GradedRingPtr source_;
  GradedRingPtr target_;
  RingPtr combined_;
  std::size_t rank_ = 0;
  ModuleOrder order_;
  ModuleGB gb_;
  std::vector<Vec> generators_;
  std::optional<ModulePresentation> module_;
};

ModulePresentation restrict_along(const RingMorphism& f, const ModulePresentation& n);

}  // namespace stackdual
