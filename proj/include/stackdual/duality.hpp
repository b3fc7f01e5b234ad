#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stackdual/complexes.hpp"

namespace stackdual {

struct ExtSummary {
  bool is_zero = true;
  std::size_t generators = 0;
};

struct DualityReport {
  std::string description;
  std::optional<ModulePresentation> module;
  std::vector<Bidegree> generator_bidegrees;
  /// Weights of the minimal generators modulo the maximal ideal.
  std::vector<std::int64_t> fiber_representation;
  bool is_free_rank_one = false;
  /// All computed higher Ext modules vanish (certified up to `depth`).
  bool is_sheaf = true;
  std::map<int, ExtSummary> ext_profile;
  int depth = 0;
  std::vector<std::string> notes;
};

struct CMReport {
  std::optional<int> codimension;
  std::optional<int> expected_codimension;
  std::map<int, ExtSummary> ext_profile;
  bool cohen_macaulay = false;
  bool gorenstein = false;
  bool inconclusive = false;
  std::vector<std::string> notes;
};

enum class Verdict { isomorphic_up_to_bound, distinct, inconclusive };
std::string to_string(Verdict v);

struct Comparison {
  Verdict verdict = Verdict::inconclusive;
  std::string witness;
};

struct PushforwardResult {
  bool equal = false;
  std::string discrepancy;
  HilbertTable invariants;
  HilbertTable expected;
};

/// f^! M = Hom_A(B, M) with its B-module structure, plus Ext^i_A(B, M) for
/// i = 1..depth.
DualityReport finite_shriek(const RingMorphism& f, const ModulePresentation& m, int depth);

/// Ext^i_C(C/I, omega) for i = 0..imax as modules over C/I.
std::vector<std::pair<int, ModulePresentation>> ext_dualizing(const GradedRingPtr& c,
                                                              const std::vector<Polynomial>& ideal,
                                                              const ModulePresentation& omega, int imax);

/// omega ⊗ det (I/I^2)^dual for a regular sequence, cross-checked against Ext^r.
DualityReport lci_dualizing(const GradedRingPtr& c, const std::vector<Polynomial>& seq,
                            const ModulePresentation& omega, int bound = 12);

/// Free of rank one generated in the sum of the variable bidegrees.
ModulePresentation canonical_module(const GradedRingPtr& c);

CMReport cm_gorenstein_check(const GradedRingPtr& c, const std::vector<Polynomial>& ideal, int imax);

/// Krull dimension of C/I from the leading-monomial ideal (C a polynomial ring).
int krull_dimension(const GradedRingPtr& c, const std::vector<Polynomial>& ideal);

PushforwardResult pushforward_check(const RingMorphism& f, const ModulePresentation& omega_b,
                                    const ModulePresentation& omega_a, int bound);

Comparison compare_modules(const ModulePresentation& m, const ModulePresentation& n, int bound);

/// Generators and Hilbert table range used by reports and comparisons.
std::int64_t lowest_generator_degree(const ModulePresentation& m);

}  // namespace stackdual
