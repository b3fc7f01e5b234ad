#pragma once

#include <optional>
#include <vector>

#include "stackdual/gmodule.hpp"

namespace stackdual {

enum class Direction { chain, cochain };

/// Bounded complex of presentations. For a chain complex differential i maps
/// term i+1 to term i; for a cochain complex it maps term i to term i+1.
struct ChainComplex {
  Direction direction = Direction::chain;
  GradedRingPtr ring;
  std::vector<ModulePresentation> terms;
  std::vector<ModuleMap> differentials;
  /// A zero term was reached (resolutions) or the complex is bounded by
  /// construction.
  bool finite = true;
  std::optional<int> truncated_at;
  /// Detected period of the differentials (resolutions only), reported.
  std::optional<int> period;

  std::size_t length() const { return terms.size(); }
  std::vector<std::size_t> ranks() const;
  bool all_free() const;
};

ChainComplex koszul(const GradedRingPtr& ring, const std::vector<Polynomial>& seq);

/// Minimal free resolution F_depth -> ... -> F_0 -> M.
ChainComplex resolve(const ModulePresentation& m, int depth);

/// Cochain complex Hom(C_i, N) with transposed differentials.
ChainComplex hom_complex(const ChainComplex& c, const ModulePresentation& n);

ModulePresentation homology(const ChainComplex& c, int i);

/// Every composite of consecutive differentials vanishes in the target.
bool composes_to_zero(const ChainComplex& c);

}  // namespace stackdual
