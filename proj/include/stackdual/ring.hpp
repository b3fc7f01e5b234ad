#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stackdual/bidegree.hpp"
#include "stackdual/monomial.hpp"

namespace stackdual {

/// Ambient polynomial ring Q[x_1..x_n]: variable names, per-variable
/// bidegrees, the group order a and the monomial order. Rings that are not
/// Z-graded (`zgraded == false`) carry zero Z-degree on every variable and are
/// graded by weight only.
class Ring {
 public:
  struct Variable {
    std::string name;
    std::int64_t zdeg = 1;
    std::int64_t weight = 0;
  };

  Ring(std::vector<Variable> variables, std::int64_t modulus, bool zgraded,
       std::optional<MonomialOrder> order = std::nullopt);

  std::size_t nvars() const { return variables_.size(); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::string& name(std::size_t i) const { return variables_[i].name; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::int64_t modulus() const { return modulus_; }
  bool zgraded() const { return zgraded_; }
  const MonomialOrder& order() const { return order_; }

  Bidegree variable_degree(std::size_t i) const;
  Bidegree degree_of(const Monomial& m) const;
  Bidegree zero_degree() const { return {0, 0, modulus_}; }

  std::shared_ptr<const Ring> with_order(MonomialOrder order) const;
  std::shared_ptr<const Ring> with_modulus(std::int64_t modulus) const;

  bool operator==(const Ring& other) const;

  /// "Q[x,y]" plus grading data.
  std::string to_string() const;

 private:
  std::vector<Variable> variables_;
  std::int64_t modulus_;
  bool zgraded_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<Ring::Variable> variables, std::int64_t modulus = 1,
                  bool zgraded = true, std::optional<MonomialOrder> order = std::nullopt);

/// Compatibility test used by every binary operation.
bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace stackdual
