#include "stackdual/ring.hpp"

#include <set>

#include "stackdual/errors.hpp"

namespace stackdual {

Ring::Ring(std::vector<Variable> variables, std::int64_t modulus, bool zgraded,
           std::optional<MonomialOrder> order)
    : variables_(std::move(variables)),
      modulus_(modulus),
      zgraded_(zgraded),
      order_(order ? *order : MonomialOrder::degrevlex(variables_.size())) {
  if (modulus_ < 1) throw InvalidArgument("group order must be at least 1");
  if (order_.nvars() != variables_.size())
    throw InvalidArgument("monomial order does not match the variable count");
  std::set<std::string> seen;
  for (auto& v : variables_) {
    if (!seen.insert(v.name).second) throw InvalidArgument("duplicate variable " + v.name);
    if (v.weight < 0 || v.weight >= modulus_)
      throw InvalidArgument("weight of " + v.name + " outside [0," + std::to_string(modulus_) + ")");
    if (!zgraded_) v.zdeg = 0;
    if (zgraded_ && v.zdeg < 1)
      throw InvalidArgument("Z-degree of " + v.name + " must be positive");
  }
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i].name == name) return i;
  return std::nullopt;
}

Bidegree Ring::variable_degree(std::size_t i) const {
  return {variables_[i].zdeg, variables_[i].weight, modulus_};
}

Bidegree Ring::degree_of(const Monomial& m) const {
  std::int64_t z = 0, w = 0;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    z += m[i] * variables_[i].zdeg;
    w += m[i] * variables_[i].weight;
  }
  return {z, w, modulus_};
}

std::shared_ptr<const Ring> Ring::with_order(MonomialOrder order) const {
  return std::make_shared<Ring>(variables_, modulus_, zgraded_, std::move(order));
}

std::shared_ptr<const Ring> Ring::with_modulus(std::int64_t modulus) const {
  auto vars = variables_;
  for (auto& v : vars) v.weight = positive_mod(v.weight, modulus);
  return std::make_shared<Ring>(std::move(vars), modulus, zgraded_, order_);
}

bool Ring::operator==(const Ring& other) const {
  if (modulus_ != other.modulus_ || zgraded_ != other.zgraded_ || !(order_ == other.order_) ||
      variables_.size() != other.variables_.size())
    return false;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const auto& a = variables_[i];
    const auto& b = other.variables_[i];
    if (a.name != b.name || a.zdeg != b.zdeg || a.weight != b.weight) return false;
  }
  return true;
}

std::string Ring::to_string() const {
  std::string out = "Q[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) out += ",";
    out += variables_[i].name;
  }
  return out + "]";
}

RingPtr make_ring(std::vector<Ring::Variable> variables, std::int64_t modulus, bool zgraded,
                  std::optional<MonomialOrder> order) {
  return std::make_shared<const Ring>(std::move(variables), modulus, zgraded, std::move(order));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace stackdual
