#include "stackdual/graded_ring.hpp"

#include <algorithm>
#include <map>

#include "stackdual/errors.hpp"

namespace stackdual {

std::int64_t filtration_degree(const Ring& ring, const Monomial& m) {
  return ring.zgraded() ? ring.degree_of(m).zdeg() : m.degree();
}

GradedRing::GradedRing(RingPtr ambient, std::vector<Polynomial> ideal, std::string label)
    : ambient_(std::move(ambient)),
      ideal_(std::move(ideal)),
      label_(std::move(label)),
      basis_(buchberger(ambient_, {})),
      module_order_(ambient_->order()) {
  std::erase_if(ideal_, [](const Polynomial& p) { return p.is_zero(); });
  for (const auto& f : ideal_) {
    if (!same_ring(f.ring(), ambient_)) throw RingMismatch("ideal generator in a foreign ring");
    if (!bidegree_of(f).homogeneous())
      throw Inhomogeneous("ideal generator " + f.to_string() + " is not bihomogeneous");
  }
  if (!ideal_.empty()) basis_ = buchberger(ambient_, ideal_);
}

Polynomial GradedRing::reduce(const Polynomial& p) const {
  if (is_polynomial_ring()) return p;
  return normal_form(p, basis_);
}

Vec GradedRing::reduce(const Vec& v) const {
  if (is_polynomial_ring() || v.empty()) return resort(v, module_order_);
  std::map<std::size_t, Vec> parts;
  for (const auto& t : v) parts[t.comp].push_back(VecTerm{t.mono, 0, t.coef});
  std::vector<VecTerm> out;
  for (auto& [comp, part] : parts) {
    Vec r = basis_.engine.reduce(part);
    for (auto& t : r) out.push_back(VecTerm{std::move(t.mono), comp, std::move(t.coef)});
  }
  return normalize(std::move(out), module_order_);
}

std::shared_ptr<const GradedRing> GradedRing::with_modulus(std::int64_t modulus) const {
  if (modulus == ambient_->modulus()) return std::make_shared<GradedRing>(*this);
  RingPtr amb = ambient_->with_modulus(modulus);
  std::vector<Polynomial> ideal;
  for (const auto& f : ideal_) ideal.push_back(f.rebased(amb));
  return std::make_shared<const GradedRing>(amb, std::move(ideal), label_);
}

std::shared_ptr<const GradedRing> GradedRing::quotient(const std::vector<Polynomial>& extra,
                                                       std::string label) const {
  std::vector<Polynomial> ideal = ideal_;
  ideal.insert(ideal.end(), extra.begin(), extra.end());
  return std::make_shared<const GradedRing>(ambient_, std::move(ideal),
                                            label.empty() ? label_ : std::move(label));
}

bool GradedRing::operator==(const GradedRing& other) const {
  if (!(*ambient_ == *other.ambient_)) return false;
  const auto& a = basis_.generators;
  const auto& b = other.basis_.generators;
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

std::string GradedRing::to_string() const {
  std::string out = ambient_->to_string();
  if (!ideal_.empty()) {
    out += "/(";
    for (std::size_t i = 0; i < ideal_.size(); ++i) {
      if (i) out += ", ";
      out += ideal_[i].to_string();
    }
    out += ")";
  }
  return out;
}

GradedRingPtr make_graded_ring(RingPtr ambient, std::vector<Polynomial> ideal, std::string label) {
  return std::make_shared<const GradedRing>(std::move(ambient), std::move(ideal), std::move(label));
}

bool same_graded_ring(const GradedRingPtr& a, const GradedRingPtr& b) {
  return a == b || (a && b && *a == *b);
}

RingMorphism::RingMorphism(GradedRingPtr source, GradedRingPtr target,
                           std::vector<Polynomial> images, int guard_degree, std::string label)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)),
      guard_degree_(guard_degree),
      label_(std::move(label)) {
  const Ring& a = *source_->ambient();
  const Ring& b = *target_->ambient();
  if (images_.size() != a.nvars())
    throw InvalidArgument("morphism needs one image per source variable");
  if (a.zgraded() != b.zgraded())
    throw InvalidArgument("source and target must both be Z-graded or both weight-only");
  if (a.modulus() != 1 && a.modulus() != b.modulus())
    throw InvalidArgument("source group order must be 1 or equal the target's");
  int max_degree = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!same_ring(images_[i].ring(), target_->ambient()))
      throw RingMismatch("image of " + a.name(i) + " is not in the target ring");
    images_[i] = target_->reduce(images_[i]);
    auto h = bidegree_of(images_[i]);
    if (!h.homogeneous())
      throw Inhomogeneous("image of " + a.name(i) + " is not bihomogeneous");
    Bidegree want = a.variable_degree(i);
    if (h.degree) {
      const Bidegree& got = *h.degree;
      bool zdeg_ok = got.zdeg() == want.zdeg();
      bool weight_ok = a.modulus() == 1 ? got.weight() == 0 : got.weight() == want.weight();
      if (!zdeg_ok || !weight_ok)
        throw Inhomogeneous("image of " + a.name(i) + " has bidegree " + got.to_string() +
                            ", expected " + want.to_string());
    }
    for (const auto& t : images_[i].terms())
      max_degree = std::max<int>(max_degree, static_cast<int>(filtration_degree(b, t.mono)));
  }
  for (const auto& g : source_->ideal()) {
    if (!target_->reduce(substitute(g, images_)).is_zero())
      throw IllDefinedMap("source relation " + g.to_string() + " does not map into the target ideal");
  }
  for (const auto& g : target_->ideal())
    for (const auto& t : g.terms())
      max_degree = std::max<int>(max_degree, static_cast<int>(filtration_degree(b, t.mono)));
  if (guard_degree_ <= 0) guard_degree_ = 4 * max_degree;

  // Module-finiteness: B/(images) must be finite-dimensional, with its whole
  // staircase below the guard degree.
  std::vector<Polynomial> fiber = target_->ideal();
  for (const auto& im : images_)
    if (!im.is_zero()) fiber.push_back(im);
  GroebnerBasis gb = buchberger(target_->ambient(), fiber);
  for (std::size_t v = 0; v < b.nvars(); ++v) {
    int power = -1;
    for (const auto& g : gb.generators) {
      const Monomial& lm = leading_term(g).mono;
      bool pure = true;
      for (std::size_t k = 0; k < lm.size(); ++k)
        if (k != v && lm[k] != 0) pure = false;
      if (pure && (power < 0 || lm[v] < power)) power = lm[v];
    }
    if (power < 0)
      throw NotModuleFinite("target is not module-finite over the source: no power of " + b.name(v) +
                            " lies in the fiber ideal");
    std::int64_t d = filtration_degree(b, Monomial::variable(b.nvars(), v, power - 1));
    if (d >= guard_degree_)
      throw NotModuleFinite("staircase of the fiber reaches the guard degree " +
                            std::to_string(guard_degree_));
  }
}

Polynomial RingMorphism::apply(const Polynomial& p) const {
  if (!same_ring(p.ring(), source_->ambient())) throw RingMismatch();
  return target_->reduce(substitute(p, images_));
}

RingMorphism RingMorphism::identity(const GradedRingPtr& ring) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring->nvars(); ++i) images.push_back(ring->variable(i));
  return RingMorphism(ring, ring, std::move(images), 0, "id");
}

}  // namespace stackdual
