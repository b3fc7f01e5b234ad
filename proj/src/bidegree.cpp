#include "stackdual/bidegree.hpp"

#include "stackdual/errors.hpp"

namespace stackdual {

std::int64_t positive_mod(std::int64_t value, std::int64_t modulus) {
  std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

Bidegree::Bidegree(std::int64_t zdeg, std::int64_t lambda, std::int64_t modulus)
    : zdeg_(zdeg), lambda_(lambda), modulus_(modulus) {
  if (modulus < 1) throw InvalidArgument("group order must be at least 1");
}

std::int64_t Bidegree::weight() const { return positive_mod(lambda_, modulus_); }

Bidegree Bidegree::operator+(const Bidegree& other) const {
  if (modulus_ != other.modulus_) throw InvalidArgument("bidegree moduli differ");
  return {zdeg_ + other.zdeg_, lambda_ + other.lambda_, modulus_};
}

Bidegree Bidegree::operator-(const Bidegree& other) const { return *this + (-other); }

Bidegree Bidegree::operator-() const { return {-zdeg_, -lambda_, modulus_}; }

bool Bidegree::operator==(const Bidegree& other) const {
  return modulus_ == other.modulus_ && zdeg_ == other.zdeg_ && weight() == other.weight();
}

std::strong_ordering Bidegree::operator<=>(const Bidegree& other) const {
  if (auto c = zdeg_ <=> other.zdeg_; c != 0) return c;
  if (auto c = weight() <=> other.weight(); c != 0) return c;
  return modulus_ <=> other.modulus_;
}

std::string Bidegree::to_string() const {
  std::string out = "(" + std::to_string(zdeg_) + ", " + std::to_string(weight()) + " mod " +
                    std::to_string(modulus_);
  if (lambda_ != weight()) out += ", lambda^" + std::to_string(lambda_);
  return out + ")";
}

}  // namespace stackdual
