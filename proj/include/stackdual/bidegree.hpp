#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace stackdual {

/// Grading of an element: an integer Z-degree together with a weight in
/// Z/modulus. The weight is stored as a signed exponent `lambda` (the power
/// of a primitive root of unity the coaction multiplies by); comparisons use
/// only its residue, the exponent is kept for reporting.
class Bidegree {
 public:
  Bidegree() = default;
  Bidegree(std::int64_t zdeg, std::int64_t lambda, std::int64_t modulus);

  std::int64_t zdeg() const { return zdeg_; }
  std::int64_t lambda() const { return lambda_; }
  std::int64_t modulus() const { return modulus_; }
  /// Weight as a residue in [0, modulus).
  std::int64_t weight() const;

  Bidegree operator+(const Bidegree& other) const;
  Bidegree operator-(const Bidegree& other) const;
  Bidegree operator-() const;
  Bidegree& operator+=(const Bidegree& other) { return *this = *this + other; }

  /// Same degree, same residue; modulus must agree.
  bool operator==(const Bidegree& other) const;
  /// Total order on (zdeg, residue) used for canonical sorting.
  std::strong_ordering operator<=>(const Bidegree& other) const;

  /// Reinterpret under another modulus. The exponent is kept.
  Bidegree with_modulus(std::int64_t modulus) const { return {zdeg_, lambda_, modulus}; }

  /// "(zdeg, residue mod a)" plus the signed exponent when it differs.
  std::string to_string() const;

 private:
  std::int64_t zdeg_ = 0;
  std::int64_t lambda_ = 0;
  std::int64_t modulus_ = 1;
};

std::int64_t positive_mod(std::int64_t value, std::int64_t modulus);

}  // namespace stackdual
