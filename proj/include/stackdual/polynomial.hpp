#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stackdual/bidegree.hpp"
#include "stackdual/monomial.hpp"
#include "stackdual/ring.hpp"

namespace stackdual {

/// Exact rational coefficient.
using Scalar = mpq_class;

std::string scalar_to_string(const Scalar& c);

struct Term {
  Monomial mono;
  Scalar coef;
};

/// Polynomial over Q in a given ambient ring. Terms are kept sorted in
/// decreasing order for the ring's monomial order, with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t index, int power = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial operator*(const Scalar& c) const;
  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }
  Polynomial pow(unsigned n) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;

  bool operator==(const Polynomial& q) const;

  /// Same terms re-sorted for a ring that differs only in its order or modulus.
  Polynomial rebased(RingPtr ring) const;

  /// Canonical DSL syntax, e.g. "x^2*y - (1/2)*z + 3".
  std::string to_string() const;

 private:
  void canonicalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Maximal term under `order`; throws ZeroPolynomial on 0.
Term leading_term(const Polynomial& p, const MonomialOrder& order);
inline Term leading_term(const Polynomial& p) { return leading_term(p, p.ring()->order()); }

/// Homogeneity verdict of a polynomial for the ring's bigrading.
struct HomogeneityResult {
  std::optional<Bidegree> degree;
  bool is_zero = false;
  bool homogeneous() const { return is_zero || degree.has_value(); }
};
HomogeneityResult bidegree_of(const Polynomial& p);

/// Replace variable i of p's ring by images[i] (all in one target ring).
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);

/// Move p into `target` by sending variable i to variable index_map[i].
Polynomial embed(const Polynomial& p, const RingPtr& target,
                 const std::vector<std::size_t>& index_map);

std::string monomial_to_string(const Ring& ring, const Monomial& m);

}  // namespace stackdual
