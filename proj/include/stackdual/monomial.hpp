#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace stackdual {

/// Exponent vector, one entry per ambient variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
  explicit Monomial(std::vector<int> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const { return exp_.size(); }
  int operator[](std::size_t i) const { return exp_[i]; }
  int& operator[](std::size_t i) { return exp_[i]; }
  const std::vector<int>& exponents() const { return exp_; }

  /// Standard (unweighted) total degree.
  int degree() const;
  bool is_one() const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> exp_;
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// True iff a divides b.
bool divides(const Monomial& a, const Monomial& b);
/// b / a; requires divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

enum class OrderKind { degrevlex, lex };

/// Multiplicative monomial order. `precedence` lists variable indices from the
/// largest variable down. Optional `blocks` split the precedence list into
/// consecutive groups compared one after another (an elimination order); each
/// group is compared with `kind`.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence,
                std::vector<std::size_t> blocks = {});

  static MonomialOrder degrevlex(std::size_t nvars);
  static MonomialOrder lex(std::size_t nvars);

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& precedence() const { return precedence_; }
  const std::vector<std::size_t>& blocks() const { return blocks_; }
  std::size_t nvars() const { return precedence_.size(); }
  std::string name() const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  int compare_range(const Monomial& a, const Monomial& b, std::size_t begin,
                    std::size_t end) const;

  OrderKind kind_ = OrderKind::degrevlex;
  std::vector<std::size_t> precedence_;
  std::vector<std::size_t> blocks_;
};

}  // namespace stackdual
