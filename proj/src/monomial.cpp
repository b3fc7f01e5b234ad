#include "stackdual/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "stackdual/errors.hpp"

namespace stackdual {

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
  for (int e : exp_)
    if (e < 0) throw InvalidArgument("negative exponent");
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.exp_.at(index) = power;
  return m;
}

int Monomial::degree() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence,
                             std::vector<std::size_t> blocks)
    : kind_(kind), precedence_(std::move(precedence)), blocks_(std::move(blocks)) {
  std::vector<std::size_t> sorted = precedence_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw InvalidArgument("precedence is not a permutation of the variables");
  if (!blocks_.empty() &&
      std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0}) != precedence_.size())
    throw InvalidArgument("order blocks do not cover the variables");
}

MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return {OrderKind::degrevlex, std::move(p)};
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return {OrderKind::lex, std::move(p)};
}

int MonomialOrder::compare_range(const Monomial& a, const Monomial& b, std::size_t begin,
                                 std::size_t end) const {
  if (kind_ == OrderKind::lex) {
    for (std::size_t k = begin; k < end; ++k) {
      std::size_t v = precedence_[k];
      if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    }
    return 0;
  }
  int da = 0, db = 0;
  for (std::size_t k = begin; k < end; ++k) {
    da += a[precedence_[k]];
    db += b[precedence_[k]];
  }
  if (da != db) return da > db ? 1 : -1;
  // Reverse lexicographic: the smaller exponent in the last variable wins.
  for (std::size_t k = end; k-- > begin;) {
    std::size_t v = precedence_[k];
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (blocks_.empty()) return compare_range(a, b, 0, precedence_.size());
  std::size_t begin = 0;
  for (std::size_t len : blocks_) {
    if (int c = compare_range(a, b, begin, begin + len); c != 0) return c;
    begin += len;
  }
  return 0;
}

std::string MonomialOrder::name() const {
  return kind_ == OrderKind::lex ? "lex" : "degrevlex";
}

}  // namespace stackdual
