#include "stackdual/polynomial.hpp"

#include <algorithm>

#include "stackdual/errors.hpp"
#include "stackdual/resource.hpp"

namespace stackdual {

std::string scalar_to_string(const Scalar& c) { return c.get_str(); }

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.mono.size() != ring_->nvars()) throw InvalidArgument("monomial length mismatch");
  canonicalize();
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  std::size_t n = ring->nvars();
  return Polynomial(std::move(ring), {Term{Monomial(n), c}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, int power) {
  std::size_t n = ring->nvars();
  return Polynomial(std::move(ring), {Term{Monomial::variable(n, index, power), Scalar(1)}});
}

void Polynomial::canonicalize() {
  const auto& ord = ring_->order();
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono)
      merged.back().coef += t.coef;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == 0; });
  terms_ = std::move(merged);
  check_terms(terms_.size());
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

namespace {

void require_same(const Polynomial& p, const Polynomial& q) {
  if (!same_ring(p.ring(), q.ring())) throw RingMismatch();
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, const Scalar& sb,
                        const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : ord.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(Term{b[j].mono, b[j].coef * sb});
      ++j;
    } else {
      Scalar s = a[i].coef + b[j].coef * sb;
      if (s != 0) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  check_terms(out.size());
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& q) const {
  require_same(*this, q);
  Polynomial r(ring_);
  r.terms_ = merge(terms_, q.terms_, Scalar(1), ring_->order());
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
  require_same(*this, q);
  Polynomial r(ring_);
  r.terms_ = merge(terms_, q.terms_, Scalar(-1), ring_->order());
  return r;
}

Polynomial Polynomial::operator-() const { return *this * Scalar(-1); }

Polynomial Polynomial::operator*(const Scalar& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order of the terms.
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, t.coef * c});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
  require_same(*this, q);
  Polynomial r(ring_);
  for (const auto& t : q.terms_)
    r.terms_ = merge(r.terms_, times_term(t.mono, t.coef).terms_, Scalar(1), ring_->order());
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(ring_, Scalar(1));
  Polynomial base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& q) const {
  if (!same_ring(ring_, q.ring_) || terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == q.terms_[i].mono) || terms_[i].coef != q.terms_[i].coef) return false;
  return true;
}

Polynomial Polynomial::rebased(RingPtr ring) const {
  if (ring->nvars() != ring_->nvars()) throw RingMismatch("cannot rebase across variable counts");
  return Polynomial(std::move(ring), terms_);
}

std::string monomial_to_string(const Ring& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coef;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    bool integral = c.get_den() == 1;
    std::string cs = integral ? c.get_str() : "(" + c.get_str() + ")";
    if (t.mono.is_one())
      out += cs;
    else if (c == 1)
      out += monomial_to_string(*ring_, t.mono);
    else
      out += cs + "*" + monomial_to_string(*ring_, t.mono);
  }
  return out;
}

Term leading_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw ZeroPolynomial();
  const auto& ts = p.terms();
  auto best = ts.begin();
  for (auto it = ts.begin() + 1; it != ts.end(); ++it)
    if (order.compare(it->mono, best->mono) > 0) best = it;
  return *best;
}

HomogeneityResult bidegree_of(const Polynomial& p) {
  HomogeneityResult r;
  if (p.is_zero()) {
    r.is_zero = true;
    return r;
  }
  Bidegree d = p.ring()->degree_of(p.terms().front().mono);
  for (const auto& t : p.terms())
    if (!(p.ring()->degree_of(t.mono) == d)) return r;
  r.degree = d;
  return r;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (images.size() != p.ring()->nvars()) throw InvalidArgument("wrong number of images");
  if (images.empty()) throw InvalidArgument("substitution needs a target ring");
  const RingPtr& target = images.front().ring();
  for (const auto& im : images)
    if (!same_ring(im.ring(), target)) throw RingMismatch();
  Polynomial result(target);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coef);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i] > 0) term = term * images[i].pow(static_cast<unsigned>(t.mono[i]));
    result += term;
  }
  return result;
}

Polynomial embed(const Polynomial& p, const RingPtr& target,
                 const std::vector<std::size_t>& index_map) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.mono.size(); ++i) m[index_map.at(i)] += t.mono[i];
    terms.push_back(Term{std::move(m), t.coef});
  }
  return Polynomial(target, std::move(terms));
}

}  // namespace stackdual
