#pragma once

#include <random>
#include <string>
#include <vector>

#include "stackdual/duality.hpp"
#include "stackdual/session.hpp"

namespace testing {

using namespace stackdual;

struct V {
  std::string name;
  std::int64_t zdeg = 1;
  std::int64_t weight = 0;
};

inline RingPtr ring(std::vector<V> vars, std::int64_t a = 1, bool zgraded = true,
                    OrderKind kind = OrderKind::degrevlex) {
  std::vector<Ring::Variable> out;
  for (auto& v : vars) out.push_back({v.name, zgraded ? v.zdeg : 0, v.weight});
  std::optional<MonomialOrder> order;
  if (kind == OrderKind::lex) order = MonomialOrder::lex(out.size());
  return make_ring(std::move(out), a, zgraded, order);
}

inline Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

inline std::vector<Polynomial> Ps(const RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (auto& t : texts) out.push_back(P(r, t));
  return out;
}

inline GradedRingPtr quotient(const RingPtr& r, const std::vector<std::string>& ideal = {}) {
  return make_graded_ring(r, Ps(r, ideal));
}

/// Random polynomial with small integer coefficients and total degree <= maxdeg.
inline Polynomial random_poly(std::mt19937& rng, const RingPtr& r, int terms, int maxdeg) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<std::size_t> var(0, r->nvars() - 1);
  std::uniform_int_distribution<int> deg(0, maxdeg);
  Polynomial p(r);
  for (int k = 0; k < terms; ++k) {
    Monomial m(r->nvars());
    int d = deg(rng);
    for (int e = 0; e < d; ++e) m[var(rng)] += 1;
    p += Polynomial(r, {{m, Scalar(coef(rng))}});
  }
  return p;
}

/// Homogeneous polynomial of standard degree d (every variable of degree one).
inline Polynomial random_form(std::mt19937& rng, const RingPtr& r, int terms, int d) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::size_t> var(0, r->nvars() - 1);
  Polynomial p(r);
  for (int k = 0; k < terms; ++k) {
    Monomial m(r->nvars());
    for (int e = 0; e < d; ++e) m[var(rng)] += 1;
    p += Polynomial(r, {{m, Scalar(coef(rng))}});
  }
  return p;
}

inline Vec vec(const GradedRingPtr& r, const std::vector<Polynomial>& entries) {
  return from_polynomials(entries, r->module_order());
}

inline std::vector<std::int64_t> column(const HilbertTable& t, std::int64_t weight) {
  std::vector<std::int64_t> out;
  for (auto d = t.lo; d <= t.hi; ++d) out.push_back(t.dim(d, weight));
  return out;
}

inline std::vector<std::int64_t> totals(const HilbertTable& t) {
  std::vector<std::int64_t> out;
  for (auto d = t.lo; d <= t.hi; ++d) out.push_back(t.dim(d));
  return out;
}

}  // namespace testing
