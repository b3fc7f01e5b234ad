#include "stackdual/vec.hpp"

#include <algorithm>

#include "stackdual/errors.hpp"
#include "stackdual/resource.hpp"

namespace stackdual {

ModuleOrder::ModuleOrder(MonomialOrder mono, std::vector<int> comp_block)
    : mono_(std::move(mono)), block_(std::move(comp_block)) {}

int ModuleOrder::compare(const VecTerm& a, const VecTerm& b) const {
  int ba = block(a.comp), bb = block(b.comp);
  if (ba != bb) return ba < bb ? 1 : -1;
  if (int c = mono_.compare(a.mono, b.mono); c != 0) return c;
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

Vec normalize(std::vector<VecTerm> terms, const ModuleOrder& order) {
  std::sort(terms.begin(), terms.end(),
            [&](const VecTerm& a, const VecTerm& b) { return order.compare(a, b) > 0; });
  Vec out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono)
      out.back().coef += t.coef;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const VecTerm& t) { return t.coef == 0; });
  return out;
}

Vec axpy(const Vec& a, const Scalar& c, const Monomial& m, const Vec& b, const ModuleOrder& order) {
  Vec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  bool trivial_m = m.is_one();
  while (i < a.size() || j < b.size()) {
    VecTerm bj;
    if (j < b.size()) {
      bj.mono = trivial_m ? b[j].mono : b[j].mono * m;
      bj.comp = b[j].comp;
    }
    int cmp = i == a.size() ? -1 : j == b.size() ? 1 : order.compare(a[i], bj);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      bj.coef = b[j].coef * c;
      out.push_back(std::move(bj));
      ++j;
    } else {
      Scalar s = a[i].coef + b[j].coef * c;
      if (s != 0) {
        bj.coef = std::move(s);
        out.push_back(std::move(bj));
      }
      ++i;
      ++j;
    }
  }
  check_terms(out.size());
  return out;
}

Vec add(const Vec& a, const Vec& b, const ModuleOrder& order) {
  if (b.empty()) return a;
  return axpy(a, Scalar(1), Monomial(b.front().mono.size()), b, order);
}

Vec scale(const Vec& v, const Scalar& c) {
  if (c == 0) return {};
  Vec out = v;
  for (auto& t : out) t.coef *= c;
  return out;
}

Vec multiply(const Polynomial& p, const Vec& v, const ModuleOrder& order) {
  Vec out;
  for (const auto& t : p.terms()) out = axpy(out, t.coef, t.mono, v, order);
  return out;
}

void make_monic(Vec& v) {
  if (v.empty() || v.front().coef == 1) return;
  Scalar inv = 1 / v.front().coef;
  for (auto& t : v) t.coef *= inv;
}

Vec from_polynomial(const Polynomial& p, std::size_t comp, const ModuleOrder& order) {
  std::vector<VecTerm> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back(VecTerm{t.mono, comp, t.coef});
  return normalize(std::move(terms), order);
}

Polynomial component(const Vec& v, std::size_t comp, const RingPtr& ring) {
  std::vector<Term> terms;
  for (const auto& t : v)
    if (t.comp == comp) terms.push_back(Term{t.mono, t.coef});
  return Polynomial(ring, std::move(terms));
}

std::vector<Polynomial> to_polynomials(const Vec& v, std::size_t rank, const RingPtr& ring) {
  std::vector<std::vector<Term>> buckets(rank);
  for (const auto& t : v) {
    if (t.comp >= rank) throw InvalidArgument("vector component out of range");
    buckets[t.comp].push_back(Term{t.mono, t.coef});
  }
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& b : buckets) out.emplace_back(ring, std::move(b));
  return out;
}

Vec from_polynomials(const std::vector<Polynomial>& entries, const ModuleOrder& order) {
  std::vector<VecTerm> terms;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (const auto& t : entries[i].terms()) terms.push_back(VecTerm{t.mono, i, t.coef});
  return normalize(std::move(terms), order);
}

Vec shift_components(const Vec& v, std::size_t offset, const ModuleOrder& order) {
  std::vector<VecTerm> terms = v;
  for (auto& t : terms) t.comp += offset;
  return normalize(std::move(terms), order);
}

Vec slice_components(const Vec& v, std::size_t begin, std::size_t end, const ModuleOrder& order) {
  std::vector<VecTerm> terms;
  for (const auto& t : v)
    if (t.comp >= begin && t.comp < end) terms.push_back(VecTerm{t.mono, t.comp - begin, t.coef});
  return normalize(std::move(terms), order);
}

Vec resort(Vec v, const ModuleOrder& order) { return normalize(std::move(v), order); }

std::optional<Bidegree> vec_degree(const Vec& v, const Ring& ring,
                                   const std::vector<Bidegree>& generator_degrees) {
  if (v.empty()) return std::nullopt;
  Bidegree d = ring.degree_of(v.front().mono) + generator_degrees.at(v.front().comp);
  for (const auto& t : v)
    if (!(ring.degree_of(t.mono) + generator_degrees.at(t.comp) == d)) return std::nullopt;
  return d;
}

bool is_homogeneous(const Vec& v, const Ring& ring, const std::vector<Bidegree>& generator_degrees) {
  return v.empty() || vec_degree(v, ring, generator_degrees).has_value();
}

int max_standard_degree(const Vec& v) {
  int d = 0;
  for (const auto& t : v) d = std::max(d, t.mono.degree());
  return d;
}

std::string vec_to_string(const Vec& v, const Ring& ring, std::size_t rank) {
  RingPtr shared(&ring, [](const Ring*) {});
  auto entries = to_polynomials(v, rank, shared);
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ", ";
    out += entries[i].to_string();
  }
  return out + ")";
}

}  // namespace stackdual
