#include "thetaforge/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace thetaforge {

Polynomial Polynomial::constant(Coefficient v) {
  Polynomial p;
  if (v != 0) p.terms_.emplace(Monomial{}, std::move(v));
  return p;
}

Polynomial Polynomial::term(Monomial m, Coefficient v) {
  Polynomial p;
  if (v != 0) p.terms_.emplace(std::move(m), std::move(v));
  return p;
}

Polynomial Polynomial::c(int p) {
  if (p < 0) return zero();
  if (p == 0) return one();
  return term(Monomial::c(p), 1);
}

Polynomial Polynomial::t(int i) { return term(Monomial::t(i), 1); }

void Polynomial::add_term(const Monomial& m, const Coefficient& v) {
  if (v == 0) return;
  auto [it, inserted] = terms_.emplace(m, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, v] : o.terms_) add_term(m, v);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, v] : o.terms_) add_term(m, -v);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, -v);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  if (terms_.empty() || o.terms_.empty()) return r;
  for (const auto& [ma, va] : terms_)
    for (const auto& [mb, vb] : o.terms_) r.add_term(ma * mb, va * vb);
  return r;
}

Polynomial Polynomial::operator*(const Coefficient& v) const {
  Polynomial r;
  if (v == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * v);
  return r;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, v] : terms_)
    if (m.degree() != d) return false;
  return true;
}

bool Polynomial::has_c_variables() const {
  for (const auto& [m, v] : terms_)
    if (m.has_c()) return true;
  return false;
}

bool Polynomial::has_t_variables() const {
  for (const auto& [m, v] : terms_)
    if (m.has_t()) return true;
  return false;
}

int Polynomial::max_t_index() const {
  int r = 0;
  for (const auto& [m, v] : terms_)
    if (!m.t_exponents().empty()) r = std::max(r, m.t_exponents().back().first);
  return r;
}

Coefficient Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

Polynomial Polynomial::substitute_t(const std::map<int, Polynomial>& assignment) const {
  Polynomial result;
  for (const auto& [m, v] : terms_) {
    Polynomial factor = Polynomial::term(Monomial::from_parts(m.c_exponents(), {}), v);
    for (const auto& [i, e] : m.t_exponents()) {
      auto it = assignment.find(i);
      if (it == assignment.end()) throw std::invalid_argument("unassigned variable t_" + std::to_string(i));
      for (int rep = 0; rep < e; ++rep) factor = factor * it->second;
    }
    result += factor;
  }
  return result;
}

Polynomial Polynomial::set_t_zero() const {
  Polynomial r;
  for (const auto& [m, v] : terms_)
    if (!m.has_t()) r.terms_.emplace(m, v);
  return r;
}

Polynomial Polynomial::negate_t() const {
  Polynomial r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, m.t_degree() % 2 == 0 ? v : -v);
  return r;
}

Polynomial Polynomial::swap_t(int i, int j) const {
  if (i == j) return *this;
  Polynomial r;
  for (const auto& [m, v] : terms_) {
    Monomial::Exponents tpart;
    int ei = 0, ej = 0;
    for (const auto& [idx, e] : m.t_exponents()) {
      if (idx == i)
        ei = e;
      else if (idx == j)
        ej = e;
      else
        tpart.emplace_back(idx, e);
    }
    if (ej > 0) tpart.emplace_back(i, ej);
    if (ei > 0) tpart.emplace_back(j, ei);
    std::sort(tpart.begin(), tpart.end());
    r.add_term(Monomial::from_parts(m.c_exponents(), std::move(tpart)), v);
  }
  return r;
}

}  // namespace thetaforge
