#include "thetaforge/monomial.hpp"

#include <stdexcept>

namespace thetaforge {

namespace {

void validate(const Monomial::Exponents& part, bool is_c) {
  int prev = 0;
  for (const auto& [idx, exp] : part) {
    if (idx <= prev) throw std::invalid_argument("monomial indices must be strictly increasing and positive");
    if (exp <= 0) throw std::invalid_argument("monomial exponents must be positive");
    (void)is_c;
    prev = idx;
  }
}

Monomial::Exponents merge(const Monomial::Exponents& a, const Monomial::Exponents& b) {
  Monomial::Exponents out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  return out;
}

// Descending lexicographic comparison of dense exponent vectors.
// Returns <0 if a's vector is lexicographically larger (a first).
int lex_cmp(const Monomial::Exponents& a, const Monomial::Exponents& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      if (a[i].second != b[j].second) return a[i].second > b[j].second ? -1 : 1;
      ++i, ++j;
    } else if (a[i].first < b[j].first) {
      return -1;  // a has a positive exponent at an earlier index
    } else {
      return 1;
    }
  }
  if (i < a.size()) return -1;
  if (j < b.size()) return 1;
  return 0;
}

}  // namespace

Monomial Monomial::c(int p, int e) {
  if (p < 0) throw std::invalid_argument("c-index must be nonnegative");
  Monomial m;
  if (p > 0 && e > 0) m.c_ = {{p, e}};
  return m;
}

Monomial Monomial::t(int i, int e) {
  if (i <= 0) throw std::invalid_argument("t-index must be positive");
  Monomial m;
  if (e > 0) m.t_ = {{i, e}};
  return m;
}

Monomial Monomial::from_parts(Exponents c_part, Exponents t_part) {
  validate(c_part, true);
  validate(t_part, false);
  Monomial m;
  m.c_ = std::move(c_part);
  m.t_ = std::move(t_part);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [p, e] : c_) d += p * e;
  for (const auto& [i, e] : t_) d += e;
  return d;
}

int Monomial::c_degree() const {
  int d = 0;
  for (const auto& [p, e] : c_) d += p * e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.c_ = merge(c_, other.c_);
  m.t_ = merge(t_, other.t_);
  return m;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const int cc = lex_cmp(a.c_exponents(), b.c_exponents());
  if (cc != 0) return cc < 0;
  return lex_cmp(a.t_exponents(), b.t_exponents()) < 0;
}

}  // namespace thetaforge
