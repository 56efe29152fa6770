#pragma once

#include <map>
#include <vector>

#include "thetaforge/bigint.hpp"
#include "thetaforge/monomial.hpp"

namespace thetaforge {

/// Exact sparse element of Z[c,t]. Terms are stored in the canonical
/// order of MonomialOrder and never with a zero coefficient, so two
/// polynomials are equal iff their term maps are identical. Values are
/// immutable in spirit: every operation returns a fresh polynomial, so
/// instances can be shared across threads freely.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Coefficient, MonomialOrder>;

  Polynomial() = default;

  static Polynomial zero() { return {}; }
  static Polynomial one() { return constant(1); }
  static Polynomial constant(Coefficient v);
  static Polynomial term(Monomial m, Coefficient v);
  static Polynomial c(int p);  // c_0 -> 1, negative index -> 0
  static Polynomial t(int i);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Coefficient& v) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  void add_term(const Monomial& m, const Coefficient& v);

  /// Largest graded degree among terms; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool has_c_variables() const;
  bool has_t_variables() const;
  int max_t_index() const;

  Coefficient coefficient(const Monomial& m) const;

  /// Substitute every t_i by the polynomial assigned to index i. Every
  /// t-index occurring in the polynomial must be assigned.
  Polynomial substitute_t(const std::map<int, Polynomial>& assignment) const;
  Polynomial set_t_zero() const;
  Polynomial negate_t() const;     // t_i -> -t_i
  Polynomial swap_t(int i, int j) const;

 private:
  TermMap terms_;
};

inline Polynomial operator*(const Coefficient& v, const Polynomial& p) { return p * v; }

}  // namespace thetaforge
