#pragma once

#include <utility>
#include <vector>

namespace thetaforge {

/// A power product in the variables c_1,c_2,... and t_1,t_2,...
///
/// Exponent lists are kept sorted by variable index and never contain a
/// zero exponent; c_0 is the ring unit and is never stored. The graded
/// degree assigns deg c_p = p and deg t_i = 1.
class Monomial {
 public:
  using Exponents = std::vector<std::pair<int, int>>;  // (index, exponent)

  Monomial() = default;

  static Monomial c(int p, int e = 1);
  static Monomial t(int i, int e = 1);
  static Monomial from_parts(Exponents c_part, Exponents t_part);

  const Exponents& c_exponents() const { return c_; }
  const Exponents& t_exponents() const { return t_; }

  bool is_unit() const { return c_.empty() && t_.empty(); }
  bool has_c() const { return !c_.empty(); }
  bool has_t() const { return !t_.empty(); }

  int degree() const;
  int c_degree() const;
  int t_degree() const { return degree() - c_degree(); }

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const {
    return c_ == other.c_ && t_ == other.t_;
  }

 private:
  Exponents c_;
  Exponents t_;
};

/// Canonical term order, fixed so formatted output is bit-stable:
/// higher graded degree first, then descending lexicographic comparison
/// of the dense c-exponent vector (exponent of c_1, c_2, ...), then of
/// the dense t-exponent vector. `operator()(a, b)` is true when `a`
/// precedes `b` in canonical output.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

}  // namespace thetaforge
