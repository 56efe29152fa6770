#pragma once

#include <map>
#include <string>

#include "thetaforge/partition.hpp"
#include "thetaforge/polynomial.hpp"

namespace thetaforge {

/// A Z[t]-linear combination of basis elements of C^(k)[t] indexed by
/// k-strict partitions. The same container backs both the monomial
/// basis {c_lam} (CNormalForm) and the theta basis (ThetaExpansion);
/// coefficients are polynomials in the t-variables only and zero
/// coefficients are never stored.
struct BasisCombination {
  int k = 0;
  std::map<Parts, Polynomial> coeffs;

  bool empty() const { return coeffs.empty(); }
  void add(const Parts& key, const Polynomial& value);
  bool operator==(const BasisCombination& o) const {
    return k == o.k && coeffs == o.coeffs;
  }
};

using CNormalForm = BasisCombination;
using ThetaExpansion = BasisCombination;

/// Image of the monomial prod_i c_{parts_i} in the k-strict basis of
/// C^(k): repeated parts p > k are rewritten with the quadratic relation
/// c_p c_p = 2 sum_{i=1}^p (-1)^{i+1} c_{p+i} c_{p-i}. Each rewrite
/// strictly increases dominance at fixed degree, which certifies
/// termination (asserted per step). Memoized.
const std::map<Parts, Coefficient>& reduce_monomial(const Parts& parts, int k);

/// Z[t]-linear extension of reduce_monomial to all of Z[c,t].
CNormalForm normal_form(const Polynomial& f, int k);

/// The polynomial sum_lam c_lam * b_lam(t) represented by a normal form.
Polynomial lift(const CNormalForm& nf);

/// Normal form of Theta_lam(c|t); cached, and checked once for the
/// triangularity that the expansion pivot relies on: the coefficient of
/// c_lam is exactly 1 and every other top-degree key strictly dominates
/// lam.
const CNormalForm& theta_normal_form(int k, const Parts& lam);

/// Unique expansion of f as sum_lam b_lam(t) Theta_lam(c|t) in C^(k)[t],
/// found by repeatedly picking a dominance-minimal key among the
/// maximal-degree monomials of the normal form.
ThetaExpansion theta_expansion(const Polynomial& f, int k);

bool equal_in_quotient(const Polynomial& f, const Polynomial& g, int k);

/// Drop the keys outside P(k,n).
ThetaExpansion finite_truncate(const ThetaExpansion& e, int n);

/// theta_expansion(Theta_lam * Theta_mu), optionally truncated to P(k,n)
/// (pass n <= 0 to skip the truncation).
ThetaExpansion structure_constants(const KStrictPartition& lam, const KStrictPartition& mu,
                                   int n = 0);

/// {"basis":"theta"|"c","k":K,"coeffs":[{"partition":[...],"poly":...}]}
std::string expansion_to_json(const BasisCombination& e, const std::string& basis);
BasisCombination expansion_from_json(const std::string& json, std::string* basis = nullptr);

}  // namespace thetaforge
