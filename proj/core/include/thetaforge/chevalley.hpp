#pragma once

#include <string>
#include <vector>

#include "thetaforge/partition.hpp"
#include "thetaforge/polynomial.hpp"
#include "thetaforge/quotient.hpp"

namespace thetaforge {

/// Diagnostic classification of a Chevalley cover: type I keeps C(mu) =
/// C(lam); the three type II shapes are distinguished by where the new
/// pairs of C(mu) sit. e = 2 exactly for type IIa.
enum class CoverKind { I, IIa, IIb, IIc };

std::string to_string(CoverKind kind);

struct ChevalleyTerm {
  KStrictPartition mu;
  int multiplicity;  // e_{lam,mu}, 1 or 2
  CoverKind kind;
};

/// Boxes [r,c] and [r',c'] are k-related when |c-k-1| + r = |c'-k-1| + r'.
bool k_related(std::pair<int, int> box1, std::pair<int, int> box2, int k);

/// All covers lam -> mu with their multiplicities: single-box additions,
/// and removals of r boxes from one of the first k columns followed by
/// r+1 boxes added to a single row, under the k-relatedness conditions.
std::vector<ChevalleyTerm> chevalley_covers(const KStrictPartition& lam);

/// The t-linear coefficient of Theta_lam in Theta_1 * Theta_lam:
/// sum_{j=k+1}^{k+l} t_j + sum_{j<=l_k} t_{lam_j-k}
/// - sum_{l_k<j<=l} t_{beta_j(lam)}.
Polynomial chevalley_t_coeff(const KStrictPartition& lam);

struct ChevalleyReport {
  KStrictPartition lam;
  bool pass;
  ThetaExpansion lhs;  // theta_expansion(Theta_1 * Theta_lam)
  ThetaExpansion rhs;  // coefficient * Theta_lam + sum e_{lam,mu} Theta_mu
  std::vector<ChevalleyTerm> covers;

  std::string to_json() const;
};

/// Algebraic verification: expands Theta_1 * Theta_lam in the theta
/// basis and compares with the combinatorial rule. Failures are
/// reported, not thrown.
ChevalleyReport verify_chevalley(const KStrictPartition& lam);

/// T(C, lam + e_h) for the windowed pair set C of lam; sequences have
/// length l+1.
Polynomial chevalley_product_term(const KStrictPartition& lam, int h);

/// Proof-trace diagnostic: the Chevalley terms each T(C, lam + e_h)
/// decomposes into (possibly empty, at most two). Checked against the
/// algebra by check_product_decomposition.
std::vector<Parts> decompose_product_term(const KStrictPartition& lam, int h);

/// Verifies, for every h, that T(C, lam + e_h) equals the sum of its
/// decomposition terms in C^(k)[t], that the terms over all h add up to
/// the cover multiset, and that the raising-operator identity
/// c_1 * Theta_lam = (coefficient') Theta_lam + sum_h T(C, lam + e_h)
/// holds exactly in Z[c,t].
bool check_product_decomposition(const KStrictPartition& lam, std::string* detail = nullptr);

}  // namespace thetaforge
