#pragma once

#include <vector>

#include "thetaforge/partition.hpp"
#include "thetaforge/polynomial.hpp"
#include "thetaforge/raising.hpp"
#include "thetaforge/seq.hpp"

namespace thetaforge {

/// C(lam) restricted to pairs with second index <= window:
/// {(i,j) : i < j <= window, lam_i + lam_j > 2k + j - i}.
PairSet pair_set_C(const KStrictPartition& lam, int window);

/// beta_j(lam) = k + 1 - lam_j + #{i < j : (i,j) not in C(lam)} for
/// j = 1..length.
IntSeq beta_seq(const KStrictPartition& lam, int length);

/// The double theta polynomial R^lam c^{beta(lam)}_lam. Homogeneous of
/// degree |lam|. Memoized.
const Polynomial& theta_double(const KStrictPartition& lam);

/// The single theta polynomial R^lam c_lam = theta_double at t = 0.
const Polynomial& theta_single(const KStrictPartition& lam);

/// Determinant det(M) of a square matrix of polynomials.
Polynomial det_poly(const std::vector<std::vector<Polynomial>>& m);

/// Schur-type determinant S^rho_alpha = det(c^{rho_i}_{alpha_i+j-i}).
Polynomial schur_det(const IntSeq& alpha, const IntSeq& rho);

/// Schur-type Pfaffian Q^rho_alpha with entries
/// (1-R_12)(1+R_12)^{-1} c^{rho_i,rho_j}_{alpha_i,alpha_j}. For odd
/// length the matrix is padded with a trailing alpha = 0, rho = 0 column,
/// whose entries reduce to c^{rho_i}_{alpha_i}. Memoized.
Polynomial schur_pf(const IntSeq& alpha, const IntSeq& rho);

/// S_mu(c) = det(c_{mu_i+j-i}) and Q_mu(c) = Pf expansion at rho = 0.
Polynomial schur_s(const Parts& mu);
Polynomial schur_q(const Parts& mu);

/// Pfaffian-sum form: sum over subsets S of A_l(lam) of
/// Q^{beta(lam)}_{prod_{(i,j) in S} R_ij lam}, as a multiset sum.
Polynomial theta_pf_sum(const KStrictPartition& lam);

/// A_l(lam) = {(i,j) : i < j <= length, lam_i + lam_j <= 2k + j - i}.
std::vector<Pair> pair_set_A(const KStrictPartition& lam);

/// Factorial expansions. The S-form requires lam_i + lam_j <= 2k + j - i
/// for all i < j <= length (no Pfaffian factors); the Q-form requires
/// every part > k. Violations raise std::invalid_argument.
Polynomial factorial_s_rhs(const KStrictPartition& lam);
Polynomial factorial_q_rhs(const KStrictPartition& lam);

}  // namespace thetaforge
