#pragma once

#include <string>
#include <vector>

#include "thetaforge/partition.hpp"
#include "thetaforge/polynomial.hpp"
#include "thetaforge/seq.hpp"

namespace thetaforge {

/// An element of the hyperoctahedral group W_n in window notation
/// (w_1,...,w_n), where |w_1|,...,|w_n| is a permutation of 1..n and
/// signs are arbitrary. Elements of different ranks are compared and
/// composed through the embedding W_n -> W_{n+1} that appends the fixed
/// point n+1.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);
  /// Simple reflection as an element of W_n: s_0 negates 1, s_i swaps
  /// i and i+1.
  static SignedPermutation simple(int i, int n);

  int rank() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  /// Image of x (odd extension: value(-x) = -value(x); fixed beyond rank).
  int value(int x) const;

  bool is_identity() const;
  bool sign_change_free() const;  // all window entries positive

  SignedPermutation operator*(const SignedPermutation& o) const;  // (w*v)(x) = w(v(x))
  SignedPermutation inverse() const;
  bool operator==(const SignedPermutation& o) const;

  std::string to_string() const;  // "4,8,-5,-2,-1,3,6,7"
  static SignedPermutation from_string(const std::string& csv);

 private:
  std::vector<int> window_;
};

/// Coxeter length over the generators s_0,...,s_{n-1}:
/// #{i<j : w_i > w_j} + #{i<=j : -w_i > w_j}.
int coxeter_length(const SignedPermutation& w);

/// Right descent set: i with l(w s_i) < l(w). i = 0 is a descent iff
/// w_1 < 0; i >= 1 iff w_i > w_{i+1}.
bool has_right_descent(const SignedPermutation& w, int i);
/// Left descent: l(s_i w) < l(w).
bool has_left_descent(const SignedPermutation& w, int i);

bool is_k_grassmannian(const SignedPermutation& w, int k);

/// Smallest n with lam in P(k,n).
int min_rank(const KStrictPartition& lam);

/// The k-Grassmannian element w_lam of W_n. Throws "rank too small" if
/// lam does not fit in the (n-k) x (n+k) rectangle.
SignedPermutation partition_to_w(const KStrictPartition& lam, int n);

/// Inverse of partition_to_w; requires is_k_grassmannian(w, k).
KStrictPartition grassmannian_to_partition(const SignedPermutation& w, int k);

/// C(lam) and beta(lam) read off the window of w_lam; must agree with
/// the partition-side definitions.
PairSet pair_set_from_w(const SignedPermutation& w, int k);
IntSeq beta_from_w(const SignedPermutation& w, int k);

struct ReducedFactorization {
  SignedPermutation u;  // sign-change-free left factor
  KStrictPartition mu;  // u w_mu = w_lam with l(u) + l(w_mu) = l(w_lam)
};

std::vector<ReducedFactorization> reduced_factorizations(const KStrictPartition& lam);

/// Type A Schubert polynomial of u in the t-variables, computed by
/// divided-difference descent from the staircase monomial of the longest
/// element. u must be sign-change-free; the result is stable under
/// extending u by fixed points. Memoized.
const Polynomial& schubert_poly_a(const SignedPermutation& u);

/// Omega representative: sum over reduced factorizations u w_mu = w_lam
/// of Theta_mu(c) * S_{u^{-1}}(-t).
Polynomial omega_poly(const KStrictPartition& lam);

/// Localization of the divisor class at w_lam:
/// 2 sum_{j<=l_k} t_{lam_j-k} + sum_{j<=k} (t_{w_j} - t_j).
Polynomial localization_sigma1(const KStrictPartition& lam);

}  // namespace thetaforge
