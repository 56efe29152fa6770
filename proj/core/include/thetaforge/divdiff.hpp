#pragma once

#include <vector>

#include "thetaforge/partition.hpp"
#include "thetaforge/polynomial.hpp"

namespace thetaforge {

/// The W_infty action on Z[c,t] by ring automorphisms: s_i for i >= 1
/// swaps t_i and t_{i+1}; s_0 maps t_1 to -t_1 and
/// c_p to c_p + 2 sum_{j=1}^p (-t_1)^j c_{p-j}.
Polynomial weyl_act(int i, const Polynomial& f);

/// Divided difference: (f - s_0 f)/(2 t_1) for i = 0 and
/// (f - s_i f)/(t_{i+1} - t_i) for i >= 1. Divisibility is guaranteed
/// by the action and asserted; failure signals an action bug.
Polynomial divided_diff(int i, const Polynomial& f);

/// Exact quotient f / (t_i - t_j) by synthetic division in t_i; throws
/// std::logic_error if the remainder f|_{t_i -> t_j} is nonzero.
Polynomial divide_t_diff(const Polynomial& f, int i, int j);

/// Checks the descent identity: if w_lam = s_i w_mu with |lam| = |mu|+1,
/// returns whether divided_diff(i, Theta_lam) equals Theta_mu exactly in
/// Z[c,t]. Throws "not a left descent" when no such mu exists.
bool verify_descent(const KStrictPartition& lam, int i);

/// The partition (n+k, n+k-1, ..., 2k+1) of the longest k-Grassmannian
/// element of W_n.
KStrictPartition top_partition(int k, int n);

/// A reduced word a_1,...,a_r with w_lam w_{lam_0} = s_{a_1}...s_{a_r}:
/// greedy smallest left descent (canonical), or random descent choices
/// under the given seed.
std::vector<int> word_to_top(const KStrictPartition& lam, int n);
std::vector<int> word_to_top(const KStrictPartition& lam, int n, unsigned long long seed);

/// Theta_lam recovered by iterated divided differences from the top
/// class: applies the word's operators right to left to Theta_{lam_0}.
/// The result is word-independent; the default uses the canonical word.
Polynomial theta_from_top(const KStrictPartition& lam, int n);
Polynomial theta_from_top(const KStrictPartition& lam, int n, const std::vector<int>& word);

}  // namespace thetaforge
