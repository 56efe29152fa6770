#pragma once

#include "thetaforge/polynomial.hpp"

namespace thetaforge {

/// e_j(t_1,...,t_r). Returns 1 for j = 0, 0 for j < 0 or j > r; for
/// r = 0 this is the Kronecker delta.
Polynomial elem_sym(int j, int r);

/// h^r_j(t): h_j(t_1,...,t_r) for r > 0, the Kronecker delta for r = 0,
/// and e_j(t_1,...,t_{-r}) for r < 0.
Polynomial complete_sym(int j, int r);

/// h^r_j(-t), the signed variant used by c^r_p.
Polynomial complete_sym_neg(int j, int r);

/// The element c^r_p = sum_{j=0}^p c_{p-j} h^r_j(-t) of Z[c,t].
/// Homogeneous of graded degree p; 0 for p < 0 and 1 for p = 0.
/// Memoized; safe for concurrent use.
const Polynomial& c_power(int p, int r);

/// t_1 + ... + t_r (0 for r <= 0).
Polynomial t_sum(int r);

/// t_r with the convention t_r := t_{-r} for r < 0. Index 0 is invalid.
Polynomial t_var_signed(int r);

}  // namespace thetaforge
