#pragma once

#include "thetaforge/polynomial.hpp"
#include "thetaforge/seq.hpp"

namespace thetaforge {

/// One term of an expanded raising operator: an integer weight and the
/// signed subscript offsets it applies to the base sequence.
struct ShiftTerm {
  long long coeff;
  IntSeq shift;
};

using ShiftExpansion = std::vector<ShiftTerm>;

/// Exact finite expansion of R^D = prod_{i<j}(1-R_ij) prod_{(i,j) in D}
/// (1+R_ij)^{-1} acting on sequences of support length <= window, pruned
/// against the given base entries: every emitted shift keeps base + shift
/// componentwise nonnegative, and dropped terms are exactly those that
/// would produce a negative subscript (hence the zero polynomial).
/// Memoized; safe for concurrent use.
const ShiftExpansion& expand_operator(const PairSet& D, int window, const IntSeq& base);

/// Formal expansion without base pruning. Only defined when D has no
/// pair inside the window (the geometric factors (1+R)^{-1} have no
/// finite formal expansion); throws std::invalid_argument otherwise.
ShiftExpansion expand_operator(const PairSet& D, int window);

/// T(D,mu) = R^D c^{gamma(D,mu)}_mu. The superscripts are computed from
/// the unshifted mu; only subscripts move under the operator. The
/// optional window (>= support of mu) is provided for the
/// window-exactness property; enlarging it never changes the result.
Polynomial t_poly(const PairSet& D, const IntSeq& mu, int k);
Polynomial t_poly(const PairSet& D, const IntSeq& mu, int k, int window);

/// (1-R_12)(1+R_12)^{-1} c^{rp,rq}_{p,q} expanded:
/// c^rp_p c^rq_q + 2 sum_{m>=1} (-1)^m c^rp_{p+m} c^rq_{q-m}.
Polynomial two_row_ratio(int p, int q, int rp, int rq);

}  // namespace thetaforge
