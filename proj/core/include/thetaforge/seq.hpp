#pragma once

#include <utility>
#include <vector>

namespace thetaforge {

/// Finite-support integer sequence; entries beyond the stored length are
/// zero. 1-based access via seq_entry.
using IntSeq = std::vector<int>;

int seq_entry(const IntSeq& seq, int j);
IntSeq seq_trim(IntSeq seq);  // drop trailing zeros
int seq_support(const IntSeq& seq);

using Pair = std::pair<int, int>;

/// A finite set of pairs (i,j) with 1 <= i < j, kept sorted. The sets
/// used by raising operators are order ideals in this poset (componentwise
/// comparison); validity is checked by is_order_ideal.
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(std::vector<Pair> pairs);

  bool contains(int i, int j) const;
  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }
  const std::vector<Pair>& pairs() const { return pairs_; }

  PairSet with_pair(int i, int j) const;
  PairSet with_pairs(const std::vector<Pair>& extra) const;
  /// Pairs (i,j) with j <= window.
  PairSet restricted(int window) const;
  int max_second_index() const;

  bool operator==(const PairSet& o) const { return pairs_ == o.pairs_; }
  bool operator<(const PairSet& o) const { return pairs_ < o.pairs_; }

 private:
  std::vector<Pair> pairs_;
};

/// True iff D is an order ideal of {(i,j) : 1 <= i < j}.
bool is_order_ideal(const PairSet& D);

/// All (i,j) not in D with j <= window such that D u {(i,j)} is again an
/// order ideal. Requires is_order_ideal(D).
std::vector<Pair> outer_corners(const PairSet& D, int window);

/// a_j(D) = #{i < j : (i,j) not in D}.
int a_seq(const PairSet& D, int j);

/// gamma_j(D,mu) = k + 1 - mu_j + a_j(D), for 1 <= j <= len(mu).
IntSeq gamma_seq(const PairSet& D, const IntSeq& mu, int k);

}  // namespace thetaforge
