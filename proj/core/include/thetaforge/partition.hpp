#pragma once

#include <string>
#include <vector>

namespace thetaforge {

using Parts = std::vector<int>;

/// A k-strict partition: weakly decreasing nonnegative parts, with all
/// parts strictly greater than k pairwise distinct. Trailing zeros are
/// trimmed on construction.
class KStrictPartition {
 public:
  KStrictPartition(int k, Parts parts);  // throws "not k-strict"

  static bool is_valid(int k, const Parts& parts);

  int k() const { return k_; }
  const Parts& parts() const { return parts_; }
  int part(int i) const;  // 1-based; 0 beyond the length
  int length() const { return static_cast<int>(parts_.size()); }
  int k_length() const;  // number of parts > k
  int weight() const;

  bool contains(const KStrictPartition& mu) const;
  /// Membership in P(k,n): fits inside an (n-k) x (n+k) rectangle.
  bool in_pkn(int n) const;

  bool operator==(const KStrictPartition& o) const {
    return k_ == o.k_ && parts_ == o.parts_;
  }
  bool operator<(const KStrictPartition& o) const { return parts_ < o.parts_; }

  std::string to_string() const;  // "7,4,3,2,1,1" ("-" for the empty partition)

 private:
  int k_;
  Parts parts_;
};

/// All k-strict partitions of weight <= max_weight (the empty one included).
std::vector<KStrictPartition> k_strict_partitions_up_to(int k, int max_weight);

/// All k-strict partitions of weight exactly w.
std::vector<KStrictPartition> k_strict_partitions_of(int k, int w);

/// All k-strict mu contained in lam componentwise.
std::vector<KStrictPartition> k_strict_subpartitions(const KStrictPartition& lam);

/// All of P(k,n).
std::vector<KStrictPartition> pkn_partitions(int k, int n);

/// Dominance on equal-weight part vectors: every prefix sum of a is <=
/// the corresponding prefix sum of b.
bool dominance_leq(const Parts& a, const Parts& b);

Parts parse_parts(const std::string& csv);  // "7,4,3,2,1,1"; "" or "-" -> empty

}  // namespace thetaforge
