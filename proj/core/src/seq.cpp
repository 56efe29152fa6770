#include "thetaforge/seq.hpp"

#include <algorithm>
#include <stdexcept>

namespace thetaforge {

int seq_entry(const IntSeq& seq, int j) {
  if (j < 1) throw std::invalid_argument("sequence index must be positive");
  return j <= static_cast<int>(seq.size()) ? seq[j - 1] : 0;
}

IntSeq seq_trim(IntSeq seq) {
  while (!seq.empty() && seq.back() == 0) seq.pop_back();
  return seq;
}

int seq_support(const IntSeq& seq) {
  int n = static_cast<int>(seq.size());
  while (n > 0 && seq[n - 1] == 0) --n;
  return n;
}

PairSet::PairSet(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  for (const auto& [i, j] : pairs_)
    if (i < 1 || i >= j) throw std::invalid_argument("pairs must satisfy 1 <= i < j");
}

bool PairSet::contains(int i, int j) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{i, j});
}

PairSet PairSet::with_pair(int i, int j) const {
  auto pairs = pairs_;
  pairs.emplace_back(i, j);
  return PairSet(std::move(pairs));
}

PairSet PairSet::with_pairs(const std::vector<Pair>& extra) const {
  auto pairs = pairs_;
  pairs.insert(pairs.end(), extra.begin(), extra.end());
  return PairSet(std::move(pairs));
}

PairSet PairSet::restricted(int window) const {
  std::vector<Pair> pairs;
  for (const auto& p : pairs_)
    if (p.second <= window) pairs.push_back(p);
  return PairSet(std::move(pairs));
}

int PairSet::max_second_index() const {
  int m = 0;
  for (const auto& [i, j] : pairs_) m = std::max(m, j);
  return m;
}

bool is_order_ideal(const PairSet& D) {
  for (const auto& [i, j] : D.pairs()) {
    if (i > 1 && !D.contains(i - 1, j)) return false;
    if (j - 1 > i && !D.contains(i, j - 1)) return false;
  }
  return true;
}

std::vector<Pair> outer_corners(const PairSet& D, int window) {
  if (!is_order_ideal(D)) throw std::invalid_argument("not a valid set of pairs");
  std::vector<Pair> corners;
  for (int j = 2; j <= window; ++j)
    for (int i = 1; i < j; ++i) {
      if (D.contains(i, j)) continue;
      bool ok = (i == 1 || D.contains(i - 1, j)) && (j - 1 == i || D.contains(i, j - 1));
      if (ok) corners.emplace_back(i, j);
    }
  return corners;
}

int a_seq(const PairSet& D, int j) {
  int in_d = 0;
  for (const auto& [i, jj] : D.pairs())
    if (jj == j) ++in_d;
  return (j - 1) - in_d;
}

IntSeq gamma_seq(const PairSet& D, const IntSeq& mu, int k) {
  IntSeq gamma(mu.size());
  for (int j = 1; j <= static_cast<int>(mu.size()); ++j)
    gamma[j - 1] = k + 1 - mu[j - 1] + a_seq(D, j);
  return gamma;
}

}  // namespace thetaforge
