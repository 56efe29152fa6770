#include "thetaforge/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace thetaforge {

KStrictPartition::KStrictPartition(int k, Parts parts) : k_(k), parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (!is_valid(k_, parts_)) throw std::invalid_argument("not k-strict");
}

bool KStrictPartition::is_valid(int k, const Parts& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) return false;
    if (i > 0) {
      if (parts[i] > parts[i - 1]) return false;
      if (parts[i] > k && parts[i] == parts[i - 1]) return false;
    }
  }
  return true;
}

int KStrictPartition::part(int i) const {
  if (i < 1) throw std::invalid_argument("part index must be positive");
  return i <= length() ? parts_[i - 1] : 0;
}

int KStrictPartition::k_length() const {
  int n = 0;
  for (int p : parts_)
    if (p > k_) ++n;
  return n;
}

int KStrictPartition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool KStrictPartition::contains(const KStrictPartition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.parts_[i] > parts_[i]) return false;
  return true;
}

bool KStrictPartition::in_pkn(int n) const {
  return length() <= n - k_ && (parts_.empty() || parts_[0] <= n + k_);
}

std::string KStrictPartition::to_string() const {
  if (parts_.empty()) return "-";
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ",";
    out << parts_[i];
  }
  return out.str();
}

namespace {

void gen_bounded(int k, int budget, int max_part, Parts& current,
                 std::vector<KStrictPartition>& out, int max_length) {
  out.emplace_back(k, current);
  if (static_cast<int>(current.size()) >= max_length) return;
  for (int p = std::min(budget, max_part); p >= 1; --p) {
    if (p > k && !current.empty() && current.back() == p) continue;
    current.push_back(p);
    gen_bounded(k, budget - p, p, current, out, max_length);
    current.pop_back();
  }
}

}  // namespace

std::vector<KStrictPartition> k_strict_partitions_up_to(int k, int max_weight) {
  std::vector<KStrictPartition> out;
  Parts current;
  gen_bounded(k, max_weight, max_weight, current, out, max_weight + 1);
  std::sort(out.begin(), out.end(), [](const KStrictPartition& a, const KStrictPartition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.parts() < b.parts();
  });
  return out;
}

std::vector<KStrictPartition> k_strict_partitions_of(int k, int w) {
  std::vector<KStrictPartition> out;
  for (auto& lam : k_strict_partitions_up_to(k, w))
    if (lam.weight() == w) out.push_back(lam);
  return out;
}

namespace {

void gen_sub(const KStrictPartition& lam, int i, Parts& current,
             std::vector<KStrictPartition>& out) {
  if (i > lam.length()) {
    Parts trimmed = current;
    out.emplace_back(lam.k(), trimmed);
    return;
  }
  int hi = std::min(lam.part(i), i > 1 ? current[i - 2] : lam.part(1));
  for (int p = hi; p >= 0; --p) {
    if (p > lam.k() && i > 1 && current[i - 2] == p) continue;
    current.push_back(p);
    gen_sub(lam, i + 1, current, out);
    current.pop_back();
    if (p == 0) break;
  }
}

}  // namespace

std::vector<KStrictPartition> k_strict_subpartitions(const KStrictPartition& lam) {
  std::vector<KStrictPartition> out;
  Parts current;
  gen_sub(lam, 1, current, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<KStrictPartition> pkn_partitions(int k, int n) {
  std::vector<KStrictPartition> out;
  if (n <= k) return out;
  Parts current;
  std::vector<KStrictPartition> all;
  gen_bounded(k, (n - k) * (n + k), n + k, current, all, n - k);
  for (auto& lam : all) out.push_back(lam);
  std::sort(out.begin(), out.end(), [](const KStrictPartition& a, const KStrictPartition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.parts() < b.parts();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool dominance_leq(const Parts& a, const Parts& b) {
  int sa = 0, sb = 0;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

Parts parse_parts(const std::string& csv) {
  Parts parts;
  if (csv.empty() || csv == "-") return parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("malformed partition: " + csv);
    parts.push_back(std::stoi(item));
  }
  return parts;
}

}  // namespace thetaforge
