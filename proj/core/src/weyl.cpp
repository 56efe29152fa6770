#include "thetaforge/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "thetaforge/divdiff.hpp"
#include "thetaforge/theta.hpp"

namespace thetaforge {

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  std::vector<bool> seen(window_.size(), false);
  for (int v : window_) {
    int a = std::abs(v);
    if (a < 1 || a > static_cast<int>(window_.size()) || seen[a - 1])
      throw std::invalid_argument("not a signed permutation window");
    seen[a - 1] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::simple(int i, int n) {
  if (i < 0 || i >= n) throw std::invalid_argument("generator index out of range");
  auto w = identity(n).window_;
  if (i == 0)
    w[0] = -1;
  else
    std::swap(w[i - 1], w[i]);
  return SignedPermutation(std::move(w));
}

int SignedPermutation::value(int x) const {
  if (x == 0) throw std::invalid_argument("0 is not in the domain");
  const int a = std::abs(x);
  const int v = a <= rank() ? window_[a - 1] : a;
  return x > 0 ? v : -v;
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (window_[i] != i + 1) return false;
  return true;
}

bool SignedPermutation::sign_change_free() const {
  for (int v : window_)
    if (v < 0) return false;
  return true;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& o) const {
  const int n = std::max(rank(), o.rank());
  std::vector<int> w(n);
  for (int x = 1; x <= n; ++x) w[x - 1] = value(o.value(x));
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> w(rank());
  for (int x = 1; x <= rank(); ++x) {
    const int v = window_[x - 1];
    w[std::abs(v) - 1] = v > 0 ? x : -x;
  }
  return SignedPermutation(std::move(w));
}

bool SignedPermutation::operator==(const SignedPermutation& o) const {
  const int n = std::max(rank(), o.rank());
  for (int x = 1; x <= n; ++x)
    if (value(x) != o.value(x)) return false;
  return true;
}

std::string SignedPermutation::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < rank(); ++i) {
    if (i) out << ",";
    out << window_[i];
  }
  return out.str();
}

SignedPermutation SignedPermutation::from_string(const std::string& csv) {
  std::vector<int> w;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) w.push_back(std::stoi(item));
  return SignedPermutation(std::move(w));
}

int coxeter_length(const SignedPermutation& w) {
  const auto& win = w.window();
  const int n = w.rank();
  int len = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (i < j && win[i] > win[j]) ++len;
      if (-win[i] > win[j]) ++len;
    }
  return len;
}

bool has_right_descent(const SignedPermutation& w, int i) {
  if (i == 0) return w.value(1) < 0;
  return w.value(i) > w.value(i + 1);
}

bool has_left_descent(const SignedPermutation& w, int i) {
  return has_right_descent(w.inverse(), i);
}

bool is_k_grassmannian(const SignedPermutation& w, int k) {
  for (int i = 0; i < w.rank(); ++i)
    if (i != k && has_right_descent(w, i)) return false;
  return true;
}

int min_rank(const KStrictPartition& lam) {
  return std::max({lam.length() + lam.k(), lam.part(1) - lam.k(), lam.k() + 1});
}

SignedPermutation partition_to_w(const KStrictPartition& lam, int n) {
  const int k = lam.k();
  if (!lam.in_pkn(n)) throw std::invalid_argument("rank too small");
  const int lk = lam.k_length();

  // Negative entries: k - lam_i for the parts above k, increasing.
  std::vector<int> negatives;
  std::vector<bool> used(n + 1, false);
  for (int i = 1; i <= lk; ++i) {
    negatives.push_back(k - lam.part(i));
    used[lam.part(i) - k] = true;
  }
  std::reverse(negatives.begin(), negatives.end());

  // Distribute the remaining positive values between the first k slots
  // and the tail so that #{p <= k : w_p > w_{k+i}} = lam_i. Walk the
  // available values downward, topping up the first-row set as the
  // required count grows.
  std::vector<int> avail;
  for (int v = n; v >= 1; --v)
    if (!used[v]) avail.push_back(v);
  const int q = n - k - lk;
  std::vector<int> rows, tail;
  std::size_t pos = 0;
  for (int m = q; m >= 1; --m) {
    const int need = lam.part(lk + m);
    while (static_cast<int>(rows.size()) < need) {
      if (pos >= avail.size()) throw std::invalid_argument("rank too small");
      rows.push_back(avail[pos++]);
    }
    if (pos >= avail.size()) throw std::invalid_argument("rank too small");
    tail.push_back(avail[pos++]);
  }
  while (pos < avail.size()) rows.push_back(avail[pos++]);
  if (static_cast<int>(rows.size()) != k) throw std::invalid_argument("rank too small");
  std::sort(rows.begin(), rows.end());
  std::reverse(tail.begin(), tail.end());

  std::vector<int> window = rows;
  window.insert(window.end(), negatives.begin(), negatives.end());
  window.insert(window.end(), tail.begin(), tail.end());
  SignedPermutation w(std::move(window));
  if (!is_k_grassmannian(w, k)) throw std::logic_error("constructed element is not k-Grassmannian");
  return w;
}

KStrictPartition grassmannian_to_partition(const SignedPermutation& w, int k) {
  if (!is_k_grassmannian(w, k)) throw std::invalid_argument("not a k-Grassmannian element");
  Parts parts;
  for (int i = 1; i + k <= w.rank(); ++i) {
    const int v = w.value(k + i);
    if (v < 0) {
      parts.push_back(k - v);
    } else {
      int count = 0;
      for (int p = 1; p <= k; ++p)
        if (w.value(p) > v) ++count;
      parts.push_back(count);
    }
  }
  return KStrictPartition(k, std::move(parts));
}

PairSet pair_set_from_w(const SignedPermutation& w, int k) {
  std::vector<Pair> pairs;
  const int m = w.rank() - k;
  for (int i = 1; i < m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (w.value(k + i) + w.value(k + j) < 0) pairs.emplace_back(i, j);
  return PairSet(std::move(pairs));
}

IntSeq beta_from_w(const SignedPermutation& w, int k) {
  IntSeq beta;
  for (int j = 1; j + k <= w.rank(); ++j) {
    const int v = w.value(k + j);
    beta.push_back(v < 0 ? v + 1 : v);
  }
  return beta;
}

std::vector<ReducedFactorization> reduced_factorizations(const KStrictPartition& lam) {
  const int n = min_rank(lam);
  const SignedPermutation w_lam = partition_to_w(lam, n);
  const int len_lam = coxeter_length(w_lam);
  std::vector<ReducedFactorization> out;
  for (const auto& mu : k_strict_subpartitions(lam)) {
    const SignedPermutation w_mu = partition_to_w(mu, n);
    const SignedPermutation u = w_lam * w_mu.inverse();
    if (!u.sign_change_free()) continue;
    if (coxeter_length(u) + coxeter_length(w_mu) != len_lam) continue;
    out.push_back({u, mu});
  }
  return out;
}

namespace {

std::vector<int> trim_window(std::vector<int> w) {
  while (!w.empty() && w.back() == static_cast<int>(w.size())) w.pop_back();
  return w;
}

}  // namespace

const Polynomial& schubert_poly_a(const SignedPermutation& u) {
  if (!u.sign_change_free()) throw std::invalid_argument("Schubert polynomials need u in S_infty");
  static std::map<std::vector<int>, Polynomial> cache;
  static std::mutex mutex;
  std::vector<int> key = trim_window(u.window());
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Polynomial value;
  const int n = static_cast<int>(key.size());
  if (n <= 1) {
    value = Polynomial::one();
  } else {
    int ascent = -1;
    for (int i = 1; i < n; ++i)
      if (key[i - 1] < key[i]) {
        ascent = i;
        break;
      }
    if (ascent == -1) {  // longest element: staircase monomial
      value = Polynomial::one();
      for (int i = 1; i < n; ++i) value = value * Polynomial::term(Monomial::t(i, n - i), 1);
    } else {
      auto longer = key;
      std::swap(longer[ascent - 1], longer[ascent]);
      const Polynomial& s_longer = schubert_poly_a(SignedPermutation(longer));
      // classical type A divided difference (f - s_i f) / (t_i - t_{i+1})
      value = divide_t_diff(s_longer - s_longer.swap_t(ascent, ascent + 1), ascent, ascent + 1);
    }
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::move(key), std::move(value)).first->second;
}

Polynomial omega_poly(const KStrictPartition& lam) {
  Polynomial result;
  for (const auto& rf : reduced_factorizations(lam))
    result += theta_single(rf.mu) * schubert_poly_a(rf.u.inverse()).negate_t();
  return result;
}

Polynomial localization_sigma1(const KStrictPartition& lam) {
  const int k = lam.k();
  const SignedPermutation w = partition_to_w(lam, min_rank(lam));
  Polynomial result;
  for (int j = 1; j <= lam.k_length(); ++j)
    result += Polynomial::t(lam.part(j) - k) * Coefficient(2);
  for (int j = 1; j <= k; ++j) {
    const int v = w.value(j);
    if (v <= 0) throw std::logic_error("w_j must be positive for j <= k");
    result += Polynomial::t(v) - Polynomial::t(j);
  }
  return result;
}

}  // namespace thetaforge
