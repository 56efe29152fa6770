#include "thetaforge/theta.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "thetaforge/ring.hpp"

namespace thetaforge {

PairSet pair_set_C(const KStrictPartition& lam, int window) {
  std::vector<Pair> pairs;
  for (int j = 2; j <= window; ++j)
    for (int i = 1; i < j; ++i)
      if (lam.part(i) + lam.part(j) > 2 * lam.k() + j - i) pairs.emplace_back(i, j);
  PairSet C(std::move(pairs));
  if (!is_order_ideal(C)) throw std::logic_error("C(lambda) failed the order-ideal check");
  return C;
}

IntSeq beta_seq(const KStrictPartition& lam, int length) {
  IntSeq beta(length);
  for (int j = 1; j <= length; ++j) {
    int a = 0;
    for (int i = 1; i < j; ++i)
      if (lam.part(i) + lam.part(j) <= 2 * lam.k() + j - i) ++a;
    beta[j - 1] = lam.k() + 1 - lam.part(j) + a;
  }
  return beta;
}

const Polynomial& theta_double(const KStrictPartition& lam) {
  static std::map<std::pair<int, Parts>, Polynomial> cache;
  static std::mutex mutex;
  std::pair<int, Parts> key{lam.k(), lam.parts()};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const int len = lam.length();
  Polynomial value = t_poly(pair_set_C(lam, len), lam.parts(), lam.k());
  if (!value.is_homogeneous() || (lam.weight() > 0 && value.degree() != lam.weight()))
    throw std::logic_error("theta polynomial is not homogeneous of degree |lambda|");
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::move(key), std::move(value)).first->second;
}

const Polynomial& theta_single(const KStrictPartition& lam) {
  static std::map<std::pair<int, Parts>, Polynomial> cache;
  static std::mutex mutex;
  std::pair<int, Parts> key{lam.k(), lam.parts()};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const int len = lam.length();
  Polynomial value;
  const ShiftExpansion& terms = expand_operator(pair_set_C(lam, len), len, lam.parts());
  for (const auto& term : terms) {
    Polynomial prod = Polynomial::constant(term.coeff);
    for (int j = 1; j <= len; ++j) {
      const int p = lam.part(j) + term.shift[j - 1];
      if (p > 0) prod = prod * Polynomial::c(p);
    }
    value += prod;
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::move(key), std::move(value)).first->second;
}

namespace {

Polynomial det_masked(const std::vector<std::vector<Polynomial>>& m, int row, unsigned mask,
                      std::unordered_map<unsigned, Polynomial>& memo) {
  const int n = static_cast<int>(m.size());
  if (row == n) return Polynomial::one();
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  Polynomial result;
  int position = 0;
  for (int col = 0; col < n; ++col) {
    if (mask & (1u << col)) continue;
    if (!m[row][col].is_zero()) {
      Polynomial sub = det_masked(m, row + 1, mask | (1u << col), memo);
      Polynomial contrib = m[row][col] * sub;
      result += (position % 2 == 0) ? contrib : -contrib;
    }
    ++position;
  }
  memo.emplace(mask, result);
  return result;
}

}  // namespace

Polynomial det_poly(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::one();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant needs a square matrix");
  if (n > 20) throw std::invalid_argument("determinant size out of range");
  std::unordered_map<unsigned, Polynomial> memo;
  return det_masked(m, 0, 0u, memo);
}

Polynomial schur_det(const IntSeq& alpha, const IntSeq& rho) {
  if (alpha.size() != rho.size()) throw std::invalid_argument("length mismatch");
  const int n = static_cast<int>(alpha.size());
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = c_power(alpha[i] + j - i, rho[i]);
  return det_poly(m);
}

namespace {

Polynomial pf_masked(const std::vector<std::vector<Polynomial>>& m, unsigned mask,
                     std::unordered_map<unsigned, Polynomial>& memo) {
  if (mask == 0) return Polynomial::one();
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  const int n = static_cast<int>(m.size());
  int a = 0;
  while (!(mask & (1u << a))) ++a;
  Polynomial result;
  int position = 1;
  for (int b = a + 1; b < n; ++b) {
    if (!(mask & (1u << b))) continue;
    ++position;
    if (!m[a][b].is_zero()) {
      Polynomial sub = pf_masked(m, mask & ~(1u << a) & ~(1u << b), memo);
      Polynomial contrib = m[a][b] * sub;
      result += (position % 2 == 0) ? contrib : -contrib;
    }
  }
  memo.emplace(mask, result);
  return result;
}

Polynomial schur_pf_compute(const IntSeq& alpha, const IntSeq& rho) {
  IntSeq a = alpha, r = rho;
  if (a.size() % 2 == 1) {  // pad with alpha = 0, rho = 0
    a.push_back(0);
    r.push_back(0);
  }
  const int n = static_cast<int>(a.size());
  if (n == 0) return Polynomial::one();
  if (n > 20) throw std::invalid_argument("pfaffian size out of range");
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m[i][j] = two_row_ratio(a[i], a[j], r[i], r[j]);
  std::unordered_map<unsigned, Polynomial> memo;
  return pf_masked(m, (1u << n) - 1u, memo);
}

}  // namespace

Polynomial schur_pf(const IntSeq& alpha, const IntSeq& rho) {
  if (alpha.size() != rho.size()) throw std::invalid_argument("length mismatch");
  static std::map<std::pair<IntSeq, IntSeq>, Polynomial> cache;
  static std::mutex mutex;
  std::pair<IntSeq, IntSeq> key{alpha, rho};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Polynomial value = schur_pf_compute(alpha, rho);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::move(key), std::move(value)).first->second;
}

Polynomial schur_s(const Parts& mu) {
  IntSeq alpha(mu.begin(), mu.end());
  return schur_det(alpha, IntSeq(alpha.size(), 0));
}

Polynomial schur_q(const Parts& mu) {
  IntSeq alpha(mu.begin(), mu.end());
  return schur_pf(alpha, IntSeq(alpha.size(), 0));
}

std::vector<Pair> pair_set_A(const KStrictPartition& lam) {
  std::vector<Pair> pairs;
  const int len = lam.length();
  for (int j = 2; j <= len; ++j)
    for (int i = 1; i < j; ++i)
      if (lam.part(i) + lam.part(j) <= 2 * lam.k() + j - i) pairs.emplace_back(i, j);
  return pairs;
}

Polynomial theta_pf_sum(const KStrictPartition& lam) {
  const int len = lam.length();
  const IntSeq beta = beta_seq(lam, len);
  const auto A = pair_set_A(lam);

  // Enumerate subsets of A column by column (second index decreasing),
  // merging equal offset vectors. Once column j is done its entry is
  // final; an entry nu_j < 0 that cannot pair with any later index makes
  // every extension's Pfaffian vanish, so such states are dropped.
  std::map<IntSeq, long long> states;
  states.emplace(IntSeq(len, 0), 1LL);
  for (int j = len; j >= 2; --j) {
    std::vector<int> rows;
    for (const auto& [i, jj] : A)
      if (jj == j) rows.push_back(i);
    std::map<IntSeq, long long> next;
    for (const auto& [delta, count] : states) {
      const int subsets = 1 << rows.size();
      for (int s = 0; s < subsets; ++s) {
        IntSeq d = delta;
        for (std::size_t b = 0; b < rows.size(); ++b)
          if (s & (1 << b)) {
            d[rows[b] - 1] += 1;
            d[j - 1] -= 1;
          }
        const int nu_j = lam.part(j) + d[j - 1];
        if (nu_j < 0) {
          bool pairable = false;
          for (int h = j + 1; h <= len; ++h) {
            const int nu_h = lam.part(h) + d[h - 1];
            if (nu_h >= 0 && nu_j + nu_h >= 0) {
              pairable = true;
              break;
            }
          }
          if (!pairable) continue;
        }
        auto [it, inserted] = next.emplace(std::move(d), count);
        if (!inserted) it->second += count;
      }
    }
    states = std::move(next);
  }

  Polynomial result;
  for (const auto& [delta, count] : states) {
    IntSeq nu(len);
    for (int j = 1; j <= len; ++j) nu[j - 1] = lam.part(j) + delta[j - 1];
    result += schur_pf(nu, beta) * Coefficient(count);
  }
  return result;
}

namespace {

void all_subpartitions(const Parts& lam, std::size_t i, Parts& current, std::vector<Parts>& out) {
  if (i == lam.size()) {
    Parts trimmed = current;
    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
    out.push_back(trimmed);
    return;
  }
  const int hi = std::min(lam[i], i > 0 ? current[i - 1] : lam[0]);
  for (int p = hi; p >= 0; --p) {
    current.push_back(p);
    all_subpartitions(lam, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

Polynomial factorial_s_rhs(const KStrictPartition& lam) {
  const int len = lam.length();
  const int k = lam.k();
  for (int j = 2; j <= len; ++j)
    for (int i = 1; i < j; ++i)
      if (lam.part(i) + lam.part(j) > 2 * k + j - i)
        throw std::invalid_argument("factorial S-expansion needs lam_i + lam_j <= 2k + j - i");
  std::vector<Parts> mus;
  Parts current;
  all_subpartitions(lam.parts(), 0, current, mus);
  std::sort(mus.begin(), mus.end());
  mus.erase(std::unique(mus.begin(), mus.end()), mus.end());
  Polynomial result;
  for (const auto& mu : mus) {
    std::vector<std::vector<Polynomial>> m(len, std::vector<Polynomial>(len));
    for (int i = 1; i <= len; ++i)
      for (int j = 1; j <= len; ++j) {
        const int mu_j = j <= static_cast<int>(mu.size()) ? mu[j - 1] : 0;
        m[i - 1][j - 1] = complete_sym_neg(lam.part(i) - mu_j + j - i, k + i - lam.part(i));
      }
    Polynomial weight = det_poly(m);
    if (!weight.is_zero()) result += schur_s(mu) * weight;
  }
  return result;
}

Polynomial factorial_q_rhs(const KStrictPartition& lam) {
  const int len = lam.length();
  const int k = lam.k();
  for (int i = 1; i <= len; ++i)
    if (lam.part(i) <= k) throw std::invalid_argument("factorial Q-expansion needs every part > k");
  // strict partitions mu contained in lam with exactly len parts, all > k
  std::vector<Parts> mus;
  Parts current;
  std::function<void(int)> gen = [&](int i) {
    if (i > len) {
      mus.push_back(current);
      return;
    }
    const int hi = std::min(lam.part(i), i > 1 ? current[i - 2] - 1 : lam.part(1));
    for (int p = hi; p > k; --p) {
      current.push_back(p);
      gen(i + 1);
      current.pop_back();
    }
  };
  gen(1);
  Polynomial result;
  for (const auto& mu : mus) {
    std::vector<std::vector<Polynomial>> m(len, std::vector<Polynomial>(len));
    for (int i = 1; i <= len; ++i)
      for (int j = 1; j <= len; ++j)
        m[i - 1][j - 1] = complete_sym_neg(lam.part(i) - mu[j - 1], k + 1 - lam.part(i));
    Polynomial weight = det_poly(m);
    if (!weight.is_zero()) result += schur_q(mu) * weight;
  }
  return result;
}

}  // namespace thetaforge
