#include "thetaforge/divdiff.hpp"

#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include "thetaforge/theta.hpp"
#include "thetaforge/weyl.hpp"

namespace thetaforge {

namespace {

// s_0(c_p) = c_p + 2 sum_{j=1}^p (-t_1)^j c_{p-j}
const Polynomial& s0_of_c(int p) {
  static std::map<int, Polynomial> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  Polynomial value = Polynomial::c(p);
  for (int j = 1; j <= p; ++j) {
    Polynomial term = Polynomial::term(Monomial::t(1, j), (j % 2 == 0) ? 2 : -2);
    value += term * Polynomial::c(p - j);
  }
  return cache.emplace(p, std::move(value)).first->second;
}

Polynomial apply_s0(const Polynomial& f) {
  Polynomial result;
  for (const auto& [m, v] : f.terms()) {
    int t1_exp = 0;
    Monomial::Exponents tpart;
    for (const auto& [i, e] : m.t_exponents()) {
      if (i == 1)
        t1_exp = e;
      else
        tpart.emplace_back(i, e);
    }
    if (t1_exp > 0) tpart.insert(tpart.begin(), {1, t1_exp});
    Coefficient coeff = (t1_exp % 2 == 0) ? v : -v;
    Polynomial term = Polynomial::term(Monomial::from_parts({}, std::move(tpart)), coeff);
    for (const auto& [p, e] : m.c_exponents())
      for (int rep = 0; rep < e; ++rep) term = term * s0_of_c(p);
    result += term;
  }
  return result;
}

}  // namespace

Polynomial weyl_act(int i, const Polynomial& f) {
  if (i < 0) throw std::invalid_argument("generator index must be nonnegative");
  if (i == 0) return apply_s0(f);
  return f.swap_t(i, i + 1);
}

Polynomial divide_t_diff(const Polynomial& f, int i, int j) {
  // split f by the exponent of t_i
  std::map<int, Polynomial> layers;
  for (const auto& [m, v] : f.terms()) {
    int d = 0;
    Monomial::Exponents tpart;
    for (const auto& [idx, e] : m.t_exponents()) {
      if (idx == i)
        d = e;
      else
        tpart.emplace_back(idx, e);
    }
    layers[d].add_term(Monomial::from_parts(m.c_exponents(), std::move(tpart)), v);
  }
  Polynomial remainder;
  for (const auto& [d, g] : layers)
    remainder += g * Polynomial::term(Monomial::t(j, d), 1);
  if (!remainder.is_zero()) throw std::logic_error("polynomial is not divisible by t_i - t_j");
  Polynomial quotient;
  for (const auto& [d, g] : layers) {
    if (d == 0) continue;
    for (int u = 0; u <= d - 1; ++u) {
      Monomial m;
      if (u > 0) m = m * Monomial::t(i, u);
      if (d - 1 - u > 0) m = m * Monomial::t(j, d - 1 - u);
      quotient += g * Polynomial::term(m, 1);
    }
  }
  return quotient;
}

Polynomial divided_diff(int i, const Polynomial& f) {
  if (i == 0) {
    Polynomial numerator = f - apply_s0(f);
    Polynomial result;
    for (const auto& [m, v] : numerator.terms()) {
      if (v % 2 != 0) throw std::logic_error("numerator of partial_0 has an odd coefficient");
      int t1_exp = 0;
      Monomial::Exponents tpart;
      for (const auto& [idx, e] : m.t_exponents()) {
        if (idx == 1)
          t1_exp = e;
        else
          tpart.emplace_back(idx, e);
      }
      if (t1_exp == 0) throw std::logic_error("numerator of partial_0 is not divisible by t_1");
      if (t1_exp > 1) tpart.insert(tpart.begin(), {1, t1_exp - 1});
      result.add_term(Monomial::from_parts(m.c_exponents(), std::move(tpart)), v / 2);
    }
    return result;
  }
  return divide_t_diff(f - f.swap_t(i, i + 1), i + 1, i);
}

bool verify_descent(const KStrictPartition& lam, int i) {
  const int k = lam.k();
  const int n = std::max(min_rank(lam), i + 1);
  const SignedPermutation w = partition_to_w(lam, n);
  const SignedPermutation shorter = SignedPermutation::simple(i, n) * w;
  if (coxeter_length(shorter) != coxeter_length(w) - 1 || !is_k_grassmannian(shorter, k))
    throw std::invalid_argument("not a left descent");
  const KStrictPartition mu = grassmannian_to_partition(shorter, k);
  return divided_diff(i, theta_double(lam)) == theta_double(mu);
}

KStrictPartition top_partition(int k, int n) {
  if (n <= k) throw std::invalid_argument("rank too small");
  Parts parts;
  for (int p = n + k; p >= 2 * k + 1; --p) parts.push_back(p);
  return KStrictPartition(k, std::move(parts));
}

namespace {

std::vector<int> build_word(const KStrictPartition& lam, int n, std::mt19937_64* rng) {
  if (!lam.in_pkn(n)) throw std::invalid_argument("partition does not fit in P(k,n)");
  const KStrictPartition lam0 = top_partition(lam.k(), n);
  const SignedPermutation w_top = partition_to_w(lam0, n);
  if (!(w_top * w_top).is_identity()) throw std::logic_error("w_{lam_0} must be an involution");
  SignedPermutation u = partition_to_w(lam, n) * w_top;
  int len = coxeter_length(u);
  if (len != lam0.weight() - lam.weight())
    throw std::logic_error("w_lam w_{lam_0} is not reduced of the expected length");
  std::vector<int> word;
  while (len > 0) {
    std::vector<int> descents;
    const SignedPermutation u_inv = u.inverse();
    for (int i = 0; i < n; ++i)
      if (has_right_descent(u_inv, i)) descents.push_back(i);
    if (descents.empty()) throw std::logic_error("no left descent found");
    int a = descents.front();
    if (rng != nullptr)
      a = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(*rng)];
    word.push_back(a);
    u = SignedPermutation::simple(a, n) * u;
    const int next = coxeter_length(u);
    if (next != len - 1) throw std::logic_error("descent step failed to shorten");
    len = next;
  }
  return word;
}

}  // namespace

std::vector<int> word_to_top(const KStrictPartition& lam, int n) {
  return build_word(lam, n, nullptr);
}

std::vector<int> word_to_top(const KStrictPartition& lam, int n, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  return build_word(lam, n, &rng);
}

Polynomial theta_from_top(const KStrictPartition& lam, int n) {
  return theta_from_top(lam, n, word_to_top(lam, n));
}

Polynomial theta_from_top(const KStrictPartition& lam, int n, const std::vector<int>& word) {
  if (!lam.in_pkn(n)) throw std::invalid_argument("partition does not fit in P(k,n)");
  const KStrictPartition lam0 = top_partition(lam.k(), n);
  SignedPermutation check = SignedPermutation::identity(n);
  for (int a : word) check = check * SignedPermutation::simple(a, n);
  if (!(check == partition_to_w(lam, n) * partition_to_w(lam0, n)))
    throw std::invalid_argument("word does not multiply to w_lam w_{lam_0}");
  if (static_cast<int>(word.size()) != lam0.weight() - lam.weight())
    throw std::invalid_argument("word is not reduced");
  Polynomial g = theta_double(lam0);
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = divided_diff(*it, g);
  return g;
}

}  // namespace thetaforge
