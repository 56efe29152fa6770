#include "thetaforge/ring.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace thetaforge {

namespace {

// Monomials of e_j / h_j over t_1..t_r, built by direct enumeration.
void combinations(int r, int j, bool repeats, int start, std::vector<int>& stack, Polynomial& out) {
  if (j == 0) {
    Monomial::Exponents tpart;
    for (int idx : stack) {
      if (!tpart.empty() && tpart.back().first == idx)
        ++tpart.back().second;
      else
        tpart.emplace_back(idx, 1);
    }
    out.add_term(Monomial::from_parts({}, std::move(tpart)), 1);
    return;
  }
  for (int idx = start; idx <= r; ++idx) {
    stack.push_back(idx);
    combinations(r, j - 1, repeats, repeats ? idx : idx + 1, stack, out);
    stack.pop_back();
  }
}

}  // namespace

Polynomial elem_sym(int j, int r) {
  if (j < 0) return Polynomial::zero();
  if (j == 0) return Polynomial::one();
  if (r <= 0 || j > r) return Polynomial::zero();
  Polynomial out;
  std::vector<int> stack;
  combinations(r, j, false, 1, stack, out);
  return out;
}

Polynomial complete_sym(int j, int r) {
  if (r < 0) return elem_sym(j, -r);
  if (j < 0) return Polynomial::zero();
  if (j == 0) return Polynomial::one();
  if (r == 0) return Polynomial::zero();
  Polynomial out;
  std::vector<int> stack;
  combinations(r, j, true, 1, stack, out);
  return out;
}

Polynomial complete_sym_neg(int j, int r) {
  Polynomial h = complete_sym(j, r);
  return (j % 2 == 0) ? h : -h;
}

const Polynomial& c_power(int p, int r) {
  static std::map<std::pair<int, int>, Polynomial> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({p, r});
  if (it != cache.end()) return it->second;
  Polynomial value;
  if (p == 0) {
    value = Polynomial::one();
  } else if (p > 0) {
    for (int j = 0; j <= p; ++j) {
      Polynomial h = complete_sym_neg(j, r);
      if (h.is_zero()) continue;
      value += Polynomial::c(p - j) * h;
    }
  }
  return cache.emplace(std::make_pair(p, r), std::move(value)).first->second;
}

Polynomial t_sum(int r) {
  Polynomial s;
  for (int i = 1; i <= r; ++i) s += Polynomial::t(i);
  return s;
}

Polynomial t_var_signed(int r) {
  if (r == 0) throw std::invalid_argument("t index 0 is undefined");
  return Polynomial::t(r > 0 ? r : -r);
}

}  // namespace thetaforge
