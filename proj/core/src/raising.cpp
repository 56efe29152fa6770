#include "thetaforge/raising.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "thetaforge/ring.hpp"

namespace thetaforge {

namespace {

using StateMap = std::map<IntSeq, long long>;

// Enumerates the exponents m_{1j},...,m_{j-1,j} of the factors with
// second index j, weighted by (-1)^m for a (1-R_ij) factor (m <= 1) and
// by 1, 2(-1)^m for a (1-R_ij)(1+R_ij)^{-1} factor, since
// (1-R)(1+R)^{-1} = 1 + 2 sum_{m>=1} (-R)^m. The budget is the current
// entry at slot j: lowering past zero would leave a negative subscript,
// and later factors never touch slot j again, so the cut is exact.
void enumerate_column(const PairSet& D, int j, int i, int budget, long long weight,
                      IntSeq& offsets, StateMap& next) {
  if (i == j) {
    auto [it, inserted] = next.emplace(offsets, weight);
    if (!inserted) it->second += weight;
    return;
  }
  enumerate_column(D, j, i + 1, budget, weight, offsets, next);
  const bool in_d = D.contains(i, j);
  const int max_m = in_d ? budget : (budget >= 1 ? 1 : 0);
  for (int m = 1; m <= max_m; ++m) {
    offsets[i - 1] += m;
    offsets[j - 1] -= m;
    long long w = in_d ? 2 * (m % 2 == 0 ? 1LL : -1LL) : -1LL;
    enumerate_column(D, j, i + 1, budget - m, weight * w, offsets, next);
    offsets[i - 1] -= m;
    offsets[j - 1] += m;
  }
}

ShiftExpansion expand(const PairSet& D, int window, const IntSeq& base) {
  StateMap states;
  states.emplace(IntSeq(window, 0), 1LL);
  for (int j = window; j >= 2; --j) {
    StateMap next;
    for (const auto& [offsets, weight] : states) {
      if (weight == 0) continue;
      IntSeq work = offsets;
      const int budget = seq_entry(base, j) + offsets[j - 1];
      enumerate_column(D, j, 1, budget, weight, work, next);
    }
    states = std::move(next);
  }
  ShiftExpansion result;
  result.reserve(states.size());
  for (auto& [offsets, weight] : states)
    if (weight != 0) result.push_back({weight, offsets});
  return result;
}

}  // namespace

const ShiftExpansion& expand_operator(const PairSet& D, int window, const IntSeq& base) {
  if (!is_order_ideal(D)) throw std::invalid_argument("not a valid set of pairs");
  using Key = std::tuple<std::vector<Pair>, int, IntSeq>;
  static std::map<Key, ShiftExpansion> cache;
  static std::mutex mutex;
  Key key{D.pairs(), window, seq_trim(base)};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  ShiftExpansion value = expand(D, window, base);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::move(key), std::move(value)).first->second;
}

ShiftExpansion expand_operator(const PairSet& D, int window) {
  if (!is_order_ideal(D)) throw std::invalid_argument("not a valid set of pairs");
  if (!D.restricted(window).empty())
    throw std::invalid_argument("formal expansion of (1+R)^-1 factors needs base entries");
  // All factors are (1-R_ij); a budget of `window` per slot admits every
  // signed subset since each factor lowers its slot by at most one.
  IntSeq base(window, window);
  return expand(D, window, base);
}

Polynomial t_poly(const PairSet& D, const IntSeq& mu, int k) {
  return t_poly(D, mu, k, seq_support(mu));
}

Polynomial t_poly(const PairSet& D, const IntSeq& mu, int k, int window) {
  if (!is_order_ideal(D)) throw std::invalid_argument("not a valid set of pairs");
  if (window < seq_support(mu)) throw std::invalid_argument("window smaller than sequence support");
  IntSeq padded(window, 0);
  for (int j = 1; j <= window; ++j) padded[j - 1] = seq_entry(mu, j);
  IntSeq gamma = gamma_seq(D, padded, k);
  const ShiftExpansion& terms = expand_operator(D, window, padded);
  Polynomial result;
  for (const auto& term : terms) {
    Polynomial prod = Polynomial::constant(term.coeff);
    for (int j = 1; j <= window; ++j) {
      const int p = padded[j - 1] + term.shift[j - 1];
      if (p == 0) continue;  // c^r_0 = 1
      prod = prod * c_power(p, gamma[j - 1]);
    }
    result += prod;
  }
  return result;
}

Polynomial two_row_ratio(int p, int q, int rp, int rq) {
  Polynomial result = c_power(p, rp) * c_power(q, rq);
  for (int m = 1; m <= q; ++m) {
    Polynomial prod = c_power(p + m, rp) * c_power(q - m, rq);
    result += (m % 2 == 0) ? prod * Coefficient(2) : prod * Coefficient(-2);
  }
  return result;
}

}  // namespace thetaforge
