#include "thetaforge/quotient.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include <json.hpp>

#include "thetaforge/io.hpp"
#include "thetaforge/theta.hpp"

namespace thetaforge {

void BasisCombination::add(const Parts& key, const Polynomial& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = coeffs.emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

namespace {

std::map<Parts, Coefficient> reduce_compute(const Parts& parts, int k) {
  // Find the largest repeated part above k (parts are sorted decreasingly).
  int pos = -1;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] > k && parts[i] == parts[i + 1]) {
      pos = static_cast<int>(i);
      break;
    }
  if (pos < 0) {
    Parts key = parts;
    while (!key.empty() && key.back() == 0) key.pop_back();
    return {{key, Coefficient(1)}};
  }
  const int p = parts[pos];
  Parts rest;
  rest.reserve(parts.size() - 2);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (i != static_cast<std::size_t>(pos) && i != static_cast<std::size_t>(pos) + 1)
      rest.push_back(parts[i]);
  std::map<Parts, Coefficient> result;
  for (int i = 1; i <= p; ++i) {
    Parts next = rest;
    next.push_back(p + i);
    if (p - i > 0) next.push_back(p - i);
    std::sort(next.rbegin(), next.rend());
    if (!dominance_leq(parts, next) || next == parts)
      throw std::logic_error("rewrite failed to increase dominance");
    const Coefficient sign = (i % 2 == 1) ? 2 : -2;
    for (const auto& [key, coeff] : reduce_monomial(next, k)) {
      auto [it, inserted] = result.emplace(key, sign * coeff);
      if (!inserted) {
        it->second += sign * coeff;
        if (it->second == 0) result.erase(it);
      }
    }
  }
  return result;
}

}  // namespace

const std::map<Parts, Coefficient>& reduce_monomial(const Parts& parts, int k) {
  static std::map<std::pair<int, Parts>, std::map<Parts, Coefficient>> cache;
  static std::mutex mutex;
  Parts sorted = parts;
  std::sort(sorted.rbegin(), sorted.rend());
  while (!sorted.empty() && sorted.back() <= 0) sorted.pop_back();
  std::pair<int, Parts> key{k, sorted};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto value = reduce_compute(key.second, k);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::move(key), std::move(value)).first->second;
}

CNormalForm normal_form(const Polynomial& f, int k) {
  CNormalForm nf;
  nf.k = k;
  for (const auto& [m, v] : f.terms()) {
    Parts parts;
    for (const auto& [p, e] : m.c_exponents())
      for (int rep = 0; rep < e; ++rep) parts.push_back(p);
    std::sort(parts.rbegin(), parts.rend());
    const Polynomial tpart = Polynomial::term(Monomial::from_parts({}, m.t_exponents()), v);
    for (const auto& [key, coeff] : reduce_monomial(parts, k)) nf.add(key, tpart * coeff);
  }
  return nf;
}

Polynomial lift(const CNormalForm& nf) {
  Polynomial f;
  for (const auto& [parts, b] : nf.coeffs) {
    Polynomial mono = Polynomial::one();
    for (int p : parts) mono = mono * Polynomial::c(p);
    f += mono * b;
  }
  return f;
}

const CNormalForm& theta_normal_form(int k, const Parts& lam) {
  static std::map<std::pair<int, Parts>, CNormalForm> cache;
  static std::mutex mutex;
  std::pair<int, Parts> key{k, lam};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const KStrictPartition partition(k, lam);
  CNormalForm nf = normal_form(theta_double(partition), k);
  // Triangularity: coefficient of c_lam is 1; all other keys of full
  // degree strictly dominate lam.
  const int weight = partition.weight();
  auto self = nf.coeffs.find(partition.parts());
  if (self == nf.coeffs.end() || self->second != Polynomial::one())
    throw std::logic_error("theta normal form: coefficient of c_lambda is not 1");
  for (const auto& [key2, b] : nf.coeffs) {
    int w = 0;
    for (int p : key2) w += p;
    if (w == weight && key2 != partition.parts()) {
      if (!dominance_leq(partition.parts(), key2) || !b.is_homogeneous())
        throw std::logic_error("theta normal form: triangularity violated");
    }
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::move(key), std::move(nf)).first->second;
}

ThetaExpansion theta_expansion(const Polynomial& f, int k) {
  CNormalForm g = normal_form(f, k);
  ThetaExpansion result;
  result.k = k;
  while (!g.empty()) {
    // maximal c-degree currently present
    int dmax = -1;
    for (const auto& [key, b] : g.coeffs) {
      int w = 0;
      for (int p : key) w += p;
      dmax = std::max(dmax, w);
    }
    // dominance-minimal key among the maximal-degree ones; repeated
    // scans walk strictly down in the finite poset until stable
    const Parts* pivot = nullptr;
    for (const auto& [key, b] : g.coeffs) {
      int w = 0;
      for (int p : key) w += p;
      if (w == dmax) {
        pivot = &key;
        break;
      }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [key, b] : g.coeffs) {
        int w = 0;
        for (int p : key) w += p;
        if (w != dmax || key == *pivot) continue;
        if (dominance_leq(key, *pivot)) {
          pivot = &key;
          changed = true;
        }
      }
    }
    const Parts lam = *pivot;
    const Polynomial b = g.coeffs.at(lam);
    if (!result.coeffs.emplace(lam, b).second)
      throw std::logic_error("theta expansion revisited a key");
    const CNormalForm& nf = theta_normal_form(k, lam);
    for (const auto& [key, coeff] : nf.coeffs) g.add(key, -(b * coeff));
    if (g.coeffs.count(lam)) throw std::logic_error("theta expansion failed to clear the pivot");
  }
  return result;
}

bool equal_in_quotient(const Polynomial& f, const Polynomial& g, int k) {
  return normal_form(f - g, k).empty();
}

ThetaExpansion finite_truncate(const ThetaExpansion& e, int n) {
  ThetaExpansion out;
  out.k = e.k;
  for (const auto& [key, b] : e.coeffs)
    if (KStrictPartition(e.k, key).in_pkn(n)) out.coeffs.emplace(key, b);
  return out;
}

ThetaExpansion structure_constants(const KStrictPartition& lam, const KStrictPartition& mu,
                                   int n) {
  if (lam.k() != mu.k()) throw std::invalid_argument("mixed k");
  ThetaExpansion e = theta_expansion(theta_double(lam) * theta_double(mu), lam.k());
  return n > 0 ? finite_truncate(e, n) : e;
}

std::string expansion_to_json(const BasisCombination& e, const std::string& basis) {
  nlohmann::ordered_json root;
  root["basis"] = basis;
  root["k"] = e.k;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& [key, b] : e.coeffs) {
    nlohmann::ordered_json entry;
    entry["partition"] = key;
    entry["poly"] = nlohmann::ordered_json::parse(to_json(b));
    coeffs.push_back(entry);
  }
  root["coeffs"] = coeffs;
  return root.dump();
}

BasisCombination expansion_from_json(const std::string& json, std::string* basis) {
  nlohmann::json root = nlohmann::json::parse(json);
  BasisCombination e;
  e.k = root.at("k").get<int>();
  if (basis) *basis = root.at("basis").get<std::string>();
  for (const auto& entry : root.at("coeffs")) {
    Parts key = entry.at("partition").get<Parts>();
    e.add(key, parse_json(entry.at("poly").dump()));
  }
  return e;
}

}  // namespace thetaforge
