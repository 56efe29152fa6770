#include "thetaforge/chevalley.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "thetaforge/io.hpp"
#include "thetaforge/raising.hpp"
#include "thetaforge/ring.hpp"
#include "thetaforge/theta.hpp"

namespace thetaforge {

std::string to_string(CoverKind kind) {
  switch (kind) {
    case CoverKind::I: return "I";
    case CoverKind::IIa: return "IIa";
    case CoverKind::IIb: return "IIb";
    case CoverKind::IIc: return "IIc";
  }
  return "?";
}

bool k_related(std::pair<int, int> box1, std::pair<int, int> box2, int k) {
  const auto [r1, c1] = box1;
  const auto [r2, c2] = box2;
  if (r1 < 1 || c1 < 1 || r2 < 1 || c2 < 1) throw std::invalid_argument("boxes need positive coordinates");
  return std::abs(c1 - k - 1) + r1 == std::abs(c2 - k - 1) + r2;
}

namespace {

int column_height(const Parts& parts, int col) {
  int h = 0;
  for (int p : parts)
    if (p >= col) ++h;
  return h;
}

// Full (unwindowed) pair sets differ only up to second index
// length + max part, so this window is exhaustive.
PairSet full_pair_set(const KStrictPartition& lam, int extra_len) {
  const int window = std::max(lam.length(), extra_len) + lam.part(1) + 2;
  return pair_set_C(lam, window);
}

CoverKind classify(const KStrictPartition& lam, const KStrictPartition& mu) {
  const PairSet c_lam = full_pair_set(lam, mu.length());
  const PairSet c_mu = full_pair_set(mu, lam.length());
  std::vector<Pair> added;
  for (const auto& p : c_mu.pairs())
    if (!c_lam.contains(p.first, p.second)) added.push_back(p);
  for (const auto& p : c_lam.pairs())
    if (!c_mu.contains(p.first, p.second))
      throw std::logic_error("cover lost a pair of C(lambda)");
  if (added.empty()) return CoverKind::I;

  // locate the box difference
  std::vector<std::pair<int, int>> gained, lost;
  const int len = std::max(lam.length(), mu.length());
  for (int i = 1; i <= len; ++i) {
    for (int c = lam.part(i) + 1; c <= mu.part(i); ++c) gained.push_back({i, c});
    for (int c = mu.part(i) + 1; c <= lam.part(i); ++c) lost.push_back({i, c});
  }
  if (lost.empty() && gained.size() == 1) {
    const int h = gained[0].first;
    bool all_row_h = true, all_col_h = true;
    for (const auto& [i, j] : added) {
      all_row_h = all_row_h && i == h;
      all_col_h = all_col_h && j == h;
    }
    if (added.size() == 1 && all_row_h) return CoverKind::IIa;
    if (all_col_h && mu.part(h) <= mu.k()) return CoverKind::IIb;
    throw std::logic_error("unrecognized single-box cover shape");
  }
  // removal shape: r boxes lost, r+1 gained in one row
  const int h = gained.empty() ? 0 : gained[0].first;
  bool one_row = true;
  for (const auto& [i, j] : gained) one_row = one_row && i == h;
  bool all_row_h = true;
  for (const auto& [i, j] : added) all_row_h = all_row_h && i == h;
  if (one_row && all_row_h && gained.size() == lost.size() + 1 && added.size() == lost.size())
    return CoverKind::IIc;
  throw std::logic_error("unrecognized cover shape");
}

}  // namespace

std::vector<ChevalleyTerm> chevalley_covers(const KStrictPartition& lam) {
  const int k = lam.k();
  const int len = lam.length();
  std::map<Parts, ChevalleyTerm> found;

  // (i) single box additions
  for (int h = 1; h <= len + 1; ++h) {
    if (h > 1 && lam.part(h - 1) == lam.part(h)) continue;
    Parts parts = lam.parts();
    if (h == len + 1)
      parts.push_back(1);
    else
      parts[h - 1] += 1;
    if (!KStrictPartition::is_valid(k, parts)) continue;
    KStrictPartition mu(k, parts);
    const int col = mu.part(h);
    int e = 2;
    if (col == k + 1) e = 1;
    for (int c = 1; c <= k && e == 2; ++c) {
      const int height = column_height(mu.parts(), c);
      if (height >= 1 && k_related({h, col}, {height, c}, k)) e = 1;
    }
    found.emplace(parts, ChevalleyTerm{mu, e, classify(lam, mu)});
  }

  // (ii) remove r boxes from one of the first k columns, add r + 1 to a row
  for (int c0 = 1; c0 <= k; ++c0) {
    const int height = column_height(lam.parts(), c0);
    for (int r = 1; r <= height; ++r) {
      const int top = height - r + 1;  // rows top..height lose their box
      if (lam.part(top) != c0) break;  // removed boxes must end their rows
      Parts rho = lam.parts();
      for (int x = top; x <= height; ++x) rho[x - 1] = c0 - 1;
      for (int h = 1; h <= len + 1; ++h) {
        const int base = h <= len ? rho[h - 1] : 0;
        Parts parts = rho;
        if (h == len + 1)
          parts.push_back(r + 1);
        else
          parts[h - 1] = base + r + 1;
        if (h > 1 && parts[h - 1] > (h - 2 < len ? parts[h - 2] : 0)) continue;
        if (!KStrictPartition::is_valid(k, parts)) continue;
        KStrictPartition mu(k, parts);
        // every removed box and the new bottom box of the column must be
        // k-related to one of the added boxes
        std::vector<std::pair<int, int>> added;
        for (int c = base + 1; c <= base + r + 1; ++c) added.push_back({h, c});
        auto related_to_added = [&](std::pair<int, int> box) {
          for (const auto& a : added)
            if (k_related(box, a, k)) return true;
          return false;
        };
        bool ok = true;
        for (int x = top; x <= height && ok; ++x) ok = related_to_added({x, c0});
        const int new_height = column_height(mu.parts(), c0);
        if (ok && new_height >= 1) ok = related_to_added({new_height, c0});
        if (!ok) continue;
        found.emplace(parts, ChevalleyTerm{mu, 1, classify(lam, mu)});
      }
    }
  }

  std::vector<ChevalleyTerm> covers;
  for (auto& [parts, term] : found) {
    if (term.mu.weight() != lam.weight() + 1)
      throw std::logic_error("cover changed the weight by more than one box");
    if ((term.multiplicity == 2) != (term.kind == CoverKind::IIa))
      throw std::logic_error("multiplicity 2 must match type IIa");
    covers.push_back(std::move(term));
  }
  return covers;
}

Polynomial chevalley_t_coeff(const KStrictPartition& lam) {
  const int k = lam.k();
  const int len = lam.length();
  const int lk = lam.k_length();
  const IntSeq beta = beta_seq(lam, len);
  Polynomial coeff;
  for (int j = k + 1; j <= k + len; ++j) coeff += Polynomial::t(j);
  for (int j = 1; j <= lk; ++j) coeff += Polynomial::t(lam.part(j) - k);
  for (int j = lk + 1; j <= len; ++j) {
    if (beta[j - 1] <= 0) throw std::logic_error("beta_j must be positive beyond the k-length");
    coeff -= Polynomial::t(beta[j - 1]);
  }
  return coeff;
}

ChevalleyReport verify_chevalley(const KStrictPartition& lam) {
  ChevalleyReport report{lam, false, {}, {}, chevalley_covers(lam)};
  const KStrictPartition one(lam.k(), {1});
  report.lhs = theta_expansion(theta_double(one) * theta_double(lam), lam.k());
  report.rhs.k = lam.k();
  report.rhs.add(lam.parts(), chevalley_t_coeff(lam));
  for (const auto& term : report.covers)
    report.rhs.add(term.mu.parts(), Polynomial::constant(term.multiplicity));
  report.pass = report.lhs == report.rhs;
  return report;
}

std::string ChevalleyReport::to_json() const {
  nlohmann::ordered_json root;
  root["lambda"] = lam.parts();
  root["k"] = lam.k();
  root["pass"] = pass;
  root["lhs"] = nlohmann::ordered_json::parse(expansion_to_json(lhs, "theta"));
  root["rhs"] = nlohmann::ordered_json::parse(expansion_to_json(rhs, "theta"));
  nlohmann::ordered_json cov = nlohmann::ordered_json::array();
  for (const auto& term : covers) {
    nlohmann::ordered_json entry;
    entry["mu"] = term.mu.parts();
    entry["e"] = term.multiplicity;
    entry["kind"] = to_string(term.kind);
    cov.push_back(entry);
  }
  root["covers"] = cov;
  return root.dump();
}

Polynomial chevalley_product_term(const KStrictPartition& lam, int h) {
  const int len = lam.length();
  if (h < 1 || h > len + 1) throw std::invalid_argument("row index out of range");
  IntSeq seq(lam.parts().begin(), lam.parts().end());
  seq.resize(len + 1, 0);
  seq[h - 1] += 1;
  return t_poly(pair_set_C(lam, len), seq, lam.k(), len + 1);
}

namespace {

bool weight_cond(const KStrictPartition& lam, int h, int i, int j) {
  // W(i,j) evaluated on lam + e_h
  const int ai = lam.part(i) + (i == h ? 1 : 0);
  const int aj = lam.part(j) + (j == h ? 1 : 0);
  return ai + aj > 2 * lam.k() + j - i;
}

bool is_outer_corner(const PairSet& C, int i, int j) {
  if (C.contains(i, j)) return false;
  for (int r = 1; r < i; ++r)
    if (!C.contains(r, j)) return false;
  for (int c = i + 1; c < j; ++c)
    if (!C.contains(i, c)) return false;
  return true;
}

}  // namespace

std::vector<Parts> decompose_product_term(const KStrictPartition& lam, int h) {
  const int len = lam.length();
  const int k = lam.k();
  const int lk = lam.k_length();
  if (h < 1 || h > len) throw std::invalid_argument("decomposition is stated for rows 1..length");
  const PairSet C = pair_set_C(lam, len);

  auto add_box = [&](int row) {
    Parts parts = lam.parts();
    if (row == len + 1)
      parts.push_back(1);
    else
      parts[row - 1] += 1;
    return parts;
  };

  if (h == 1 || C.contains(h - 1, h)) {
    // row case: look for the outer corner (h,c) of C with W(h,c)
    int c = 0;
    for (int cc = h + 1; cc <= len; ++cc)
      if (is_outer_corner(C, h, cc) && weight_cond(lam, h, h, cc)) {
        c = cc;
        break;
      }
    if (c == 0) {
      if (h >= 2 && lam.part(h) > k && lam.part(h - 1) == lam.part(h) + 1) return {};
      return {add_box(h)};
    }
    int g = len + 1;
    if (h >= 2) {
      g = lk + 1;
      while (g <= len && (g <= h - 1 || C.contains(h - 1, g))) ++g;
    }
    int d = c;
    while (d + 1 < g && lam.part(d + 1) == lam.part(c)) ++d;
    std::vector<Parts> terms{add_box(h)};
    const int lam_g = g <= len ? lam.part(g) : 0;
    if (lam.part(c) > lam_g) {
      Parts parts = add_box(h);
      for (int j = c; j <= d; ++j) {
        parts[j - 1] -= 1;
        parts[h - 1] += 1;
      }
      while (!parts.empty() && parts.back() == 0) parts.pop_back();
      terms.push_back(parts);
    }
    return terms;
  }

  // column case: look for the outer corner (r,h) of C with W(r,h)
  int r = 0;
  for (int rr = 1; rr < h; ++rr)
    if (is_outer_corner(C, rr, h) && weight_cond(lam, h, rr, h)) {
      r = rr;
      break;
    }
  if (r == 0) {
    if (lam.part(h) == lam.part(h - 1)) return {};
    return {add_box(h)};
  }
  std::vector<Parts> terms{add_box(r)};
  const bool drop = lam.part(h) == lam.part(h - 1) || (h == lk + 1 && lam.part(h) == k);
  if (!drop) terms.push_back(add_box(h));
  return terms;
}

bool check_product_decomposition(const KStrictPartition& lam, std::string* detail) {
  const int len = lam.length();
  const int k = lam.k();
  std::ostringstream log;
  bool ok = true;

  // raising-operator product identity, exact in Z[c,t]
  Polynomial coeff = t_sum(k + len);
  for (int j = 1; j <= lam.k_length(); ++j) coeff += Polynomial::t(lam.part(j) - k);
  const IntSeq beta = beta_seq(lam, len);
  for (int j = lam.k_length() + 1; j <= len; ++j) coeff -= Polynomial::t(beta[j - 1]);
  Polynomial rhs = coeff * theta_double(lam);
  for (int h = 1; h <= len + 1; ++h) rhs += chevalley_product_term(lam, h);
  if (Polynomial::c(1) * theta_double(lam) != rhs) {
    ok = false;
    log << "product identity failed in Z[c,t]; ";
  }

  // per-row decompositions, in the quotient
  std::map<Parts, int> from_terms;
  for (int h = 1; h <= len; ++h) {
    Polynomial expected;
    for (const auto& parts : decompose_product_term(lam, h)) {
      expected += theta_double(KStrictPartition(k, parts));
      from_terms[parts] += 1;
    }
    if (!equal_in_quotient(chevalley_product_term(lam, h), expected, k)) {
      ok = false;
      log << "row " << h << " decomposition failed; ";
    }
  }

  // the remaining term carries whatever the covers still require
  Polynomial residual;
  std::map<Parts, int> expected_terms;
  for (const auto& term : chevalley_covers(lam)) expected_terms[term.mu.parts()] = term.multiplicity;
  for (const auto& [parts, count] : from_terms) {
    auto it = expected_terms.find(parts);
    if (it == expected_terms.end() || it->second < count) {
      ok = false;
      log << "decomposition produced a non-cover term; ";
      continue;
    }
  }
  for (const auto& [parts, e] : expected_terms) {
    const int have = from_terms.count(parts) ? from_terms.at(parts) : 0;
    if (e < have) {
      ok = false;
      log << "cover multiplicity exceeded; ";
    }
    residual += theta_double(KStrictPartition(k, parts)) * Coefficient(e - have);
  }
  if (!equal_in_quotient(chevalley_product_term(lam, len + 1), residual, k)) {
    ok = false;
    log << "new-row term does not close the cover sum; ";
  }

  if (detail) *detail = log.str();
  return ok;
}

}  // namespace thetaforge
