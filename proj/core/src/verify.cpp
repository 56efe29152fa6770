#include "thetaforge/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "thetaforge/chevalley.hpp"
#include "thetaforge/divdiff.hpp"
#include "thetaforge/io.hpp"
#include "thetaforge/quotient.hpp"
#include "thetaforge/raising.hpp"
#include "thetaforge/ring.hpp"
#include "thetaforge/theta.hpp"
#include "thetaforge/weyl.hpp"

namespace thetaforge {

namespace {

struct Checker {
  SuiteResult& result;

  void check(bool ok, const std::string& what) {
    ++result.cases;
    if (!ok) result.failures.push_back(what);
  }
};

// ---------------------------------------------------------------- helpers

std::vector<PairSet> order_ideals(int window) {
  std::vector<Pair> all;
  for (int j = 2; j <= window; ++j)
    for (int i = 1; i < j; ++i) all.emplace_back(i, j);
  std::vector<PairSet> ideals;
  const int subsets = 1 << all.size();
  for (int s = 0; s < subsets; ++s) {
    std::vector<Pair> pairs;
    for (std::size_t b = 0; b < all.size(); ++b)
      if (s & (1 << b)) pairs.push_back(all[b]);
    PairSet D(pairs);
    if (is_order_ideal(D)) ideals.push_back(D);
  }
  return ideals;
}

// R^D c^gamma_base for an explicit superscript vector
Polynomial r_poly(const PairSet& D, const IntSeq& base, const IntSeq& gamma) {
  const int window = static_cast<int>(base.size());
  Polynomial result;
  for (const auto& term : expand_operator(D, window, base)) {
    Polynomial prod = Polynomial::constant(term.coeff);
    for (int j = 1; j <= window; ++j) {
      const int p = base[j - 1] + term.shift[j - 1];
      if (p == 0) continue;
      prod = prod * c_power(p, gamma[j - 1]);
    }
    result += prod;
  }
  return result;
}

Polynomial random_poly(std::mt19937_64& rng, int max_terms, int max_c, int max_t, int max_deg) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> cvar(0, max_c);
  std::uniform_int_distribution<int> tvar(0, max_t);
  Polynomial f;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m;
    int deg = 0;
    while (deg < max_deg) {
      const int p = cvar(rng);
      if (p == 0) break;
      if (deg + p > max_deg) break;
      m = m * Monomial::c(p);
      deg += p;
    }
    while (deg < max_deg) {
      const int i = tvar(rng);
      if (i == 0) break;
      m = m * Monomial::t(i);
      deg += 1;
    }
    f += Polynomial::term(m, coeff(rng));
  }
  return f;
}

void all_monomials_rec(int budget, int next_c, int max_c, int max_t, Monomial m,
                       std::vector<Monomial>& out) {
  // c-part chosen with indices descending, then all t-fillings
  for (int p = std::min(budget, next_c); p >= 1; --p)
    all_monomials_rec(budget - p, p, max_c, max_t, m * Monomial::c(p), out);
  std::function<void(int, int, Monomial)> fill_t = [&](int rem, int next_t, Monomial cur) {
    out.push_back(cur);
    for (int i = std::min(next_t, max_t); i >= 1 && rem > 0; --i)
      fill_t(rem - 1, i, cur * Monomial::t(i));
  };
  fill_t(budget, max_t, m);
}

std::vector<Monomial> all_monomials(int max_deg, int max_c, int max_t) {
  std::vector<Monomial> out;
  all_monomials_rec(max_deg, max_c, max_c, max_t, Monomial{}, out);
  return out;
}

std::string lam_tag(const KStrictPartition& lam) {
  return "k=" + std::to_string(lam.k()) + " lam=(" + lam.to_string() + ")";
}

// ---------------------------------------------------------------- lemmas-1

void run_lemmas1(Checker& c, const SuiteOptions& opts) {
  // c^r_p recurrences
  for (int p = 0; p <= 10; ++p)
    for (int r = 1; r <= 5; ++r)
      c.check(c_power(p, r) == c_power(p, r - 1) - Polynomial::t(r) * c_power(p - 1, r),
              "recurrence (a) p=" + std::to_string(p) + " r=" + std::to_string(r));
  for (int p = 0; p <= 10; ++p)
    for (int r = -5; r <= 0; ++r)
      c.check(c_power(p, r) ==
                  c_power(p, r - 1) + t_var_signed(r - 1) * c_power(p - 1, r),
              "recurrence (b) p=" + std::to_string(p) + " r=" + std::to_string(r));

  // generating series: sum_{a+b=d} e_a(t) h_b(-t) = delta_{d0}
  for (int r = 0; r <= 5; ++r)
    for (int d = 1; d <= 8; ++d) {
      Polynomial sum;
      for (int a = 0; a <= d; ++a) sum += elem_sym(a, r) * complete_sym_neg(d - a, r);
      c.check(sum.is_zero(), "generating series r=" + std::to_string(r) + " d=" + std::to_string(d));
    }

  // degenerate values and homogeneity
  for (int r = -6; r <= 6; ++r) {
    c.check(c_power(-1, r).is_zero() && c_power(-3, r).is_zero(),
            "c^r_p = 0 for p < 0, r=" + std::to_string(r));
    c.check(c_power(0, r) == Polynomial::one(), "c^r_0 = 1, r=" + std::to_string(r));
  }
  for (int p = 1; p <= 8; ++p)
    for (int r = -5; r <= 5; ++r)
      c.check(c_power(p, r).is_homogeneous() && c_power(p, r).degree() == p,
              "homogeneity p=" + std::to_string(p) + " r=" + std::to_string(r));

  // T-identity with its cancellation case, on valid sets within window 4
  for (int k = 0; k <= std::min(2, opts.k_max); ++k) {
    for (int window = 2; window <= 4; ++window) {
      for (const auto& D : order_ideals(window)) {
        for (const auto& [i, j] : outer_corners(D, window)) {
          std::vector<IntSeq> mus;
          std::function<void(IntSeq&)> gen = [&](IntSeq& mu) {
            if (static_cast<int>(mu.size()) == window) {
              mus.push_back(mu);
              return;
            }
            const int slot = static_cast<int>(mu.size()) + 1;
            int lo = 0, hi = k + (slot == i ? 3 : 1);
            if (slot == i) lo = k + 1;
            if (slot == j) hi = k;
            for (int v = lo; v <= hi; ++v) {
              mu.push_back(v);
              gen(mu);
              mu.pop_back();
            }
          };
          IntSeq scratch;
          gen(scratch);
          for (const auto& mu : mus) {
            int total = 0;
            for (int v : mu) total += v;
            if (total > opts.weight_max) continue;
            for (int r = -1; r <= 1; ++r) {
              IntSeq mu_rho = mu;
              mu_rho[j - 1] += r;
              IntSeq mu_raised = mu;
              mu_raised[i - 1] += r;  // mu + R_ij rho
              IntSeq mu_low = mu_rho;
              mu_low[j - 1] -= 1;
              const IntSeq gamma = gamma_seq(D, mu_rho, k);
              const PairSet Dij = D.with_pair(i, j);
              const Polynomial lhs = t_poly(D, mu_rho, k, window);
              Polynomial rhs = t_poly(Dij, mu_rho, k, window) + t_poly(Dij, mu_raised, k, window);
              const Polynomial extra =
                  (t_var_signed(gamma[i - 1] - 1) - t_var_signed(gamma[j - 1])) *
                  r_poly(Dij, mu_low, gamma);
              c.check(lhs == rhs + extra, "T-identity D missing corner (" + std::to_string(i) +
                                              "," + std::to_string(j) + ") k=" + std::to_string(k));
              if (mu[i - 1] + mu[j - 1] + r == 2 * k + 1 + a_seq(D, j))
                c.check(lhs == rhs, "T-identity cancellation case k=" + std::to_string(k));
            }
          }
        }
      }
    }
  }

  // commuteA, exact in Z[c,t]; commuteC in the quotient
  for (int k = 0; k <= std::min(2, opts.k_max); ++k) {
    for (int window = 2; window <= 4; ++window) {
      for (const auto& D : order_ideals(window)) {
        for (int j = 1; j < window; ++j) {
          bool hypA = !D.contains(j, j + 1);
          bool hypC = D.contains(j, j + 1);
          for (int h = 1; h < j && (hypA || hypC); ++h)
            if (D.contains(h, j) != D.contains(h, j + 1)) hypA = false;
          for (int h = j + 2; h <= window && hypC; ++h)
            if (D.contains(j, h) != D.contains(j + 1, h)) hypC = false;
          if (!hypA && !hypC) continue;
          std::vector<IntSeq> seqs;
          std::function<void(IntSeq&)> gen = [&](IntSeq& s) {
            if (static_cast<int>(s.size()) == window) {
              seqs.push_back(s);
              return;
            }
            for (int v = 0; v <= k + 2; ++v) {
              s.push_back(v);
              gen(s);
              s.pop_back();
            }
          };
          IntSeq scratch;
          gen(scratch);
          for (const auto& seq : seqs) {
            int total = 0;
            for (int v : seq) total += v;
            if (total > opts.weight_max - 2) continue;
            if (hypA) {
              IntSeq swapped = seq;
              swapped[j - 1] = seq[j] - 1;
              swapped[j] = seq[j - 1] + 1;
              c.check(t_poly(D, seq, k, window) == -t_poly(D, swapped, k, window),
                      "commuteA j=" + std::to_string(j) + " k=" + std::to_string(k));
            }
            if (hypC && seq[j - 1] > k && seq[j] > k) {
              IntSeq swapped = seq;
              std::swap(swapped[j - 1], swapped[j]);
              c.check(equal_in_quotient(t_poly(D, seq, k, window),
                                        -t_poly(D, swapped, k, window), k),
                      "commuteC j=" + std::to_string(j) + " k=" + std::to_string(k));
            }
          }
        }
      }
    }
  }

  // two-row antisymmetry in the quotient
  for (int k = 0; k <= std::min(2, opts.k_max); ++k)
    for (int p = k + 1; p <= k + 4; ++p)
      for (int q = k + 1; q <= k + 4; ++q)
        c.check(equal_in_quotient(two_row_ratio(p, q, k + 1 - p, k + 1 - q),
                                  -two_row_ratio(q, p, k + 1 - q, k + 1 - p), k),
                "two-row antisymmetry p=" + std::to_string(p) + " q=" + std::to_string(q));

  // window exactness and shift nonnegativity
  for (int k = 0; k <= std::min(2, opts.k_max); ++k)
    for (const auto& lam : k_strict_partitions_up_to(k, std::min(6, opts.weight_max))) {
      if (lam.length() == 0) continue;
      const PairSet C = pair_set_C(lam, lam.length());
      const IntSeq mu(lam.parts().begin(), lam.parts().end());
      c.check(t_poly(C, mu, k) == t_poly(C, mu, k, lam.length() + 2),
              "window exactness " + lam_tag(lam));
      for (const auto& term : expand_operator(C, lam.length(), mu)) {
        bool nonneg = true;
        for (int j = 1; j <= lam.length(); ++j)
          nonneg = nonneg && mu[j - 1] + term.shift[j - 1] >= 0;
        c.check(nonneg, "shift nonnegativity " + lam_tag(lam));
      }
    }
}

// ---------------------------------------------------------------- pfaffian

// Independent route for the determinant-product identity: expand the
// geometric factors over C_l(lam) against Schur determinants.
Polynomial det_product_route(const KStrictPartition& lam) {
  const int len = lam.length();
  const IntSeq beta = beta_seq(lam, len);
  const auto C = pair_set_C(lam, len).pairs();
  Polynomial total;
  IntSeq offset(len, 0);
  // pairs processed grouped by second index descending; masses bounded by
  // the vanishing of determinant rows below j - len
  std::function<void(std::size_t, long long)> walk = [&](std::size_t idx, long long sign) {
    if (idx == C.size()) {
      IntSeq alpha(len);
      for (int j = 1; j <= len; ++j) alpha[j - 1] = lam.part(j) + offset[j - 1];
      total += schur_det(alpha, beta) * Coefficient(sign);
      return;
    }
    const auto [i, j] = C[idx];
    walk(idx + 1, sign);
    int m = 0;
    while (lam.part(j) + offset[j - 1] - 1 >= j - len) {
      ++m;
      offset[i - 1] += 1;
      offset[j - 1] -= 1;
      walk(idx + 1, (m % 2 == 0) ? sign : -sign);
      if (m > 4 * (len + lam.part(1))) throw std::logic_error("runaway geometric expansion");
    }
    offset[i - 1] -= m;
    offset[j - 1] += m;
  };
  // order by second index descending so budgets are final when consumed
  std::vector<Pair> ordered = C;
  std::sort(ordered.begin(), ordered.end(), [](const Pair& a, const Pair& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  const_cast<std::vector<Pair>&>(C) = ordered;
  walk(0, 1);
  return total;
}

void run_pfaffian(Checker& c, const SuiteOptions& opts) {
  for (int k = 0; k <= opts.k_max; ++k) {
    for (const auto& lam : k_strict_partitions_up_to(k, opts.weight_max)) {
      const int len = lam.length();
      const Polynomial& theta = theta_double(lam);
      c.check(theta.is_homogeneous() && (len == 0 || theta.degree() == lam.weight()),
              "homogeneity " + lam_tag(lam));

      // determinant-product identity
      c.check(theta == det_product_route(lam), "determinant-product form " + lam_tag(lam));
      // Pfaffian multiset-sum identity
      c.check(theta == theta_pf_sum(lam), "pfaffian-sum form " + lam_tag(lam));

      const IntSeq beta = beta_seq(lam, len);
      const IntSeq alpha(lam.parts().begin(), lam.parts().end());
      if (pair_set_C(lam, len).empty())
        c.check(theta == schur_det(alpha, beta), "determinant extreme case " + lam_tag(lam));
      if (lam.k_length() == len)
        c.check(theta == schur_pf(alpha, beta), "pfaffian extreme case " + lam_tag(lam));

      bool s_domain = true;
      for (int j = 2; j <= len; ++j)
        for (int i = 1; i < j; ++i)
          if (lam.part(i) + lam.part(j) > 2 * k + j - i) s_domain = false;
      if (s_domain)
        c.check(theta == factorial_s_rhs(lam), "factorial S expansion " + lam_tag(lam));
      if (lam.k_length() == len)
        c.check(equal_in_quotient(theta, factorial_q_rhs(lam), k),
                "factorial Q expansion " + lam_tag(lam));

      // triangularity is asserted inside theta_normal_form
      try {
        const CNormalForm& nf = theta_normal_form(k, lam.parts());
        c.check(nf.coeffs.count(lam.parts()) == 1, "triangular normal form " + lam_tag(lam));
      } catch (const std::exception& e) {
        c.check(false, std::string("triangularity: ") + e.what() + " " + lam_tag(lam));
      }
    }
  }
}

// ---------------------------------------------------------------- chevalley

void run_chevalley(Checker& c, const SuiteOptions& opts) {
  for (int k = 0; k <= opts.k_max; ++k) {
    for (const auto& lam : k_strict_partitions_up_to(k, opts.weight_max)) {
      const ChevalleyReport report = verify_chevalley(lam);
      c.check(report.pass, "chevalley rule " + lam_tag(lam));

      // coefficient agreement with the localization formula
      c.check(chevalley_t_coeff(lam) == localization_sigma1(lam),
              "coefficient vs localization " + lam_tag(lam));

      // the index identity behind the agreement
      const int len = lam.length();
      const int lk = lam.k_length();
      const SignedPermutation w = partition_to_w(lam, min_rank(lam));
      Polynomial lhs;
      for (int j = 1; j <= k; ++j) lhs += Polynomial::t(w.value(j));
      for (int j = 1; j <= lk; ++j) lhs += Polynomial::t(lam.part(j) - k);
      const IntSeq beta = beta_seq(lam, len);
      for (int j = lk + 1; j <= len; ++j) lhs += Polynomial::t(beta[j - 1]);
      c.check(lhs == t_sum(k + len), "index identity " + lam_tag(lam));

      // cover sanity
      for (const auto& term : report.covers) {
        c.check(term.mu.weight() == lam.weight() + 1, "cover weight " + lam_tag(lam));
        c.check((term.multiplicity == 2) == (term.kind == CoverKind::IIa),
                "cover multiplicity/kind " + lam_tag(lam));
      }
    }
  }

  // bijection round trip and window consistency
  for (int k = 0; k <= 3; ++k)
    for (int n = k + 1; n <= 6; ++n)
      for (const auto& lam : pkn_partitions(k, n)) {
        const SignedPermutation w = partition_to_w(lam, n);
        c.check(grassmannian_to_partition(w, k) == lam, "bijection roundtrip " + lam_tag(lam));
        c.check(coxeter_length(w) == lam.weight(), "length = weight " + lam_tag(lam));
        c.check(pair_set_from_w(w, k) == pair_set_C(lam, n - k),
                "pair set from window " + lam_tag(lam));
        c.check(beta_from_w(w, k) == beta_seq(lam, n - k), "beta from window " + lam_tag(lam));
      }
}

// ---------------------------------------------------------------- divdiff

void run_divdiff(Checker& c, const SuiteOptions& opts) {
  std::mt19937_64 rng(opts.seed);

  for (int rep = 0; rep < 30; ++rep) {
    const Polynomial f = random_poly(rng, 4, 5, 4, 6);
    const Polynomial g = random_poly(rng, 3, 4, 4, 4);
    for (int i = 0; i <= 4; ++i) {
      c.check(weyl_act(i, weyl_act(i, f)) == f, "involution i=" + std::to_string(i));
      c.check(divided_diff(i, f * g) ==
                  divided_diff(i, f) * g + weyl_act(i, f) * divided_diff(i, g),
              "Leibnitz i=" + std::to_string(i));
      c.check(divided_diff(i, divided_diff(i, f)).is_zero(),
              "partial_i^2 = 0, i=" + std::to_string(i));
    }
  }

  // braid relations on all monomials of degree <= 5 in c_1..c_5, t_1..t_4
  const auto monos = all_monomials(5, 5, 4);
  auto apply_word = [](const Polynomial& f, std::initializer_list<int> word) {
    Polynomial g = f;
    for (int i : word) g = weyl_act(i, g);
    return g;
  };
  for (const auto& m : monos) {
    const Polynomial f = Polynomial::term(m, 1);
    c.check(apply_word(f, {0, 1, 0, 1}) == apply_word(f, {1, 0, 1, 0}), "braid s0 s1");
    for (int i = 1; i <= 3; ++i)
      c.check(apply_word(f, {i, i + 1, i}) == apply_word(f, {i + 1, i, i + 1}),
              "braid s_i s_{i+1}");
  }

  // action and divided differences on the elements c^r_p
  for (int p = 0; p <= 8; ++p)
    for (int r = -4; r <= 4; ++r)
      for (int i = 0; i <= 4; ++i) {
        const Polynomial lhs = weyl_act(i, c_power(p, r));
        if (r != i && r != -i) {
          c.check(lhs == c_power(p, r), "s_i fixes c^r_p");
        } else if (r == i && i > 0) {
          c.check(lhs == c_power(p, i + 1) + Polynomial::t(i) * c_power(p - 1, i + 1),
                  "s_i on c^i_p");
        } else {
          c.check(lhs == c_power(p, -i + 1) - Polynomial::t(i + 1) * c_power(p - 1, -i + 1),
                  "s_i on c^{-i}_p");
        }
        const Polynomial dd = divided_diff(i, c_power(p, r));
        if (r == i || r == -i)
          c.check(dd == c_power(p - 1, r + 1), "partial_i c^r_p, r = +-i");
        else
          c.check(dd.is_zero(), "partial_i c^r_p = 0");
      }
  for (int i = 1; i <= 3; ++i)
    for (int p = 0; p <= 5; ++p)
      for (int q = 0; q <= 5; ++q)
        c.check(divided_diff(i, c_power(p, -i) * c_power(q, i)) ==
                    c_power(p - 1, -i + 1) * c_power(q, i + 1) +
                        c_power(p, -i + 1) * c_power(q - 1, i + 1),
                "product rule for c^{-i}_p c^i_q");

  // descent sweep: every covering pair inside a 4 x 6 rectangle
  for (int k = 0; k <= opts.k_max; ++k) {
    for (const auto& lam : k_strict_partitions_up_to(k, 24)) {
      if (lam.length() > 4 || lam.part(1) > 6 || lam.weight() == 0) continue;
      const int n = std::max(min_rank(lam), 8);
      const SignedPermutation w = partition_to_w(lam, n);
      int pairs = 0;
      for (int i = 0; i < n; ++i) {
        const SignedPermutation shorter = SignedPermutation::simple(i, n) * w;
        if (coxeter_length(shorter) != coxeter_length(w) - 1) continue;
        if (!is_k_grassmannian(shorter, k)) continue;
        ++pairs;
        c.check(verify_descent(lam, i), "descent " + lam_tag(lam) + " i=" + std::to_string(i));
      }
      c.check(pairs >= 1, "no descent found " + lam_tag(lam));
    }
  }
}

// ---------------------------------------------------------------- omega

void run_omega(Checker& c, const SuiteOptions& opts) {
  const int wmax = std::min(opts.weight_max, 7);
  for (int k = 0; k <= opts.k_max; ++k) {
    for (const auto& lam : k_strict_partitions_up_to(k, wmax)) {
      const auto factorizations = reduced_factorizations(lam);
      bool trivial_found = false;
      for (const auto& rf : factorizations) {
        c.check(rf.mu.k_length() == lam.k_length(), "k-length preserved " + lam_tag(lam));
        c.check(lam.contains(rf.mu), "mu contained in lambda " + lam_tag(lam));
        if (rf.mu == lam) trivial_found = rf.u.is_identity();
      }
      c.check(trivial_found, "identity factorization " + lam_tag(lam));
      c.check(equal_in_quotient(theta_double(lam), omega_poly(lam), k),
              "omega representative " + lam_tag(lam));

      // flagged determinant forms of the Schubert factors
      const int len = lam.length();
      if (len > 0 && lam.part(1) <= k) {
        for (const auto& rf : factorizations) {
          std::vector<std::vector<Polynomial>> m(len, std::vector<Polynomial>(len));
          for (int i = 1; i <= len; ++i)
            for (int j = 1; j <= len; ++j)
              m[i - 1][j - 1] =
                  complete_sym_neg(lam.part(i) - rf.mu.part(j) + j - i, k + i - lam.part(i));
          c.check(schubert_poly_a(rf.u.inverse()).negate_t() == det_poly(m),
                  "flagged determinant (S case) " + lam_tag(lam));
        }
      }
      if (len > 0 && lam.k_length() == len) {
        for (const auto& rf : factorizations) {
          if (rf.mu.length() != len) continue;
          std::vector<std::vector<Polynomial>> m(len, std::vector<Polynomial>(len));
          for (int i = 1; i <= len; ++i)
            for (int j = 1; j <= len; ++j)
              m[i - 1][j - 1] = complete_sym_neg(lam.part(i) - rf.mu.part(j), k + 1 - lam.part(i));
          c.check(schubert_poly_a(rf.u.inverse()).negate_t() == det_poly(m),
                  "flagged determinant (Q case) " + lam_tag(lam));
        }
      }
    }
  }

  // Schubert descent property, stated on the (-t) form so that the
  // divided differences of this ring apply verbatim
  std::mt19937_64 rng(opts.seed + 1);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<int> window(5);
    std::iota(window.begin(), window.end(), 1);
    std::shuffle(window.begin(), window.end(), rng);
    const SignedPermutation u{window};
    for (int i = 1; i <= 4; ++i) {
      if (u.value(i) <= u.value(i + 1)) continue;
      const SignedPermutation shorter = u * SignedPermutation::simple(i, 5);
      c.check(divided_diff(i, schubert_poly_a(u).negate_t()) ==
                  schubert_poly_a(shorter).negate_t(),
              "Schubert descent i=" + std::to_string(i));
    }
  }
}

// ---------------------------------------------------------------- presentation

void run_presentation(Checker& c, const SuiteOptions& opts) {
  // iterated divided differences from the top class
  const std::vector<std::pair<int, int>> ranks = {{0, 3}, {1, 3}, {1, 4}, {2, 4}};
  std::mt19937_64 rng(opts.seed + 2);
  for (const auto& [k, n] : ranks) {
    for (const auto& lam : pkn_partitions(k, n)) {
      const Polynomial from_top = theta_from_top(lam, n);
      c.check(from_top == theta_double(lam),
              "descent from top " + lam_tag(lam) + " n=" + std::to_string(n));
      for (int rep = 0; rep < 3; ++rep) {
        const auto word = word_to_top(lam, n, rng());
        c.check(theta_from_top(lam, n, word) == from_top,
                "word independence " + lam_tag(lam) + " n=" + std::to_string(n));
      }
    }
  }

  // the finite-presentation generators vanish outside P(k,n)
  for (int k = 0; k <= opts.k_max; ++k)
    for (int n = k + 1; n <= 5; ++n) {
      for (int p = n + k + 1; p <= n + k + 2; ++p) {
        const KStrictPartition row(k, {p});
        const ThetaExpansion e = theta_expansion(theta_double(row), k);
        c.check(e.coeffs.size() == 1 && e.coeffs.count(row.parts()) == 1 &&
                    e.coeffs.at(row.parts()) == Polynomial::one(),
                "row generator is a basis element " + lam_tag(row));
        c.check(finite_truncate(e, n).empty(), "row generator outside P(k,n) " + lam_tag(row));
      }
      for (int p = n - k + 1; p <= n + k; ++p) {
        if (k == 0) break;  // the column range is empty when k = 0
        const KStrictPartition col(k, Parts(p, 1));
        const ThetaExpansion e = theta_expansion(theta_double(col), k);
        c.check(e.coeffs.size() == 1 && e.coeffs.count(col.parts()) == 1,
                "column generator is a basis element " + lam_tag(col));
        c.check(finite_truncate(e, n).empty(),
                "column generator outside P(k,n) " + lam_tag(col));
      }
    }

  // basis integrity: expansion inverts construction on random Z[t]-combinations
  for (int k = 0; k <= opts.k_max; ++k) {
    std::mt19937_64 gen(opts.seed + 100 + k);
    const auto basis = k_strict_partitions_up_to(k, opts.weight_max);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int rep = 0; rep < 200; ++rep) {
      ThetaExpansion combo;
      combo.k = k;
      const int keys = 1 + static_cast<int>(gen() % 4);
      for (int t = 0; t < keys; ++t) {
        const KStrictPartition& lam = basis[pick(gen)];
        const int room = opts.weight_max - lam.weight();
        Polynomial b = Polynomial::constant(coeff(gen));
        if (room >= 1 && gen() % 2 == 0) {
          const int idx = 1 + static_cast<int>(gen() % 4);
          const int deg = 1 + static_cast<int>(gen() % std::min(room, 3));
          b += Polynomial::term(Monomial::t(idx, deg), coeff(gen));
        }
        combo.add(lam.parts(), b);
      }
      Polynomial f;
      for (const auto& [parts, b] : combo.coeffs)
        f += theta_double(KStrictPartition(k, parts)) * b;
      c.check(theta_expansion(f, k) == combo, "basis integrity k=" + std::to_string(k) +
                                                  " rep=" + std::to_string(rep));
    }
  }

  // normal-form idempotence and the ring homomorphism property
  std::mt19937_64 gen2(opts.seed + 7);
  for (int rep = 0; rep < 25; ++rep) {
    const int k = static_cast<int>(gen2() % (opts.k_max + 1));
    const Polynomial f = random_poly(gen2, 4, 5, 3, 6);
    const Polynomial g = random_poly(gen2, 3, 4, 3, 4);
    const CNormalForm nf = normal_form(f, k);
    c.check(normal_form(lift(nf), k) == nf, "normal form idempotence");
    c.check(normal_form(f * g, k) ==
                normal_form(lift(normal_form(f, k)) * lift(normal_form(g, k)), k),
            "normal form respects products");
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lemmas-1", "chevalley", "divdiff",
                                                 "pfaffian",  "omega",     "presentation"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  SuiteResult result;
  result.name = name;
  Checker checker{result};
  const auto start = std::chrono::steady_clock::now();
  if (name == "lemmas-1")
    run_lemmas1(checker, opts);
  else if (name == "chevalley")
    run_chevalley(checker, opts);
  else if (name == "divdiff")
    run_divdiff(checker, opts);
  else if (name == "pfaffian")
    run_pfaffian(checker, opts);
  else if (name == "omega")
    run_omega(checker, opts);
  else if (name == "presentation")
    run_presentation(checker, opts);
  else
    throw std::invalid_argument("unknown suite: " + name);
  result.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  return result;
}

std::string suite_report_json(const std::vector<SuiteResult>& results, const SuiteOptions& opts) {
  nlohmann::ordered_json root;
  root["k_max"] = opts.k_max;
  root["weight_max"] = opts.weight_max;
  root["seed"] = opts.seed;
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  bool pass = true;
  for (const auto& r : results) {
    nlohmann::ordered_json s;
    s["suite"] = r.name;
    s["cases"] = r.cases;
    s["pass"] = r.pass();
    s["ms"] = static_cast<long long>(r.ms);
    s["failures"] = r.failures;
    suites.push_back(s);
    pass = pass && r.pass();
  }
  root["suites"] = suites;
  root["pass"] = pass;
  return root.dump(2);
}

}  // namespace thetaforge
