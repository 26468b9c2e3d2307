#include "hochbracket/verify.hpp"

#include <random>

#include "hochbracket/bracket.hpp"
#include "hochbracket/conversion.hpp"
#include "hochbracket/errors.hpp"

namespace hb {

namespace {

using Rng = std::mt19937_64;

int pick(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

CycNum small_coeff(Rng& rng) {
  int v = std::uniform_int_distribution<int>(1, 3)(rng);
  return CycNum(pick(rng, 2) ? v : -v);
}

Cochain random_cochain(const Group& G, Rng& rng, int p, int d, int terms) {
  Cochain c(p, G.dim());
  std::vector<Wedge> wedges;
  for (Wedge w = 0; w < (1u << G.dim()); ++w)
    if (__builtin_popcount(w) == p) wedges.push_back(w);
  for (int t = 0; t < terms; ++t) {
    int g = pick(rng, G.order());
    const BasisRef& b = G.eigen(g)->basis;
    Mono m{};
    int deg = pick(rng, d + 1);
    for (int k = 0; k < deg; ++k) ++m[pick(rng, G.dim())];
    Poly f(b);
    f.add_term(m, small_coeff(rng));
    c.add(g, wedges[pick(rng, static_cast<int>(wedges.size()))], f);
  }
  return c;
}

// A random element of H^p_g for a random g with H^p_g nonzero.
std::optional<Cochain> random_h(const Group& G, Rng& rng, int p, int d) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    int g = pick(rng, G.order());
    auto basis = h_space_basis(G, g, p, d);
    if (basis.empty()) continue;
    Cochain c = basis[pick(rng, static_cast<int>(basis.size()))].scaled(small_coeff(rng));
    if (pick(rng, 2)) c += basis[pick(rng, static_cast<int>(basis.size()))];
    return c;
  }
  return std::nullopt;
}

Cochain random_combination(const std::vector<Cochain>& basis, Rng& rng, int p, int dim) {
  Cochain c(p, dim);
  int k = 1 + pick(rng, 2);
  for (int i = 0; i < k && !basis.empty(); ++i)
    c += basis[pick(rng, static_cast<int>(basis.size()))].scaled(small_coeff(rng));
  return c;
}

// Scaled and reversed eigenbasis for every tag of the supports.
BasisChoice shuffled_bases(const Group& G, const std::vector<int>& tags) {
  BasisChoice bc;
  for (int g : tags) {
    const EigenData& ed = *G.eigen(g);
    const int n = G.dim();
    Matrix v(n, n);
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r) v(r, n - 1 - j) = ed.to_standard()(r, j) * CycNum(j + 2);
    bc.custom[g] = G.custom_eigen(g, v, "shuffled");
  }
  return bc;
}

void record(SuiteResult& s, bool ok, const std::string& what) {
  if (ok) {
    ++s.passed;
  } else {
    ++s.failed;
    if (s.first_failure.empty()) s.first_failure = what;
  }
}

std::vector<int> union_support(const Cochain& a, const Cochain& b) {
  std::vector<int> t = a.support();
  for (int x : b.support()) t.push_back(x);
  return t;
}

bool off_kernel(const Group& G, const Cochain& c) {
  for (int t : c.support())
    if (G.in_kernel(t)) return false;
  return true;
}

}  // namespace

std::vector<SuiteResult> run_verify(const Group& G, const VerifyOptions& opts) {
  Rng rng(opts.seed);
  const int d = opts.poly_degree;
  const int n = G.dim();
  std::vector<SuiteResult> out;
  BracketOptions bopts;
  bopts.jobs = opts.jobs;

  SuiteResult phi{"phi_star_tau_identity", 0, 0, {}};
  for (int s = 0; s < opts.samples; ++s) {
    int p = 1 + pick(rng, std::min(n, 3));
    Cochain a = random_cochain(G, rng, p, d, 2);
    record(phi, cochain_equal(G, phi_star(G, tau_evaluator(G, a), p), a), "degree " + std::to_string(p));
  }
  out.push_back(phi);

  SuiteResult circ{"circ_det_equals_circ_direct", 0, 0, {}};
  const int degs[3][2] = {{2, 2}, {1, 2}, {2, 1}};
  for (int s = 0; s < opts.samples; ++s) {
    int p = degs[s % 3][0], q = degs[s % 3][1];
    if (p + q - 1 > n) continue;
    auto a = random_h(G, rng, p, d);
    auto b = random_h(G, rng, q, d);
    if (!a || !b) continue;
    int x = pick(rng, G.order()), y = pick(rng, G.order());
    const auto& [g, fa] = *a->terms().begin();
    const auto& [h, fb] = *b->terms().begin();
    EdRef e1 = G.conjugated_canonical(x, g), e2 = G.conjugated_canonical(y, h);
    GForm ga{e1->basis, {}}, gb{e2->basis, {}};
    for (const auto& [w, f] : fa.comps) ga.add(w, f.relabeled(e1->basis));
    for (const auto& [w, f] : fb.comps) gb.add(w, f.relabeled(e2->basis));
    Cochain c1 = circ_det(G, ga, p, *e1, gb, q, *e2);
    Cochain c2 = circ_direct(G, ga, p, *e1, gb, q, *e2);
    record(circ, cochain_equal(G, c1, c2), "degrees " + std::to_string(p) + "," + std::to_string(q));
  }
  out.push_back(circ);

  SuiteResult dd{"koszul_d_squared_zero", 0, 0, {}};
  for (int s = 0; s < opts.samples; ++s) {
    int p = pick(rng, std::min(n, 3));
    Cochain a = random_cochain(G, rng, p, d, 2);
    record(dd, koszul_dual_diff(G, koszul_dual_diff(G, a)).is_zero(), "degree " + std::to_string(p));
  }
  out.push_back(dd);

  SuiteResult idem{"proj_H_idempotent", 0, 0, {}};
  for (int s = 0; s < opts.samples; ++s) {
    Cochain a = random_cochain(G, rng, 1 + pick(rng, std::min(n, 3)), d, 3);
    Cochain p1 = proj_H(G, a);
    record(idem, cochain_equal(G, proj_H(G, p1), p1), "random cochain");
  }
  out.push_back(idem);

  auto inv2 = invariant_basis(G, 2, d);
  auto inv2_const = invariant_basis(G, 2, 0);
  int budget = std::max(2, opts.samples / 4);

  SuiteResult anti{"graded_antisymmetry", 0, 0, {}};
  SuiteResult indep{"basis_independence", 0, 0, {}};
  if (n >= 3 && !inv2.empty()) {
    for (int s = 0; s < budget; ++s) {
      Cochain a = random_combination(inv2, rng, 2, n);
      Cochain b = random_combination(inv2, rng, 2, n);
      Cochain ab = gerstenhaber_bracket(G, a, b, bopts);
      Cochain ba = gerstenhaber_bracket(G, b, a, bopts);
      // (p-1)(q-1) = 1, so [a,b] = [b,a].
      record(anti, cochain_equal(G, ab, ba), "degree (2,2) pair");
      BracketOptions alt = bopts;
      alt.bases = shuffled_bases(G, union_support(a, b));
      record(indep, cochain_equal(G, ab, gerstenhaber_bracket(G, a, b, alt)), "shuffled eigenbases");
    }
  }
  out.push_back(anti);
  out.push_back(indep);

  SuiteResult zero{"zero_bracket_theorems", 0, 0, {}};
  if (n >= 3) {
    for (int s = 0; s < budget && !inv2_const.empty(); ++s) {
      Cochain a = random_combination(inv2_const, rng, 2, n);
      Cochain b = random_combination(inv2_const, rng, 2, n);
      record(zero, gerstenhaber_bracket(G, a, b, bopts).is_zero(), "constant pair");
    }
    std::vector<Cochain> off;
    for (const auto& c : inv2)
      if (off_kernel(G, c)) off.push_back(c);
    for (int s = 0; s < budget && !off.empty(); ++s) {
      Cochain a = random_combination(off, rng, 2, n);
      Cochain b = random_combination(off, rng, 2, n);
      record(zero, gerstenhaber_bracket(G, a, b, bopts).is_zero(), "pair supported off K");
    }
  }
  out.push_back(zero);
  return out;
}

}  // namespace hb
