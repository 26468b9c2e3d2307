#include <doctest.h>

#include "hochbracket/errors.hpp"
#include "test_support.hpp"

using namespace testsupport;
using namespace testgroups;

namespace {

std::vector<CycNum> unit(int n, int i) {
  std::vector<CycNum> v(n, CycNum(0));
  v[i] = 1;
  return v;
}

// d* evaluated on e_{i_0} ^ ... ^ e_{i_p}: sum_k (-1)^k (e_{i_k} - g e_{i_k}) alpha(... omit i_k ...).
std::map<int, Poly> dstar_oracle(const Group& G, const Cochain& alpha, const std::vector<int>& idx) {
  const int n = G.dim();
  BasisRef s = standard_basis(n);
  std::map<int, Poly> out;
  for (size_t k = 0; k < idx.size(); ++k) {
    std::vector<std::vector<CycNum>> rest;
    for (size_t j = 0; j < idx.size(); ++j)
      if (j != k) rest.push_back(unit(n, idx[j]));
    for (const auto& [tag, f] : evaluate_form(alpha, rest)) {
      std::vector<CycNum> e = unit(n, idx[k]), ge = G.element(tag).apply(e);
      for (int i = 0; i < n; ++i) e[i] -= ge[i];
      Poly t = Poly::linear(s, e) * change_coords(f, s);
      if (k % 2) t = -t;
      auto it = out.find(tag);
      if (it == out.end()) out.emplace(tag, t);
      else it->second += t;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

TEST_CASE("dual Koszul differential matches the evaluation formula") {
  Rng rng(11);
  for (auto& G : standard_test_groups()) {
    for (int t = 0; t < 15; ++t) {
      int p = pick(rng, 3);
      Cochain a = random_term(*G, rng, p, 2);
      Cochain d = koszul_dual_diff(*G, a);
      for (Wedge w : wedges_of_degree(3, p + 1)) {
        std::vector<std::vector<CycNum>> vs;
        for (int i : wedge_indices(w)) vs.push_back(unit(3, i));
        auto got = evaluate_form(d, vs);
        for (auto it = got.begin(); it != got.end();) it = it->second.is_zero() ? got.erase(it) : std::next(it);
        auto want = dstar_oracle(*G, a, wedge_indices(w));
        REQUIRE(got.size() == want.size());
        for (const auto& [tag, f] : want) CHECK(change_coords(got.at(tag), f.basis()) == f);
      }
    }
  }
}

TEST_CASE("d* squares to zero") {
  Rng rng(12);
  for (auto& G : standard_test_groups())
    for (int t = 0; t < 20; ++t) {
      Cochain a = random_term(*G, rng, pick(rng, 3), 3);
      CHECK(koszul_dual_diff(*G, koszul_dual_diff(*G, a)).is_zero());
    }
}

TEST_CASE("H basis elements lie in H and proj_H is idempotent") {
  Rng rng(13);
  for (auto& G : standard_test_groups()) {
    for (int g = 0; g < G->order(); ++g)
      for (int p = 0; p <= 3; ++p)
        for (const auto& c : h_space_basis(*G, g, p, 2)) CHECK(in_H(*G, c));
    for (int t = 0; t < 20; ++t) {
      Cochain a = random_term(*G, rng, 1 + pick(rng, 3), 3);
      Cochain p = proj_H(*G, a);
      CHECK(cochain_equal(*G, proj_H(*G, p), p));
      CHECK(in_H(*G, p));
    }
  }
}

TEST_CASE("H needs the full perp wedge and fixed-space coefficients") {
  auto G = d8();
  int g = G->parse_element("g");
  const BasisRef& b = G->eigen(g)->basis;
  Cochain ok(2, 3), bad_wedge(2, 3), bad_poly(2, 3);
  ok.add(g, 0b011, Poly::variable(b, 2));
  bad_wedge.add(g, 0b101, Poly::variable(b, 2));
  bad_poly.add(g, 0b011, Poly::variable(b, 0));
  CHECK(in_H(*G, ok));
  CHECK(proj_H(*G, bad_wedge).is_zero());
  CHECK(proj_H(*G, bad_poly).is_zero());
}

TEST_CASE("Reynolds averaging") {
  Rng rng(14);
  for (auto& G : standard_test_groups())
    for (int t = 0; t < 10; ++t) {
      Cochain a = random_term(*G, rng, 2, 2);
      Cochain r = reynolds(*G, a);
      CHECK(is_invariant(*G, r));
      CHECK(cochain_equal(*G, reynolds(*G, r), r));
      int x = pick(rng, G->order());
      CHECK(cochain_equal(*G, act_on_cochain(*G, x, r), r));
    }
}

TEST_CASE("the action is a group action on cochains") {
  Rng rng(15);
  auto G = d8();
  for (int t = 0; t < 10; ++t) {
    Cochain a = random_term(*G, rng, 2, 2);
    int x = pick(rng, G->order()), y = pick(rng, G->order());
    CHECK(cochain_equal(*G, act_on_cochain(*G, x, act_on_cochain(*G, y, a)), act_on_cochain(*G, G->mul(x, y), a)));
  }
}

TEST_CASE("invariant bases") {
  for (auto& G : standard_test_groups()) {
    for (int p = 0; p <= 3; ++p) {
      auto basis = invariant_basis(*G, p, 1);
      for (const auto& c : basis) {
        CHECK(is_invariant(*G, c));
        CHECK(in_H(*G, c));
      }
      CHECK(echelon_basis(*G, basis).size() == basis.size());
    }
  }
}

TEST_CASE("low degrees: constants only on the kernel") {
  // A faithful nontrivial group: degree 0 constants are one-dimensional.
  for (auto& G : standard_test_groups()) CHECK(invariant_basis(*G, 0, 0).size() == 1);
  // Invariant classes of degrees 0 and 1 live on elements of codimension <= the degree,
  // and degree 2 invariants on elements of codimension 0 or 2. S3 brings reflections.
  auto groups = standard_test_groups();
  groups.push_back(s3_perm());
  for (auto& G : groups) {
    for (int p = 0; p <= 2; ++p)
      for (const auto& c : invariant_basis(*G, p, 2))
        for (int tag : c.support()) {
          int codim = G->eigen(tag)->perp_count;
          CHECK(codim <= p);
          if (p == 2) CHECK(codim != 1);
        }
  }
}

TEST_CASE("nothing above the exterior bound") {
  auto G = d8();
  CHECK(invariant_basis(*G, 4, 1).empty());
}

TEST_CASE("span membership") {
  auto G = z4_diag();
  auto basis = invariant_basis(*G, 2, 1);
  REQUIRE(basis.size() >= 2);
  Cochain c = basis[0].scaled(3);
  c += basis[1].scaled(-2);
  CHECK(in_span(*G, basis, c));
  Cochain off(2, 3);
  off.add(0, 0b011, Poly::variable(standard_basis(3), 0));
  CHECK(!in_span(*G, basis, off));
}

TEST_CASE("canonical form is basis-free") {
  auto G = d8();
  Rng rng(16);
  for (int t = 0; t < 10; ++t) {
    Cochain a = random_term(*G, rng, 2, 2);
    CHECK(cochain_equal(*G, to_standard(a), a));
    CHECK(cochain_equal(*G, canonical(*G, to_standard(a)), a));
  }
}
