#include <doctest.h>

#include "hochbracket/errors.hpp"
#include "test_support.hpp"

using namespace testsupport;
using namespace testgroups;

TEST_CASE("polynomial arithmetic") {
  BasisRef s = standard_basis(3);
  Poly x = Poly::variable(s, 0), y = Poly::variable(s, 1);
  Poly f = (x + y).pow(2);
  CHECK(f == x * x + (x * y).scaled(2) + y * y);
  CHECK((f - f).is_zero());
  CHECK(f.degree() == 2);
  CHECK(Poly(s).degree() == -1);
  CHECK(Poly::constant(s, 3).is_constant());
  CHECK(parse_poly("(x1 + x2)^2", 1, s) == f);
  CHECK(parse_poly("x1*x2 - x2*x1", 1, s).is_zero());
}

TEST_CASE("mixing bases is refused") {
  auto G = d8();
  BasisRef s = standard_basis(3);
  Poly x = Poly::variable(s, 0);
  Poly w = Poly::variable(G->eigen(G->parse_element("g"))->basis, 0);
  CHECK_THROWS_AS(x + w, PreconditionError);
}

TEST_CASE("coordinate changes round-trip") {
  auto G = d8();
  Rng rng(3);
  BasisRef s = standard_basis(3);
  for (int g = 0; g < G->order(); ++g) {
    const BasisRef& b = G->eigen(g)->basis;
    for (int t = 0; t < 5; ++t) {
      Poly f = random_poly(rng, s, 3, 4, 4);
      CHECK(change_coords(change_coords(f, b), s) == f);
    }
  }
  // w1 = v1 + v2 in B_g coordinates is x1 + x2.
  const BasisRef& bg = G->eigen(G->parse_element("g"))->basis;
  Poly w1 = Poly::variable(bg, 0);
  Poly v = change_coords(w1, s);
  CHECK(v.coefficient(Mono{1}) == v.coefficient(Mono{0, 1}));
}

TEST_CASE("group action is a homomorphism") {
  auto G = d8();
  Rng rng(4);
  BasisRef s = standard_basis(3);
  for (int t = 0; t < 10; ++t) {
    Poly f = random_poly(rng, s, 3, 3, 4);
    int a = pick(rng, G->order()), b = pick(rng, G->order());
    CHECK(group_act(G->element(a), group_act(G->element(b), f)) == group_act(G->element(G->mul(a, b)), f));
  }
  // ^h x1 = x1, ^h x2 = -x2.
  int h = G->parse_element("h");
  CHECK(group_act(G->element(h), Poly::variable(s, 1)) == -Poly::variable(s, 1));
}

TEST_CASE("Demazure operator is the divided difference") {
  Rng rng(5);
  for (int n : {3, 4, 6}) {
    BasisRef s = standard_basis(3);
    for (int t = 0; t < 10; ++t) {
      Poly f = random_poly(rng, s, 5, 4);
      int i = pick(rng, 3), k = pick(rng, n);
      CycNum eps = CycNum::root_of_unity(k, n);
      // (f - ^s f) = (1 - eps) x_i * d_i f where s scales x_i by eps.
      Poly sf(s);
      for (const auto& [m, c] : f.terms()) sf.add_term(m, c * eps.pow(m[i]));
      Poly rhs = Poly::variable(s, i).scaled(CycNum(1) - eps) * quantum_partial(f, i, k, n);
      CHECK(f - sf == rhs);
    }
  }
}

TEST_CASE("Demazure operator at eps = 1 is the partial derivative") {
  Rng rng(6);
  BasisRef s = standard_basis(3);
  for (int t = 0; t < 10; ++t) {
    Poly f = random_poly(rng, s, 5, 4);
    int i = pick(rng, 3);
    CHECK(quantum_partial(f, i, 0, 4) == partial(f, i));
  }
}

TEST_CASE("quantum partial multiplies by quantum integers") {
  BasisRef s = standard_basis(2);
  Poly f = mono_poly(s, {4, 1});
  CycNum z = CycNum::root_of_unity(1, 3);
  CHECK(quantum_partial(f, 0, 1, 3) == mono_poly(s, {3, 1}, quantum_integer(4, z)));
  CHECK(quantum_integer_exp(4, 1, 3) == quantum_integer(4, z));
}

TEST_CASE("twisted partial applies the earlier reflections") {
  auto G = z4_diag();
  int g = G->parse_element("g");
  const EigenData& ed = *G->eigen(g);
  const BasisRef& b = ed.basis;
  Poly f = mono_poly(b, {2, 3, 1});
  // j = 1: ^{s_0} applied to d_1 f, s_0 scales x1 by eps_0.
  Poly q = quantum_partial(f, 1, ed);
  Poly expect(b);
  for (const auto& [m, c] : q.terms()) expect.add_term(m, c * ed.eigenvalues[0].pow(m[0]));
  CHECK(twisted_partial(f, 1, ed) == expect);
  CHECK(twisted_partial(f, 0, ed) == quantum_partial(f, 0, ed));
}

TEST_CASE("exact division by a linear form") {
  BasisRef s = standard_basis(3);
  Poly u = parse_poly("x1 - i*x2", 4, s);
  Poly v = parse_poly("x1 + i*x2", 4, s);
  Poly q = parse_poly("x3^2 + x1", 4, s);
  auto r = divide_exact(u * v * q, u);
  REQUIRE(r.has_value());
  CHECK(*r == v * q);
  CHECK(!divide_exact(v * q + Poly::constant(s, 1), u).has_value());
}

TEST_CASE("wedge helpers") {
  CHECK(wedge_from_indices({0, 2}) == 0b101u);
  CHECK(wedge_indices(0b110) == std::vector<int>{1, 2});
  CHECK(wedge_sort_sign({0, 1, 2}) == 1);
  CHECK(wedge_sort_sign({1, 0, 2}) == -1);
  CHECK(wedge_sort_sign({2, 0, 1}) == 1);
  CHECK(wedge_sort_sign({1, 1}) == 0);
}

TEST_CASE("form conversion matches evaluation") {
  auto G = d8();
  Rng rng(8);
  for (int g = 0; g < G->order(); ++g) {
    const BasisRef& b = G->eigen(g)->basis;
    GForm f = random_form(rng, b, 2, 2, 4);
    GForm s = convert_form(f, standard_basis(3));
    Cochain cf(2, 3), cs(2, 3);
    cf.add_form(g, f);
    cs.add_form(g, s);
    for (int t = 0; t < 3; ++t) {
      std::vector<std::vector<CycNum>> vs(2, std::vector<CycNum>(3));
      for (auto& v : vs)
        for (auto& x : v) x = field_coeff(rng, 4);
      auto ef = evaluate_form(cf, vs), es = evaluate_form(cs, vs);
      CHECK(ef.size() == es.size());
      for (const auto& [tag, p] : ef) CHECK(es.at(tag) == p);
    }
    CHECK(cochain_equal(*G, cf, cs));
  }
}
