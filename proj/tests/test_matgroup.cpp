#include <doctest.h>

#include <set>

#include "hochbracket/errors.hpp"
#include "hochbracket/io.hpp"
#include "test_groups.hpp"

using namespace hb;
using namespace testgroups;

TEST_CASE("D8 closure and classes") {
  auto G = d8();
  CHECK(G->order() == 8);
  CHECK(G->exponent() == 4);
  CHECK(G->conductor() == 4);
  CHECK(G->classes().representatives.size() == 5);
  CHECK(G->classes().kernel == std::vector<int>{0});
  CHECK(!G->is_abelian());
  CHECK(G->word(G->identity()) == "1");
  CHECK(G->element(G->parse_element("g*h")) == G->element(G->parse_element("g")) * G->element(G->parse_element("h")));
}

TEST_CASE("group axioms on the multiplication table") {
  for (auto& G : standard_test_groups()) {
    const int n = G->order();
    for (int a = 0; a < n; ++a) {
      CHECK(G->mul(a, G->inv(a)) == 0);
      CHECK(G->mul(0, a) == a);
      for (int b = 0; b < n; ++b) {
        CHECK(G->element(G->mul(a, b)) == G->element(a) * G->element(b));
        for (int c = 0; c < n; c += 3) CHECK(G->mul(G->mul(a, b), c) == G->mul(a, G->mul(b, c)));
      }
    }
  }
}

TEST_CASE("classes partition the group and centralizers match class sizes") {
  for (auto& G : standard_test_groups()) {
    const auto& cd = G->classes();
    size_t total = 0;
    for (size_t i = 0; i < cd.members.size(); ++i) {
      total += cd.members[i].size();
      int g = cd.representatives[i];
      CHECK(cd.members[i].size() * G->centralizer(g).size() == static_cast<size_t>(G->order()));
      CHECK(G->coset_reps(g).size() == cd.members[i].size());
    }
    CHECK(total == static_cast<size_t>(G->order()));
  }
}

TEST_CASE("canonical eigenbases diagonalize with eigenvalue 1 last") {
  auto G = d8();
  for (int g = 0; g < G->order(); ++g) {
    const EigenData& ed = *G->eigen(g);
    Matrix d = ed.from_standard() * G->element(g) * ed.to_standard();
    for (int i = 0; i < 3; ++i) {
      CHECK(d(i, i) == ed.eigenvalues[i]);
      for (int j = 0; j < 3; ++j)
        if (i != j) CHECK(d(i, j).is_zero());
    }
    bool seen_fixed = false;
    for (int i = 0; i < 3; ++i) {
      if (ed.is_fixed(i)) seen_fixed = true;
      else CHECK(!seen_fixed);
    }
  }
  // w1 = v1 + v2 (eigenvalue i), w2 = -v1 + v2, w3 = v3 up to scaling.
  const EigenData& eg = *G->eigen(G->parse_element("g"));
  CHECK(eg.eigenvalues[0] == CycNum::root_of_unity(1, 4));
  CHECK(eg.to_standard()(0, 0) == eg.to_standard()(1, 0));
  CHECK(eg.to_standard()(0, 1) == -eg.to_standard()(1, 1));
  CHECK(eg.perp_count == 2);
}

TEST_CASE("conjugated eigen-data belongs to the conjugate") {
  auto G = d8();
  for (int a = 0; a < G->order(); ++a)
    for (int g = 0; g < G->order(); ++g) {
      EdRef e = G->conjugated_canonical(a, g);
      CHECK(e->owner == G->conj(a, g));
      Matrix d = e->from_standard() * G->element(e->owner) * e->to_standard();
      for (int i = 0; i < 3; ++i) CHECK(d(i, i) == e->eigenvalues[i]);
    }
}

TEST_CASE("reflection-type data over the rationals") {
  auto G = klein();
  CHECK(G->order() == 4);
  CHECK(G->conductor() == 1);
  int a = G->parse_element("a");
  CHECK(G->eigen(a)->perp_count == 2);
  CHECK(G->eigen(a)->eigenvalues[0] == CycNum(-1));
}

TEST_CASE("custom eigenbases are validated") {
  auto G = d8();
  int h = G->parse_element("h");
  EdRef e = G->custom_eigen(h, Matrix::identity(3));
  CHECK(e->perp_mask == 0b110);
  Matrix bad = Matrix::identity(3);
  bad(0, 1) = 1;
  CHECK_THROWS_AS(G->custom_eigen(h, bad), PreconditionError);
}

TEST_CASE("labels separate elements with the same action") {
  auto G = z2_trivial();
  CHECK(G->order() == 2);
  CHECK(G->classes().kernel.size() == 2);
  CHECK(G->in_kernel(G->parse_element("k")));
  CHECK(G->parse_element("k") != G->identity());
}

TEST_CASE("failures") {
  Matrix shear = Matrix::identity(2);
  shear(0, 1) = 1;
  CHECK_THROWS_AS(Group({shear}, 1), GroupError);
  CHECK_THROWS_AS(Group({Matrix(2, 2)}, 1), GroupError);
  auto G = d8();
  CHECK_THROWS_AS(G->parse_element("q"), GroupError);
}

TEST_CASE("trivial group") {
  auto G = trivial(3);
  CHECK(G->order() == 1);
  CHECK(G->is_abelian());
}

TEST_CASE("group JSON") {
  auto G = group_from_json(parse_json_text(R"({"conductor": 4, "dim": 2, "generators": [[["i", 0], [0, "-i"]]]})"));
  CHECK(G->order() == 4);
  CHECK_THROWS_AS(group_from_json(parse_json_text(R"({"dim": 2, "generators": []})")), ParseError);
  CHECK_THROWS_AS(parse_json_text("{"), ParseError);
}
