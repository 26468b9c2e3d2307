#include <doctest.h>

#include "hochbracket/errors.hpp"
#include "hochbracket/io.hpp"
#include "test_support.hpp"

using namespace testsupport;
using namespace testgroups;

TEST_CASE("cochain records round-trip") {
  Rng rng(61);
  for (auto& G : standard_test_groups()) {
    for (int t = 0; t < 15; ++t) {
      Cochain c = random_term(*G, rng, pick(rng, 4), 3);
      c += random_term(*G, rng, c.degree(), 2);
      json j = cochain_to_json(*G, c);
      Cochain back = cochain_from_json(*G, parse_json_text(j.dump()));
      CHECK(cochain_equal(*G, back, c));
      CHECK(cochain_to_json(*G, back).dump() == j.dump());
    }
  }
}

TEST_CASE("records in eigen coordinates") {
  auto G = d8();
  int g = G->parse_element("g");
  json j = parse_json_text(
      R"([{"support": "g", "poly": "x3", "poly_basis": "standard", "wedge": [1, 2], "wedge_basis": "eigen"}])");
  Cochain c = cochain_from_json(*G, j);
  Cochain want(2, 3);
  want.add(g, 0b011, Poly::variable(G->eigen(g)->basis, 2));
  CHECK(cochain_equal(*G, c, want));
  // Reversed wedge order flips the sign.
  json r = parse_json_text(R"([{"support": "g", "poly": "x3", "wedge": [2, 1], "wedge_basis": "eigen"}])");
  CHECK(cochain_equal(*G, cochain_from_json(*G, r), want.scaled(-1)));
  // Index references and w-variables.
  json k = parse_json_text(R"([{"support": )" + std::to_string(g) +
                           R"(, "poly": "w3", "wedge": [1, 2], "wedge_basis": "eigen"}])");
  CHECK(cochain_equal(*G, cochain_from_json(*G, k), want));
}

TEST_CASE("record errors") {
  auto G = d8();
  CHECK_THROWS_AS(cochain_from_json(*G, parse_json_text(R"([{"support": "q", "poly": "1", "wedge": [1]}])")),
                  GroupError);
  CHECK_THROWS_AS(cochain_from_json(*G, parse_json_text(R"([{"support": "g", "poly": "1", "wedge": [4]}])")),
                  ParseError);
  CHECK_THROWS_AS(cochain_from_json(*G, parse_json_text(R"([{"support": "g", "poly": "x9", "wedge": [1]}])")),
                  ParseError);
  CHECK_THROWS_AS(cochain_from_json(*G, parse_json_text(R"([{"support": "g", "wedge": [1]}])")), ParseError);
  CHECK_THROWS_AS(cochain_from_json(*G, parse_json_text(R"([])")), ParseError);
  CHECK(cochain_from_json(*G, parse_json_text(R"({"degree": 2, "terms": []})")).is_zero());
}

TEST_CASE("group records") {
  auto G = group_from_json(parse_json_text(
      R"({"conductor": 1, "dim": 3, "names": ["k"], "generators": [[[1,0,0],[0,1,0],[0,0,1]]], "labels": [[[-1]]]})"));
  CHECK(G->order() == 2);
  CHECK(G->word(1) == "k");
  CHECK_THROWS_AS(group_from_json(parse_json_text(R"({"conductor": 1, "dim": 2, "generators": [[[1,0]]]})")),
                  ParseError);
  CHECK_THROWS_AS(group_from_json(parse_json_text(R"({"conductor": 1, "dim": 2, "generators": [[[1,1],[0,1]]]})")),
                  GroupError);
  CHECK_THROWS_AS(
      group_from_json(parse_json_text(R"({"conductor": 4, "dim": 2, "generators": [[["i",0],[0,1]]]})"), 2),
      GroupError);
}

TEST_CASE("algebra elements and rendering") {
  auto G = d8();
  auto [f, tag] = parse_algebra_element(*G, "x1^2 + x3@g*h");
  CHECK(tag == G->parse_element("g*h"));
  CHECK(f == parse_poly("x1^2 + x3", 4, standard_basis(3)));
  CHECK(parse_algebra_element(*G, "x2").second == G->identity());
  AlgElem x;
  add_to(x, tag, f);
  CHECK(render_alg_elem(*G, x) == "(x1^2 + x3)*[g*h]");
  CHECK(wedge_string(0b101) == "dx1^dx3");
  CHECK(wedge_string(0) == "1");
  Cochain c(1, 3);
  c.add(0, 0b010, Poly::variable(standard_basis(3), 0));
  CHECK(render_cochain(*G, c) == "[1] (x1) dx2");
}
