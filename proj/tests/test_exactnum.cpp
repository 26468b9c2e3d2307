#include <doctest.h>

#include <complex>
#include <random>

#include "hochbracket/cyclotomic.hpp"
#include "hochbracket/errors.hpp"

using namespace hb;

namespace {

std::complex<double> numeric(const CycNum& a) {
  const int n = a.conductor();
  const double pi = 3.14159265358979323846;
  std::complex<double> z = std::polar(1.0, 2 * pi / n), acc = 0, pw = 1;
  for (const auto& c : a.coeffs()) {
    acc += c.get_d() * pw;
    pw *= z;
  }
  return acc;
}

CycNum random_cyc(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<mpq_class> c(euler_phi(n));
  for (auto& x : c) x = mpq_class(d(rng), 1 + std::abs(d(rng)));
  return CycNum(n, c);
}

}  // namespace

TEST_CASE("cube roots of unity sum to zero") {
  CycNum z = CycNum::root_of_unity(1, 3);
  CHECK((CycNum(1) + z + z * z).is_zero());
  CHECK(z.pow(3).is_one());
  CHECK(z.pow(-1) == z * z);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(7) == 6);
}

TEST_CASE("conductor 2 collapses to the rationals") {
  CycNum m = CycNum::root_of_unity(1, 2);
  CHECK(m == CycNum(-1));
  CHECK(m.conductor() == 1);
  CHECK(m.is_rational());
}

TEST_CASE("mixed conductors promote to the lcm") {
  CycNum i = CycNum::root_of_unity(1, 4);
  CycNum w = CycNum::root_of_unity(1, 3);
  CycNum p = i * w;
  CHECK(p.conductor() == 12);
  CHECK(p == CycNum::root_of_unity(7, 12));
  CHECK(i * i == CycNum(-1));
  CHECK((i * i).is_rational());
}

TEST_CASE("field operations agree with complex evaluation") {
  std::mt19937_64 rng(5);
  for (int n : {3, 4, 5, 8, 12}) {
    for (int s = 0; s < 30; ++s) {
      CycNum a = random_cyc(rng, n), b = random_cyc(rng, n);
      CHECK(std::abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-8);
      CHECK(std::abs(numeric(a + b) - (numeric(a) + numeric(b))) < 1e-9);
      if (!b.is_zero()) {
        CHECK(a / b * b == a);
        CHECK(std::abs(numeric(b.inverse()) - 1.0 / numeric(b)) < 1e-8);
      }
    }
  }
}

TEST_CASE("ring axioms hold exactly") {
  std::mt19937_64 rng(9);
  for (int s = 0; s < 40; ++s) {
    int n = std::vector<int>{3, 4, 6, 8}[s % 4];
    CycNum a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, n);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == CycNum(0));
  }
}

TEST_CASE("division by zero is a precondition error") {
  CHECK_THROWS_AS(CycNum(0).inverse(), PreconditionError);
}

TEST_CASE("quantum integers") {
  CycNum z = CycNum::root_of_unity(1, 4);
  CHECK(quantum_integer(0, z).is_zero());
  CHECK(quantum_integer(1, z).is_one());
  CHECK(quantum_integer(4, z).is_zero());
  CHECK(quantum_integer(2, CycNum(-1)).is_zero());
  CHECK(quantum_integer(5, CycNum(1)) == CycNum(5));
  // [|G|+1] - [1] = |G| at eps = 1.
  CHECK(quantum_integer(7, CycNum(1)) - quantum_integer(1, CycNum(1)) == CycNum(6));
  CHECK(quantum_integer(3, z) == z);
}

TEST_CASE("order of a root of unity") {
  CHECK(order_of_unity(CycNum::root_of_unity(2, 12)) == 6);
  CHECK(order_of_unity(CycNum(-1)) == 2);
  CHECK(!order_of_unity(CycNum(2)).has_value());
  CHECK_THROWS_AS(order_of_unity(CycNum(0)), PreconditionError);
}

TEST_CASE("parsing scalars") {
  CHECK(parse_cyclotomic("1/2*z^3 - 2", 4) == CycNum(mpq_class(1, 2)) * CycNum::root_of_unity(3, 4) - CycNum(2));
  CHECK(parse_cyclotomic("(1+z)^2", 4) == CycNum(2) * CycNum::root_of_unity(1, 4));
  CHECK(parse_cyclotomic("-z^-1", 3) == -CycNum::root_of_unity(2, 3));
  CHECK(parse_cyclotomic("i", 1) == CycNum::root_of_unity(1, 4));
  CHECK_THROWS_AS(parse_cyclotomic("2*q", 4), ParseError);
  CHECK_THROWS_AS(parse_cyclotomic("1/0", 4), ParseError);
  CHECK_THROWS_AS(parse_cyclotomic("(1+z", 4), ParseError);
}

TEST_CASE("rendering round-trips") {
  std::mt19937_64 rng(13);
  for (int s = 0; s < 20; ++s) {
    CycNum a = random_cyc(rng, 8);
    CHECK(parse_cyclotomic(a.to_string(), 8) == a);
  }
}
