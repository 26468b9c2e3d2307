// Polynomials in S(V) over Q(zeta_N), written in the coordinates of a declared basis.

#ifndef HOCHBRACKET_POLY_HPP_
#define HOCHBRACKET_POLY_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hochbracket/basis.hpp"
#include "hochbracket/cyclotomic.hpp"

namespace hb {

struct EigenData;

using Mono = std::array<uint16_t, 8>;  // exponent vector; n <= 8
int mono_degree(const Mono& m);

class Poly {
 public:
  explicit Poly(BasisRef basis);
  static Poly constant(BasisRef basis, const CycNum& c);
  static Poly variable(BasisRef basis, int i);
  // sum_i coeffs[i] * b_i
  static Poly linear(BasisRef basis, const std::vector<CycNum>& coeffs);

  const BasisRef& basis() const { return basis_; }
  int dim() const { return basis_->dim(); }
  const std::map<Mono, CycNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;  // -1 for zero
  CycNum coefficient(const Mono& m) const;

  void add_term(const Mono& m, const CycNum& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const CycNum& c) const;
  Poly pow(int e) const;
  // Same coefficients, relabelled as coordinates of another basis.
  Poly relabeled(BasisRef basis) const;

  // Structural equality; basis must agree as well.
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // e.g. "(1/2*z + 1)*x1^2 - x2"; variables are prefix + (i+1).
  std::string to_string(const std::string& prefix = "x", int conductor = 0) const;

 private:
  void check_basis(const Poly& o) const;

  BasisRef basis_;
  std::map<Mono, CycNum> terms_;
};

// Scalar rendering at a fixed conductor (0 keeps the value's own).
std::string format_scalar(const CycNum& c, int conductor);

// Rewrites f (in basis B) in basis `to`.
Poly change_coords(const Poly& f, const BasisRef& to);
// Substitutes b_i -> sum_j m(j, i) c_j, with c the basis `out`.
Poly substitute_linear(const Poly& f, const Matrix& m, const BasisRef& out);
// ^g f for a matrix g in standard coordinates; result stays in f's basis.
Poly group_act(const Matrix& g, const Poly& f);

// Demazure operator in the i-th variable with eigenvalue eps = zeta_N^k.
Poly quantum_partial(const Poly& f, int i, int k, int conductor);
Poly quantum_partial(const Poly& f, int i, const EigenData& ed);
// ^{s_1 ... s_{j-1}} applied to quantum_partial(f, j).
Poly twisted_partial(const Poly& f, int j, const EigenData& ed);
// [k]_eps for eps = zeta_N^e, built in one reduction.
CycNum quantum_integer_exp(long k, int e, int conductor);

// f / u when the linear form u divides f exactly, nullopt otherwise.
std::optional<Poly> divide_exact(const Poly& f, const Poly& u);

// Parses a polynomial; x_i is the i-th standard vector, w_i the i-th vector of
// `eigen` (if given). The result is expressed in `target`.
Poly parse_poly(std::string_view text, int conductor, const BasisRef& target,
                const BasisRef& eigen = nullptr);

}  // namespace hb

#endif  // HOCHBRACKET_POLY_HPP_
