// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycNum is stored in the power basis {1, z, ..., z^(phi(N)-1)} modulo the
// N-th cyclotomic polynomial, with arbitrary-precision rational coordinates.
// Values of different conductors are promoted to the lcm on contact.

#ifndef HOCHBRACKET_CYCLOTOMIC_HPP_
#define HOCHBRACKET_CYCLOTOMIC_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hb {

namespace detail {
struct CycField;  // N, phi(N), Phi_N; interned for the life of the process
}

// Coefficients of Phi_n, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int n);
int euler_phi(int n);
long lcm_int(long a, long b);

class CycNum {
 public:
  CycNum();  // zero, conductor 1
  CycNum(long v);                                   // NOLINT: implicit by design of a scalar type
  CycNum(const mpq_class& q);                       // NOLINT
  CycNum(int conductor, std::vector<mpq_class> coeffs);  // reduces mod Phi_N

  static CycNum root_of_unity(long k, int n);

  int conductor() const;
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Only valid when is_rational().
  mpq_class rational_value() const;

  // Same value expressed with conductor n (n must be a multiple of conductor()).
  CycNum promoted(int n) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  CycNum inverse() const;
  CycNum pow(long e) const;

  // Rendered with `z` for zeta_N, e.g. "1/2*z^3 - 2".
  std::string to_string() const;
  // True when to_string() is a single signed term (no parentheses needed in products).
  bool is_monomial() const;

 private:
  CycNum(const detail::CycField* field, std::vector<mpq_class> coeffs, bool reduce);
  void reduce();
  static const detail::CycField* field_for(int n);
  void unify(CycNum& other);

  const detail::CycField* field_;
  std::vector<mpq_class> coeffs_;
};

// Smallest m >= 1 with a^m = 1, or nullopt when a is not a root of unity.
// Throws PreconditionError on zero.
std::optional<long> order_of_unity(const CycNum& a);

// 1 + eps + ... + eps^(k-1); zero for k == 0.
CycNum quantum_integer(long k, const CycNum& eps);

// Parses `1/2*z^3 - 2`, `(1+z)^2`, `-z^-1`, with z = zeta_conductor.
CycNum parse_cyclotomic(std::string_view text, int conductor);

}  // namespace hb

#endif  // HOCHBRACKET_CYCLOTOMIC_HPP_
