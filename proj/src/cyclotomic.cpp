#include "hochbracket/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hochbracket/errors.hpp"
#include "hochbracket/expr_parser.hpp"

namespace hb {

namespace detail {
struct CycField {
  int n;
  int phi;
  std::vector<long> poly;  // Phi_n, monic, length phi + 1
};
}  // namespace detail

namespace {

std::mutex g_registry_mutex;

std::map<int, std::unique_ptr<detail::CycField>>& registry() {
  static std::map<int, std::unique_ptr<detail::CycField>> r;
  return r;
}

std::map<int, std::vector<long>>& poly_cache() {
  static std::map<int, std::vector<long>> c;
  return c;
}

// Caller holds g_registry_mutex.
const std::vector<long>& cyclo_locked(int n) {
  auto& cache = poly_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    std::vector<long> den = cyclo_locked(d);
    int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
    std::vector<long> q(dn - dd + 1, 0);
    for (int k = dn; k >= dd; --k) {
      long c = num[k];  // den is monic
      q[k - dd] = c;
      if (c == 0) continue;
      for (int i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
    }
    num = q;
  }
  return cache.emplace(n, num).first->second;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw PreconditionError("cyclotomic polynomial needs n >= 1");
  std::lock_guard<std::mutex> lock(g_registry_mutex);
  return cyclo_locked(n);
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

long lcm_int(long a, long b) { return a / std::gcd(a, b) * b; }

const detail::CycField* CycNum::field_for(int n) {
  if (n < 1) throw PreconditionError("conductor must be positive");
  if (n == 2) n = 1;  // Q(zeta_2) = Q
  std::lock_guard<std::mutex> lock(g_registry_mutex);
  auto& r = registry();
  auto it = r.find(n);
  if (it != r.end()) return it->second.get();
  auto f = std::make_unique<detail::CycField>();
  f->n = n;
  f->poly = cyclo_locked(n);
  f->phi = static_cast<int>(f->poly.size()) - 1;
  const detail::CycField* raw = f.get();
  r.emplace(n, std::move(f));
  return raw;
}

CycNum::CycNum() : field_(field_for(1)), coeffs_(1) {}

CycNum::CycNum(long v) : field_(field_for(1)), coeffs_(1, mpq_class(v)) {}

CycNum::CycNum(const mpq_class& q) : field_(field_for(1)), coeffs_(1, q) { coeffs_[0].canonicalize(); }

CycNum::CycNum(int conductor, std::vector<mpq_class> coeffs)
    : field_(nullptr), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  if (conductor == 2) {
    // z = -1: collapse to a rational.
    mpq_class v = 0;
    for (size_t k = 0; k < coeffs_.size(); ++k) v += (k % 2 ? -coeffs_[k] : coeffs_[k]);
    field_ = field_for(1);
    coeffs_.assign(1, v);
    return;
  }
  field_ = field_for(conductor);
  reduce();
}

CycNum::CycNum(const detail::CycField* field, std::vector<mpq_class> coeffs, bool do_reduce)
    : field_(field), coeffs_(std::move(coeffs)) {
  if (do_reduce) reduce();
}

void CycNum::reduce() {
  const int phi = field_->phi;
  const auto& p = field_->poly;
  if (field_->n == 1) {
    mpq_class v = 0;
    for (auto& c : coeffs_) v += c;  // z = 1
    coeffs_.assign(1, v);
    return;
  }
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= phi; --k) {
    if (sgn(coeffs_[k]) == 0) continue;
    mpq_class c = coeffs_[k];
    for (int i = 0; i < phi; ++i)
      if (p[i] != 0) coeffs_[k - phi + i] -= c * p[i];
    coeffs_[k] = 0;
  }
  coeffs_.resize(phi);
}

CycNum CycNum::root_of_unity(long k, int n) {
  if (n < 1) throw PreconditionError("root_of_unity needs N >= 1");
  long e = ((k % n) + n) % n;
  std::vector<mpq_class> c(n);
  c[e] = 1;
  return CycNum(n, std::move(c));
}

int CycNum::conductor() const { return field_->n; }

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t k = 1; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return false;
  return true;
}

bool CycNum::is_one() const { return is_rational() && coeffs_[0] == 1; }

mpq_class CycNum::rational_value() const {
  if (!is_rational()) throw PreconditionError("value is not rational");
  return coeffs_[0];
}

CycNum CycNum::promoted(int n) const {
  if (n == 2) n = 1;
  const int from = field_->n;
  if (n == from) return *this;
  if (n % from) throw PreconditionError("promotion target must be a multiple of the conductor");
  const detail::CycField* f = field_for(n);
  if (from == 1) {
    std::vector<mpq_class> c(f->phi);
    c[0] = coeffs_[0];
    return CycNum(f, std::move(c), false);
  }
  const int step = n / from;
  std::vector<mpq_class> c(n);
  for (size_t k = 0; k < coeffs_.size(); ++k) c[k * step] = coeffs_[k];
  return CycNum(f, std::move(c), true);
}

void CycNum::unify(CycNum& other) {
  if (field_ == other.field_) return;
  int n = static_cast<int>(lcm_int(field_->n, other.field_->n));
  if (field_->n != n) *this = promoted(n);
  if (other.field_->n != n) other = other.promoted(n);
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (field_ == o.field_) {
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  if (o.field_->n == 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  CycNum b = o;
  unify(b);
  for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  if (field_ == o.field_) {
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  if (o.field_->n == 1) {
    coeffs_[0] -= o.coeffs_[0];
    return *this;
  }
  CycNum b = o;
  unify(b);
  for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= b.coeffs_[k];
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (b.field_->n == 1) {
    CycNum r = a;
    if (sgn(b.coeffs_[0]) == 0) {
      for (auto& c : r.coeffs_) c = 0;
    } else if (b.coeffs_[0] != 1) {
      for (auto& c : r.coeffs_) c *= b.coeffs_[0];
    }
    return r;
  }
  if (a.field_->n == 1) return b * a;
  if (a.field_ != b.field_) {
    CycNum x = a, y = b;
    x.unify(y);
    return x * y;
  }
  const size_t phi = a.coeffs_.size();
  std::vector<mpq_class> c(2 * phi - 1);
  for (size_t i = 0; i < phi; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < phi; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycNum(a.field_, std::move(c), true);
}

CycNum& CycNum::operator*=(const CycNum& o) {
  *this = *this * o;
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  if (field_->n == 1) return CycNum(mpq_class(1) / coeffs_[0]);
  // Solve a * x = 1 using the multiplication matrix of a.
  const int phi = field_->phi;
  std::vector<std::vector<mpq_class>> m(phi, std::vector<mpq_class>(phi + 1));
  CycNum basis_elem = CycNum::root_of_unity(0, field_->n);
  CycNum z = CycNum::root_of_unity(1, field_->n);
  for (int j = 0; j < phi; ++j) {
    CycNum col = *this * basis_elem;  // a * z^j
    for (int i = 0; i < phi; ++i) m[i][j] = col.coeffs_[i];
    basis_elem = basis_elem * z;
  }
  m[0][phi] = 1;
  for (int col = 0; col < phi; ++col) {
    int piv = col;
    while (piv < phi && sgn(m[piv][col]) == 0) ++piv;
    std::swap(m[col], m[piv]);
    mpq_class inv = 1 / m[col][col];
    for (int k = col; k <= phi; ++k) m[col][k] *= inv;
    for (int r = 0; r < phi; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      mpq_class f = m[r][col];
      for (int k = col; k <= phi; ++k) m[r][k] -= f * m[col][k];
    }
  }
  std::vector<mpq_class> x(phi);
  for (int i = 0; i < phi; ++i) x[i] = m[i][phi];
  return CycNum(field_, std::move(x), false);
}

CycNum& CycNum::operator/=(const CycNum& o) {
  if (o.is_zero()) throw PreconditionError("division by zero");
  if (o.field_->n == 1) {
    for (auto& c : coeffs_) c /= o.coeffs_[0];
    return *this;
  }
  *this = *this * o.inverse();
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  CycNum x = a, y = b;
  x.unify(y);
  return x.coeffs_ == y.coeffs_;
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool CycNum::is_monomial() const {
  int nz = 0;
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) ++nz;
  return nz <= 1;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    const mpq_class& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    mpq_class a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  if (first) return "0";
  return os.str();
}

std::optional<long> order_of_unity(const CycNum& a) {
  if (a.is_zero()) throw PreconditionError("order_of_unity of zero");
  long bound = lcm_int(2, a.conductor());
  for (long m = 1; m <= bound; ++m) {
    if (bound % m) continue;
    if (a.pow(m).is_one()) return m;
  }
  return std::nullopt;
}

CycNum quantum_integer(long k, const CycNum& eps) {
  if (k < 0) throw PreconditionError("quantum_integer needs k >= 0");
  CycNum sum(0), term(1);
  for (long i = 0; i < k; ++i) {
    sum += term;
    if (i + 1 < k) term *= eps;
  }
  return sum;
}

CycNum parse_cyclotomic(std::string_view text, int conductor) {
  struct Ops {
    int conductor;
    CycNum number(const mpq_class& q) const { return CycNum(q); }
    CycNum identifier(std::string_view id) const {
      if (id == "z") return CycNum::root_of_unity(1, conductor);
      if (id == "i") return CycNum::root_of_unity(1, 4);
      throw ParseError("unknown symbol '" + std::string(id) + "' in scalar");
    }
    CycNum divide(const CycNum& a, const CycNum& b) const {
      if (b.is_zero()) throw ParseError("division by zero in scalar");
      return a / b;
    }
    CycNum power(const CycNum& a, long e) const {
      if (e < 0 && a.is_zero()) throw ParseError("zero to a negative power");
      return a.pow(e);
    }
  };
  CycNum v = parse_expression<CycNum>(text, Ops{conductor});
  return conductor == 1 ? v : v.promoted(static_cast<int>(lcm_int(conductor, v.conductor())));
}

}  // namespace hb
