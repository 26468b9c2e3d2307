#include "hochbracket/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "hochbracket/errors.hpp"
#include "hochbracket/expr_parser.hpp"
#include "hochbracket/group.hpp"

namespace hb {

int mono_degree(const Mono& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

Poly::Poly(BasisRef basis) : basis_(std::move(basis)) {}

Poly Poly::constant(BasisRef basis, const CycNum& c) {
  Poly p(std::move(basis));
  p.add_term(Mono{}, c);
  return p;
}

Poly Poly::variable(BasisRef basis, int i) {
  Poly p(std::move(basis));
  Mono m{};
  m[i] = 1;
  p.add_term(m, CycNum(1));
  return p;
}

Poly Poly::linear(BasisRef basis, const std::vector<CycNum>& coeffs) {
  Poly p(std::move(basis));
  for (size_t i = 0; i < coeffs.size(); ++i) {
    Mono m{};
    m[i] = 1;
    p.add_term(m, coeffs[i]);
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

CycNum Poly::coefficient(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycNum(0) : it->second;
}

void Poly::add_term(const Mono& m, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Poly::check_basis(const Poly& o) const {
  if (!same_basis(basis_, o.basis_))
    throw PreconditionError("polynomial basis mismatch: " + basis_->label + " vs " + o.basis_->label);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_basis(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_basis(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_basis(b);
  Poly r(a.basis_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Mono m;
      for (size_t i = 0; i < m.size(); ++i) m[i] = static_cast<uint16_t>(ma[i] + mb[i]);
      r.add_term(m, ca * cb);
    }
  return r;
}

Poly Poly::scaled(const CycNum& c) const {
  Poly r(basis_);
  if (c.is_zero()) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw PreconditionError("negative power of a polynomial");
  Poly r = Poly::constant(basis_, CycNum(1));
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

Poly Poly::relabeled(BasisRef basis) const {
  Poly r = *this;
  r.basis_ = std::move(basis);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_basis(a.basis_, b.basis_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (it->first != m || it->second != c) return false;
    ++it;
  }
  return true;
}

std::string format_scalar(const CycNum& c, int conductor) {
  if (conductor > 0 && !c.is_rational() && c.conductor() != conductor &&
      conductor % c.conductor() == 0)
    return c.promoted(conductor).to_string();
  return c.to_string();
}

std::string Poly::to_string(const std::string& prefix, int conductor) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Mono, CycNum>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    int dx = mono_degree(x.first), dy = mono_degree(y.first);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::string out;
  for (const auto& [m, c] : sorted) {
    std::string mono;
    for (int i = 0; i < dim(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += prefix + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string cs = format_scalar(c, conductor);
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (c.is_one()) {
      term = mono;
    } else if ((-c).is_one()) {
      term = "-" + mono;
    } else if (c.is_monomial()) {
      term = cs + "*" + mono;
    } else {
      term = "(" + cs + ")*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

Poly substitute_linear(const Poly& f, const Matrix& m, const BasisRef& out) {
  const int n = f.dim();
  Poly r(out);
  if (f.is_zero()) return r;
  // Monomial matrices (one nonzero per column) substitute termwise.
  std::vector<int> target(n, -1);
  bool monomial = true;
  for (int i = 0; i < n && monomial; ++i)
    for (int j = 0; j < n; ++j) {
      if (m(j, i).is_zero()) continue;
      if (target[i] >= 0) {
        monomial = false;
        break;
      }
      target[i] = j;
    }
  if (monomial) {
    for (const auto& [mono, c] : f.terms()) {
      Mono nm{};
      CycNum coeff = c;
      for (int i = 0; i < n; ++i) {
        if (!mono[i]) continue;
        nm[target[i]] = static_cast<uint16_t>(nm[target[i]] + mono[i]);
        const CycNum& s = m(target[i], i);
        if (!s.is_one()) coeff *= s.pow(mono[i]);
      }
      r.add_term(nm, coeff);
    }
    return r;
  }
  std::vector<std::vector<Poly>> powers(n);
  for (int i = 0; i < n; ++i) {
    std::vector<CycNum> col(n);
    for (int j = 0; j < n; ++j) col[j] = m(j, i);
    powers[i].push_back(Poly::constant(out, CycNum(1)));
    powers[i].push_back(Poly::linear(out, col));
  }
  for (const auto& [mono, c] : f.terms()) {
    Poly t = Poly::constant(out, c);
    for (int i = 0; i < n; ++i) {
      if (!mono[i]) continue;
      while (static_cast<int>(powers[i].size()) <= mono[i])
        powers[i].push_back(powers[i].back() * powers[i][1]);
      t = t * powers[i][mono[i]];
    }
    r += t;
  }
  return r;
}

Poly change_coords(const Poly& f, const BasisRef& to) {
  if (same_basis(f.basis(), to)) return f.relabeled(to);
  return substitute_linear(f, change_of_basis(*to, *f.basis()), to);
}

Poly group_act(const Matrix& g, const Poly& f) {
  const Basis& b = *f.basis();
  Matrix a = b.from_standard * g * b.to_standard;
  return substitute_linear(f, a, f.basis());
}

CycNum quantum_integer_exp(long k, int e, int conductor) {
  if (k < 0) throw PreconditionError("quantum integer needs k >= 0");
  if (e % conductor == 0) return CycNum(k);
  struct Key {
    long k;
    int e, n;
    bool operator==(const Key& o) const { return k == o.k && e == o.e && n == o.n; }
  };
  struct KeyHash {
    size_t operator()(const Key& x) const { return (x.k * 1000003u) ^ (x.e * 7919u) ^ x.n; }
  };
  thread_local std::unordered_map<Key, CycNum, KeyHash> cache;
  Key key{k, e, conductor};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<mpq_class> c(conductor);
  for (long t = 0; t < k; ++t) c[(static_cast<long>(e) * t) % conductor] += 1;
  CycNum v(conductor, std::move(c));
  cache.emplace(key, v);
  return v;
}

Poly quantum_partial(const Poly& f, int i, int k, int conductor) {
  Poly r(f.basis());
  for (const auto& [m, c] : f.terms()) {
    if (!m[i]) continue;
    Mono nm = m;
    --nm[i];
    r.add_term(nm, c * quantum_integer_exp(m[i], k, conductor));
  }
  return r;
}

Poly quantum_partial(const Poly& f, int i, const EigenData& ed) {
  return quantum_partial(f, i, ed.exponents[i], ed.conductor);
}

Poly twisted_partial(const Poly& f, int j, const EigenData& ed) {
  Poly q = quantum_partial(f, j, ed);
  bool trivial = true;
  for (int i = 0; i < j; ++i)
    if (ed.exponents[i] % ed.conductor) trivial = false;
  if (trivial) return q;
  Poly r(q.basis());
  for (const auto& [m, c] : q.terms()) {
    long e = 0;
    for (int i = 0; i < j; ++i) e += static_cast<long>(ed.exponents[i]) * m[i];
    e %= ed.conductor;
    r.add_term(m, e ? c * CycNum::root_of_unity(e, ed.conductor) : c);
  }
  return r;
}

std::optional<Poly> divide_exact(const Poly& f, const Poly& u) {
  if (!same_basis(f.basis(), u.basis())) throw PreconditionError("divide_exact: basis mismatch");
  if (u.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (u.degree() != 1 || u.coefficient(Mono{}) != CycNum(0))
    throw PreconditionError("divide_exact expects a linear form");
  int p = -1;
  CycNum lead;
  for (const auto& [m, c] : u.terms())
    for (int i = 0; i < u.dim(); ++i)
      if (m[i] && p < i) {
        p = i;
        lead = c;
      }
  CycNum lead_inv = lead.inverse();
  Poly rem = f, quot(f.basis());
  for (;;) {
    int top = 0;
    for (const auto& [m, c] : rem.terms()) top = std::max<int>(top, m[p]);
    if (top == 0) break;
    Poly step(f.basis());
    for (const auto& [m, c] : rem.terms()) {
      if (m[p] != top) continue;
      Mono nm = m;
      --nm[p];
      step.add_term(nm, c * lead_inv);
    }
    quot += step;
    rem -= step * u;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

Poly parse_poly(std::string_view text, int conductor, const BasisRef& target, const BasisRef& eigen) {
  struct Ops {
    int conductor;
    const BasisRef& target;
    const BasisRef& eigen;
    Poly number(const mpq_class& q) const { return Poly::constant(target, CycNum(q)); }
    Poly identifier(std::string_view id) const {
      if (id == "z") return Poly::constant(target, CycNum::root_of_unity(1, conductor));
      if (id == "i") return Poly::constant(target, CycNum::root_of_unity(1, 4));
      if (id.size() >= 2 && (id[0] == 'x' || id[0] == 'w')) {
        std::string digits(id.substr(id[1] == '_' ? 2 : 1));
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
          int k = std::stoi(digits) - 1;
          if (k < 0 || k >= target->dim())
            throw ParseError("variable '" + std::string(id) + "' out of range");
          std::vector<CycNum> v;
          if (id[0] == 'x') {
            v = target->from_standard.column(k);
          } else {
            if (!eigen) throw ParseError("eigenbasis variable '" + std::string(id) + "' needs a support");
            v = target->from_standard.apply(eigen->to_standard.column(k));
          }
          return Poly::linear(target, v);
        }
      }
      throw ParseError("unknown symbol '" + std::string(id) + "' in polynomial");
    }
    Poly divide(const Poly& a, const Poly& b) const {
      if (!b.is_constant() || b.is_zero()) throw ParseError("can only divide by a nonzero constant");
      return a.scaled(b.coefficient(Mono{}).inverse());
    }
    Poly power(const Poly& a, long e) const {
      if (e < 0) throw ParseError("negative exponent in polynomial");
      return a.pow(static_cast<int>(e));
    }
  };
  return parse_expression<Poly>(text, Ops{conductor, target, eigen});
}

}  // namespace hb
