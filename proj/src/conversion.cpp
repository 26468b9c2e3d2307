#include "hochbracket/conversion.hpp"

#include <algorithm>
#include <numeric>

#include "hochbracket/errors.hpp"

namespace hb {

void add_to(AlgElem& x, int tag, const Poly& f) {
  if (f.is_zero()) return;
  Poly s = change_coords(f, standard_basis(f.dim()));
  auto it = x.find(tag);
  if (it == x.end()) {
    x.emplace(tag, std::move(s));
    return;
  }
  it->second += s;
  if (it->second.is_zero()) x.erase(it);
}

AlgElem scaled(const AlgElem& x, const CycNum& c) {
  AlgElem r;
  for (const auto& [tag, f] : x) add_to(r, tag, f.scaled(c));
  return r;
}

AlgElem subtract(const AlgElem& x, const AlgElem& y) {
  AlgElem r = x;
  for (const auto& [tag, f] : y) add_to(r, tag, -f);
  return r;
}

Evaluator tau_evaluator(const Group& G, const Cochain& alpha, const BasisChoice& bases) {
  struct Part {
    int tag;
    EdRef ed;
    GForm form;
  };
  std::vector<Part> parts;
  for (const auto& [tag, form] : alpha.terms()) {
    EdRef ed = bases.get(G, tag);
    parts.push_back({tag, ed, convert_form(form, ed->basis)});
  }
  const int p = alpha.degree();
  return [parts, p](const std::vector<Poly>& args) {
    if (static_cast<int>(args.size()) != p) throw PreconditionError("tau: wrong number of arguments");
    AlgElem out;
    for (const auto& part : parts) add_to(out, part.tag, upsilon(part.form, *part.ed, args));
    return out;
  };
}

Cochain phi_star(const Group& G, const Evaluator& f, int p) {
  const int n = G.dim();
  Cochain out(p, n);
  if (p > n) return out;
  BasisRef std_basis = standard_basis(n);
  for (Wedge J = 0; J < (1u << n); ++J) {
    if (__builtin_popcount(J) != p) continue;
    std::vector<int> idx = wedge_indices(J);
    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    AlgElem sum;
    do {
      std::vector<Poly> args;
      for (int k = 0; k < p; ++k) args.push_back(Poly::variable(std_basis, idx[perm[k]]));
      int sign = wedge_sort_sign(perm);
      for (const auto& [tag, v] : f(args)) add_to(sum, tag, sign < 0 ? -v : v);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& [tag, v] : sum) out.add(tag, J, v);
  }
  return out;
}

BarMultiplier::BarMultiplier(const Group& G, Cochain alpha) : group_(&G), alpha_(canonical(G, alpha)) {
  if (!in_H(G, alpha_)) throw PreconditionError("Gamma needs a cochain in H; apply proj_H first");
}

AlgElem BarMultiplier::operator()(const std::vector<std::pair<Poly, int>>& args) const {
  const Group& G = *group_;
  const int p = degree();
  if (static_cast<int>(args.size()) != p) throw PreconditionError("Gamma: wrong number of arguments");
  // f_1 (x) g_1.f_2 (x) g_1 g_2.f_3 ..., and the trailing tag g_1 ... g_p.
  std::vector<Poly> twisted;
  int prefix = G.identity();
  for (const auto& [f, g] : args) {
    twisted.push_back(prefix == G.identity() ? f : group_act(G.element(prefix), f));
    prefix = G.mul(prefix, g);
  }
  AlgElem out;
  for (const auto& [t, form] : alpha_.terms()) {
    const EigenData& ed = *G.eigen(t);
    for (int c = 0; c < G.order(); ++c) {
      const Matrix& cm = G.element(c);
      const Matrix& cinv = G.element(G.inv(c));
      std::vector<Poly> pulled;
      for (const auto& x : twisted) pulled.push_back(c == 0 ? x : group_act(cinv, x));
      Poly v = upsilon(form, ed, pulled);
      if (v.is_zero()) continue;
      if (c != 0) v = group_act(cm, v);
      add_to(out, G.mul(G.conj(c, t), prefix), v);
    }
  }
  return scaled(out, CycNum(mpq_class(1, G.order())));
}

Evaluator BarMultiplier::restricted() const {
  BarMultiplier self = *this;
  return [self](const std::vector<Poly>& args) {
    std::vector<std::pair<Poly, int>> tagged;
    for (const auto& f : args) tagged.emplace_back(f, 0);
    return self(tagged);
  };
}

BarMultiplier gamma(const Group& G, const Cochain& alpha) { return BarMultiplier(G, alpha); }

Cochain gamma_prime(const Group& G, const BarMultiplier& m) {
  if (m.degree() > 3) throw PreconditionError("Gamma' is implemented for degree <= 3 only");
  return proj_H(G, phi_star(G, m.restricted(), m.degree()));
}

bool divisibility_check(const Group& G, const Cochain& alpha, const std::vector<CycNum>& w, int m) {
  if (alpha.degree() != 2) throw PreconditionError("divisibility check needs a degree-2 cochain");
  if (m < 0) throw PreconditionError("divisibility check needs m >= 0");
  const int n = G.dim();
  BasisRef std_basis = standard_basis(n);
  Poly wp = Poly::linear(std_basis, w);
  Cochain c = canonical(G, alpha);
  for (const auto& [g, form] : c.terms()) {
    const EigenData& ed = *G.eigen(g);
    if (ed.perp_count != 2) throw PreconditionError("divisibility check needs bireflection tags");
    Poly u = wp - group_act(G.element(g), wp);
    Poly d = upsilon(form, ed, {wp.pow(m), wp}) - upsilon(form, ed, {wp, wp.pow(m)});
    if (d.is_zero()) continue;
    if (u.is_zero()) return false;
    if (!divide_exact(change_coords(d, std_basis), u)) return false;
  }
  return true;
}

}  // namespace hb
