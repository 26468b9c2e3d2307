#include "hochbracket/cochain.hpp"

#include <algorithm>
#include <functional>

#include "hochbracket/errors.hpp"

namespace hb {

std::vector<int> wedge_indices(Wedge w) {
  std::vector<int> idx;
  for (int i = 0; w; ++i, w >>= 1)
    if (w & 1u) idx.push_back(i);
  return idx;
}

Wedge wedge_from_indices(const std::vector<int>& idx) {
  Wedge w = 0;
  for (int i : idx) w |= 1u << i;
  return w;
}

int wedge_sort_sign(const std::vector<int>& idx) {
  int sign = 1;
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = a + 1; b < idx.size(); ++b) {
      if (idx[a] == idx[b]) return 0;
      if (idx[a] > idx[b]) sign = -sign;
    }
  return sign;
}

void GForm::add(Wedge w, const Poly& f) {
  if (f.is_zero()) return;
  auto it = comps.find(w);
  if (it == comps.end()) {
    comps.emplace(w, f.relabeled(basis));
    return;
  }
  it->second += f.relabeled(basis);
  if (it->second.is_zero()) comps.erase(it);
}

namespace {

std::vector<Wedge> subsets_of_size(int n, int k) {
  std::vector<Wedge> out;
  for (Wedge w = 0; w < (1u << n); ++w)
    if (__builtin_popcount(w) == k) out.push_back(w);
  return out;
}

}  // namespace

GForm convert_form(const GForm& form, const BasisRef& to) {
  GForm out{to, {}};
  if (same_basis(form.basis, to)) {
    for (const auto& [w, f] : form.comps) out.add(w, f.relabeled(to));
    return out;
  }
  const int n = to->dim();
  // b_i^* = sum_j N_ij b'_j^* with N the columns of `to` in `form.basis` coordinates.
  Matrix nm = change_of_basis(*form.basis, *to);
  std::map<std::pair<Wedge, Wedge>, CycNum> dets;
  for (const auto& [w, f] : form.comps) {
    Poly g = change_coords(f, to);
    std::vector<int> rows = wedge_indices(w);
    for (Wedge target : subsets_of_size(n, static_cast<int>(rows.size()))) {
      auto key = std::make_pair(w, target);
      auto it = dets.find(key);
      if (it == dets.end()) it = dets.emplace(key, submatrix_det(nm, rows, wedge_indices(target))).first;
      if (it->second.is_zero()) continue;
      out.add(target, g.scaled(it->second));
    }
  }
  return out;
}

bool Cochain::is_zero() const {
  for (const auto& [tag, f] : terms_)
    if (!f.is_zero()) return false;
  return true;
}

std::vector<int> Cochain::support() const {
  std::vector<int> s;
  for (const auto& [tag, f] : terms_)
    if (!f.is_zero()) s.push_back(tag);
  return s;
}

void Cochain::add(int tag, Wedge w, const Poly& f) {
  if (f.is_zero()) return;
  if (__builtin_popcount(w) != degree_) throw PreconditionError("wedge degree does not match cochain degree");
  auto it = terms_.find(tag);
  if (it == terms_.end()) {
    GForm g{f.basis(), {}};
    g.add(w, f);
    terms_.emplace(tag, std::move(g));
    return;
  }
  if (same_basis(it->second.basis, f.basis())) {
    it->second.add(w, f);
    return;
  }
  GForm piece{f.basis(), {}};
  piece.add(w, f);
  for (const auto& [w2, f2] : convert_form(piece, it->second.basis).comps) it->second.add(w2, f2);
}

void Cochain::add_form(int tag, const GForm& form) {
  auto it = terms_.find(tag);
  if (it == terms_.end()) {
    if (!form.is_zero()) terms_.emplace(tag, form);
    return;
  }
  const GForm& conv = same_basis(it->second.basis, form.basis) ? form : convert_form(form, it->second.basis);
  for (const auto& [w, f] : conv.comps) it->second.add(w, f);
}

Cochain& Cochain::operator+=(const Cochain& o) {
  for (const auto& [tag, f] : o.terms_) add_form(tag, f);
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) { return *this += o.scaled(CycNum(-1)); }

Cochain Cochain::scaled(const CycNum& c) const {
  Cochain r(degree_, dim_);
  if (c.is_zero()) return r;
  for (const auto& [tag, form] : terms_) {
    GForm g{form.basis, {}};
    for (const auto& [w, f] : form.comps) g.comps.emplace(w, f.scaled(c));
    r.terms_.emplace(tag, std::move(g));
  }
  return r;
}

Cochain canonical(const Group& G, const Cochain& a) {
  Cochain r(a.degree(), a.dim());
  for (const auto& [tag, form] : a.terms()) {
    GForm g = convert_form(form, G.eigen(tag)->basis);
    if (!g.is_zero()) r.set_form(tag, std::move(g));
  }
  return r;
}

bool cochain_equal(const Group& G, const Cochain& a, const Cochain& b) {
  if (a.degree() != b.degree()) return a.is_zero() && b.is_zero();
  Cochain x = canonical(G, a), y = canonical(G, b);
  if (x.terms().size() != y.terms().size()) return false;
  auto it = y.terms().begin();
  for (const auto& [tag, form] : x.terms()) {
    if (it->first != tag) return false;
    const auto& c1 = form.comps;
    const auto& c2 = it->second.comps;
    if (c1.size() != c2.size()) return false;
    auto jt = c2.begin();
    for (const auto& [w, f] : c1) {
      if (jt->first != w || jt->second != f) return false;
      ++jt;
    }
    ++it;
  }
  return true;
}

Cochain to_standard(const Cochain& a) {
  Cochain r(a.degree(), a.dim());
  BasisRef std_basis = standard_basis(a.dim());
  for (const auto& [tag, form] : a.terms()) {
    GForm g = convert_form(form, std_basis);
    if (!g.is_zero()) r.set_form(tag, std::move(g));
  }
  return r;
}

Cochain act_on_cochain(const Group& G, int a, const Cochain& alpha) {
  if (a == 0) return alpha;
  Cochain r(alpha.degree(), alpha.dim());
  for (const auto& [tag, form] : alpha.terms()) {
    BasisRef nb;
    if (form.basis == G.eigen(tag)->basis) {
      nb = G.conjugated_canonical(a, tag)->basis;
    } else {
      auto b = std::make_shared<Basis>();
      b->label = G.word(a) + "." + form.basis->label;
      b->to_standard = G.element(a) * form.basis->to_standard;
      b->from_standard = form.basis->from_standard * G.element(G.inv(a));
      nb = b;
    }
    GForm g{nb, {}};
    for (const auto& [w, f] : form.comps) g.comps.emplace(w, f.relabeled(nb));
    r.set_form(G.conj(a, tag), std::move(g));
  }
  return r;
}

Cochain reynolds_over(const Group& G, const std::vector<int>& subgroup, const Cochain& alpha) {
  FormAccumulator acc(alpha.degree(), alpha.dim());
  for (int a : subgroup) acc.add(act_on_cochain(G, a, alpha));
  return acc.result(G).scaled(CycNum(mpq_class(1, static_cast<long>(subgroup.size()))));
}

Cochain reynolds(const Group& G, const Cochain& alpha) {
  std::vector<int> all(G.order());
  for (int a = 0; a < G.order(); ++a) all[a] = a;
  return reynolds_over(G, all, alpha);
}

bool is_invariant(const Group& G, const Cochain& alpha) {
  for (int gen : G.generators())
    if (!cochain_equal(G, act_on_cochain(G, gen, alpha), alpha)) return false;
  return true;
}

namespace {

Cochain project(const Group& G, const Cochain& alpha, bool exterior) {
  Cochain c = canonical(G, alpha);
  Cochain r(alpha.degree(), alpha.dim());
  for (const auto& [tag, form] : c.terms()) {
    const EigenData& ed = *G.eigen(tag);
    GForm g{form.basis, {}};
    for (const auto& [w, f] : form.comps) {
      if (exterior && (w & ed.perp_mask) != ed.perp_mask) continue;
      Poly kept(f.basis());
      for (const auto& [m, coeff] : f.terms()) {
        bool ok = true;
        for (int i = 0; i < ed.dim(); ++i)
          if (m[i] && !ed.is_fixed(i)) ok = false;
        if (ok) kept.add_term(m, coeff);
      }
      g.add(w, kept);
    }
    if (!g.is_zero()) r.set_form(tag, std::move(g));
  }
  return r;
}

}  // namespace

Cochain proj_Vg(const Group& G, const Cochain& alpha) { return project(G, alpha, false); }

Cochain proj_H(const Group& G, const Cochain& alpha) { return project(G, alpha, true); }

bool in_H(const Group& G, const Cochain& alpha) { return cochain_equal(G, proj_H(G, alpha), alpha); }

Cochain koszul_dual_diff(const Group& G, const Cochain& alpha) {
  Cochain r(alpha.degree() + 1, alpha.dim());
  const int n = alpha.dim();
  for (const auto& [tag, form] : alpha.terms()) {
    const Basis& b = *form.basis;
    Matrix a = b.from_standard * G.element(tag) * b.to_standard;
    GForm out{form.basis, {}};
    for (int j = 0; j < n; ++j) {
      std::vector<CycNum> col(n);
      bool zero = true;
      for (int i = 0; i < n; ++i) {
        col[i] = (i == j ? CycNum(1) : CycNum(0)) - a(i, j);
        if (!col[i].is_zero()) zero = false;
      }
      if (zero) continue;
      Poly lj = Poly::linear(form.basis, col);
      for (const auto& [w, f] : form.comps) {
        if (w >> j & 1u) continue;
        int below = __builtin_popcount(w & ((1u << j) - 1));
        Poly t = lj * f;
        out.add(w | (1u << j), below % 2 ? -t : t);
      }
    }
    if (!out.is_zero()) r.set_form(tag, std::move(out));
  }
  return r;
}

namespace {

void monomials_upto(const std::vector<int>& vars, int d, bool exact, std::vector<Mono>& out) {
  std::function<void(size_t, int, Mono&)> rec = [&](size_t k, int left, Mono& m) {
    if (k == vars.size()) {
      if (!exact || left == 0) out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[vars[k]] = static_cast<uint16_t>(e);
      rec(k + 1, left - e, m);
    }
    m[vars[k]] = 0;
  };
  Mono m{};
  rec(0, d, m);
  std::stable_sort(out.begin(), out.end(),
                   [](const Mono& a, const Mono& b) { return mono_degree(a) < mono_degree(b); });
}

}  // namespace

std::vector<Cochain> h_space_basis(const Group& G, int g, int p, int d, bool exact_degree) {
  std::vector<Cochain> out;
  const EigenData& ed = *G.eigen(g);
  const int n = G.dim();
  if (p < ed.perp_count || p > n || d < 0) return out;
  std::vector<int> fixed;
  for (int i = 0; i < n; ++i)
    if (ed.is_fixed(i)) fixed.push_back(i);
  std::vector<Mono> monos;
  monomials_upto(fixed, d, exact_degree, monos);
  std::vector<Wedge> wedges;
  for (Wedge s : subsets_of_size(n, p - ed.perp_count))
    if ((s & ed.perp_mask) == 0) wedges.push_back(s | ed.perp_mask);
  for (const Mono& m : monos)
    for (Wedge w : wedges) {
      Poly f(ed.basis);
      f.add_term(m, CycNum(1));
      Cochain c(p, n);
      c.add(g, w, f);
      out.push_back(std::move(c));
    }
  return out;
}

namespace {

using CoordKey = std::tuple<int, Wedge, Mono>;

std::map<CoordKey, CycNum> coordinates(const Cochain& c) {
  std::map<CoordKey, CycNum> v;
  for (const auto& [tag, form] : c.terms())
    for (const auto& [w, f] : form.comps)
      for (const auto& [m, coeff] : f.terms()) v.emplace(CoordKey{tag, w, m}, coeff);
  return v;
}

// Stacks canonical coordinate rows; returns the rref and the column keys.
Matrix stacked(const Group& G, const std::vector<Cochain>& v, std::vector<CoordKey>& keys) {
  std::vector<std::map<CoordKey, CycNum>> rows;
  std::map<CoordKey, int> col;
  for (const auto& c : v) {
    rows.push_back(coordinates(canonical(G, c)));
    for (const auto& [k, x] : rows.back()) col.emplace(k, 0);
  }
  keys.clear();
  for (auto& [k, idx] : col) {
    idx = static_cast<int>(keys.size());
    keys.push_back(k);
  }
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(keys.size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (const auto& [k, x] : rows[r]) m(static_cast<int>(r), col[k]) = x;
  return m;
}

}  // namespace

std::vector<Cochain> echelon_basis(const Group& G, const std::vector<Cochain>& v) {
  std::vector<Cochain> out;
  if (v.empty()) return out;
  std::vector<CoordKey> keys;
  Matrix m = stacked(G, v, keys);
  std::vector<int> piv;
  Matrix r = m.rref(&piv);
  for (size_t row = 0; row < piv.size(); ++row) {
    Cochain c(v[0].degree(), v[0].dim());
    for (size_t j = 0; j < keys.size(); ++j) {
      const CycNum& x = r(static_cast<int>(row), static_cast<int>(j));
      if (x.is_zero()) continue;
      const auto& [tag, w, mono] = keys[j];
      Poly f(G.eigen(tag)->basis);
      f.add_term(mono, x);
      c.add(tag, w, f);
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool in_span(const Group& G, const std::vector<Cochain>& v, const Cochain& x) {
  if (canonical(G, x).is_zero()) return true;
  if (v.empty()) return false;
  std::vector<CoordKey> keys;
  int base = stacked(G, v, keys).rank();
  std::vector<Cochain> w = v;
  w.push_back(x);
  return stacked(G, w, keys).rank() == base;
}

std::vector<Cochain> invariant_basis(const Group& G, int p, int d, bool exact_degree) {
  std::vector<Cochain> out;
  const auto& cls = G.classes();
  for (int g : cls.representatives) {
    std::vector<Cochain> averaged;
    for (const auto& gen : h_space_basis(G, g, p, d, exact_degree)) {
      Cochain avg = reynolds_over(G, G.centralizer(g), gen);
      if (!avg.is_zero()) averaged.push_back(std::move(avg));
    }
    std::vector<int> reps = G.coset_reps(g);
    for (const auto& alpha : echelon_basis(G, averaged)) {
      FormAccumulator acc(p, G.dim());
      for (int c : reps) acc.add(act_on_cochain(G, c, alpha));
      out.push_back(acc.result(G));
    }
  }
  return out;
}

std::map<int, Poly> evaluate_form(const Cochain& alpha, const std::vector<std::vector<CycNum>>& vs) {
  std::map<int, Poly> out;
  const int n = alpha.dim();
  if (static_cast<int>(vs.size()) != alpha.degree())
    throw PreconditionError("evaluate_form: wrong number of vectors");
  BasisRef std_basis = standard_basis(n);
  for (const auto& [tag, form] : alpha.terms()) {
    Matrix coords(n, static_cast<int>(vs.size()));
    for (size_t k = 0; k < vs.size(); ++k) {
      auto c = form.basis->from_standard.apply(vs[k]);
      for (int i = 0; i < n; ++i) coords(i, static_cast<int>(k)) = c[i];
    }
    std::vector<int> cols(vs.size());
    for (size_t k = 0; k < vs.size(); ++k) cols[k] = static_cast<int>(k);
    Poly sum(std_basis);
    for (const auto& [w, f] : form.comps) {
      CycNum d = submatrix_det(coords, wedge_indices(w), cols);
      if (!d.is_zero()) sum += change_coords(f, std_basis).scaled(d);
    }
    if (!sum.is_zero()) out.emplace(tag, std::move(sum));
  }
  return out;
}

void FormAccumulator::add(int tag, GForm form) {
  if (form.is_zero()) return;
  auto& list = pending_[tag];
  for (auto& existing : list) {
    if (existing.basis == form.basis) {
      for (const auto& [w, f] : form.comps) existing.add(w, f);
      return;
    }
  }
  list.push_back(std::move(form));
}

void FormAccumulator::add(const Cochain& c) {
  for (const auto& [tag, form] : c.terms()) add(tag, form);
}

void FormAccumulator::merge(FormAccumulator&& o) {
  for (auto& [tag, list] : o.pending_)
    for (auto& form : list) add(tag, std::move(form));
}

Cochain FormAccumulator::result(const Group& G) const {
  Cochain r(degree_, dim_);
  for (const auto& [tag, list] : pending_) {
    GForm sum{G.eigen(tag)->basis, {}};
    for (const auto& form : list)
      for (const auto& [w, f] : convert_form(form, sum.basis).comps) sum.add(w, f);
    if (!sum.is_zero()) r.set_form(tag, std::move(sum));
  }
  return r;
}

}  // namespace hb
