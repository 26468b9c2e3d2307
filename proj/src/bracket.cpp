#include "hochbracket/bracket.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

#include "hochbracket/errors.hpp"

namespace hb {

namespace {

std::vector<Wedge> subsets(int n, int k) {
  std::vector<Wedge> out;
  if (k < 0 || k > n) return out;
  for (Wedge w = 0; w < (1u << n); ++w)
    if (__builtin_popcount(w) == k) out.push_back(w);
  return out;
}

int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (size_t a = 0; a < p.size(); ++a)
    for (size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) s = -s;
  return s;
}

GForm read_in(const GForm& form, const EigenData& ed) {
  if (form.basis == ed.basis) return form;
  return convert_form(form, ed.basis);
}

Poly std_vector(int n, int i) { return Poly::variable(standard_basis(n), i); }

Poly std_image(const Matrix& h, int i) {
  return Poly::linear(standard_basis(h.rows()), h.column(i));
}

}  // namespace

Poly upsilon(const GForm& form, const EigenData& ed, const std::vector<Poly>& args) {
  Poly out(ed.basis);
  if (form.is_zero()) return out;
  GForm f = read_in(form, ed);
  std::vector<Poly> conv;
  conv.reserve(args.size());
  for (const auto& a : args) conv.push_back(change_coords(a, ed.basis));
  for (const auto& [w, fg] : f.comps) {
    std::vector<int> j = wedge_indices(w);
    if (j.size() != conv.size()) throw PreconditionError("upsilon: argument count differs from form degree");
    Poly prod = fg;
    for (size_t k = 0; k < j.size() && !prod.is_zero(); ++k) {
      Poly t = twisted_partial(conv[k], j[k], ed);
      prod = t.is_zero() ? Poly(ed.basis) : t * prod;
    }
    out += prod;
  }
  return out;
}

Cochain circ_direct(const Group& G, const GForm& alpha, int p, const EigenData& ed1,
                    const GForm& beta, int q, const EigenData& ed2, std::vector<CircTrace>* trace) {
  const int n = G.dim();
  const int m = p + q - 1;
  Cochain out(std::max(m, 0), n);
  if (m < 0 || m > n || p == 0 || alpha.is_zero() || beta.is_zero()) return out;
  const int tag = G.mul(ed1.owner, ed2.owner);
  const Matrix& h = G.element(ed2.owner);
  BasisRef std_basis = standard_basis(n);
  GForm a = read_in(alpha, ed1);
  GForm b = read_in(beta, ed2);
  for (Wedge I : subsets(n, m)) {
    std::vector<int> idx = wedge_indices(I);
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    Poly total(ed1.basis);
    do {
      Poly sum(ed1.basis);
      std::vector<int> seq(m);
      for (int s = 0; s < m; ++s) seq[s] = idx[perm[s]];
      for (int k = 0; k < p; ++k) {
        std::vector<Poly> inner;
        for (int s = k; s < k + q; ++s) inner.push_back(std_vector(n, seq[s]));
        Poly fh = upsilon(b, ed2, inner);
        if (fh.is_zero()) continue;
        std::vector<Poly> args;
        for (int s = 0; s < k; ++s) args.push_back(std_vector(n, seq[s]));
        args.push_back(fh);
        for (int s = k + q; s < m; ++s) args.push_back(std_image(h, seq[s]));
        Poly v = upsilon(a, ed1, args);
        if ((q - 1) * k % 2) v = -v;
        sum += v;
      }
      if (perm_sign(perm) < 0) sum = -sum;
      if (trace && !sum.is_zero()) trace->push_back({I, perm, sum});
      total += sum;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.add(tag, I, change_coords(total, std_basis));
  }
  return out;
}

Cochain circ_det(const Group& G, const GForm& alpha, int p, const EigenData& ed1,
                 const GForm& beta, int q, const EigenData& ed2) {
  const int n = G.dim();
  const int m = p + q - 1;
  Cochain out(std::max(m, 0), n);
  if (m < 0 || m > n || p == 0 || alpha.is_zero() || beta.is_zero()) return out;
  const int tag = G.mul(ed1.owner, ed2.owner);
  GForm a = read_in(alpha, ed1);
  GForm b = read_in(beta, ed2);
  Matrix M = change_of_basis(*ed1.basis, *ed2.basis);
  GForm result{ed2.basis, {}};
  const long choose_q2 = static_cast<long>(q) * (q - 1) / 2;
  for (const auto& [L, fh] : b.comps) {
    if ((L & ed2.perp_mask) != ed2.perp_mask)
      throw PreconditionError("circ_det: second argument must lie in H for its basis");
    Poly fh1 = change_coords(fh, ed1.basis);
    for (const auto& [J, fg] : a.comps) {
      std::vector<int> jv = wedge_indices(J);
      std::vector<Poly> partial(p, Poly(ed1.basis));
      for (int k = 0; k < p; ++k) {
        Poly t = twisted_partial(fh1, jv[k], ed1);
        if (!t.is_zero()) partial[k] = t * fg;
      }
      for (Wedge I : subsets(n, m)) {
        if ((I & L) != L) continue;
        std::vector<int> iv = wedge_indices(I);
        long lambda_sum = 0;
        std::vector<int> rest;
        for (int pos = 0; pos < m; ++pos) {
          if (L >> iv[pos] & 1u)
            lambda_sum += pos + 1;
          else
            rest.push_back(iv[pos]);
        }
        Poly coeff(ed1.basis);
        for (int k = 0; k < p; ++k) {
          if (partial[k].is_zero()) continue;
          std::vector<int> jk = jv;
          jk.erase(jk.begin() + k);
          CycNum d = submatrix_det(M, jk, rest);
          if (d.is_zero()) continue;
          long nu = 1 - q - (k + 1) + lambda_sum - choose_q2;
          coeff += partial[k].scaled(((nu % 2) + 2) % 2 ? -d : d);
        }
        if (!coeff.is_zero()) result.add(I, change_coords(coeff, ed2.basis));
      }
    }
  }
  if (!result.is_zero()) out.set_form(tag, std::move(result));
  return out;
}

Cochain prebracket(const Group& G, const GForm& alpha, int p, const EigenData& ed1,
                   const GForm& beta, int q, const EigenData& ed2, CircMethod method) {
  auto circ = [&](const GForm& x, int px, const EigenData& ex, const GForm& y, int qy,
                  const EigenData& ey) {
    return method == CircMethod::det ? circ_det(G, x, px, ex, y, qy, ey)
                                     : circ_direct(G, x, px, ex, y, qy, ey);
  };
  const int m = p + q - 1;
  Cochain out(std::max(m, 0), G.dim());
  if (m < 0) return out;
  out += circ(alpha, p, ed1, beta, q, ed2);
  Cochain back = circ(beta, q, ed2, alpha, p, ed1);
  if ((p - 1) * (q - 1) % 2)
    out += back;
  else
    out -= back;
  return out;
}

EdRef BasisChoice::get(const Group& G, int tag) const {
  auto it = custom.find(tag);
  return it == custom.end() ? G.eigen(tag) : it->second;
}

namespace {

struct Piece {
  int tag;
  EdRef ed;
  GForm form;
};

std::vector<Piece> pieces(const Group& G, const Cochain& c, const BasisChoice& bases) {
  std::vector<Piece> out;
  for (const auto& [tag, form] : c.terms()) {
    if (form.is_zero()) continue;
    EdRef ed = bases.get(G, tag);
    out.push_back({tag, ed, read_in(form, *ed)});
  }
  return out;
}

Piece conjugate(const Group& G, const Piece& x, int a) {
  if (a == 0) return x;
  EdRef ed = x.ed == G.eigen(x.tag) ? G.conjugated_canonical(a, x.tag) : G.conjugated(x.ed, a);
  GForm f{ed->basis, {}};
  for (const auto& [w, poly] : x.form.comps) f.comps.emplace(w, poly.relabeled(ed->basis));
  return {ed->owner, ed, std::move(f)};
}

std::string describe(const Group& G, int a, int b, const Cochain& c) {
  std::ostringstream os;
  os << "pair (" << G.word(a) << ", " << G.word(b) << ")";
  Cochain s = to_standard(c);
  if (s.is_zero()) {
    os << ": 0";
    return os.str();
  }
  for (const auto& [tag, form] : s.terms())
    for (const auto& [w, f] : form.comps) {
      os << "\n  [" << G.word(tag) << "] (" << f.to_string("x", G.conductor()) << ") ";
      bool first = true;
      for (int i : wedge_indices(w)) {
        os << (first ? "" : "^") << "dx" << i + 1;
        first = false;
      }
    }
  return os.str();
}

}  // namespace

Cochain gerstenhaber_bracket(const Group& G, const Cochain& alpha, const Cochain& beta,
                             const BracketOptions& opts) {
  const int p = alpha.degree(), q = beta.degree();
  const int m = p + q - 1;
  if (!in_H(G, alpha) || !in_H(G, beta))
    throw PreconditionError("bracket inputs must lie in H; apply proj_H first");
  Cochain zero(std::max(m, 0), G.dim());
  if (m < 0) return zero;
  std::vector<Piece> xs = pieces(G, alpha, opts.bases);
  std::vector<Piece> ys = pieces(G, beta, opts.bases);
  const int order = G.order();
  const bool full = opts.strategy == BracketStrategy::full;
  const int a_count = full ? order : 1;

  auto work = [&](int a_begin, int a_end, FormAccumulator& acc, std::vector<std::string>* logs) {
    for (int a = a_begin; a < a_end; ++a)
      for (int b = 0; b < order; ++b) {
        Cochain pair(m, G.dim());
        for (const auto& x0 : xs) {
          Piece x = conjugate(G, x0, a);
          for (const auto& y0 : ys) {
            Piece y = conjugate(G, y0, b);
            Cochain pb = prebracket(G, x.form, p, *x.ed, y.form, q, *y.ed, opts.method);
            if (logs) pair += pb;
            acc.add(pb);
          }
        }
        if (logs) logs->push_back(describe(G, a, b, pair));
      }
  };

  FormAccumulator total(m, G.dim());
  int jobs = std::max(1, std::min(opts.jobs, a_count));
  std::vector<std::vector<std::string>> logs(jobs);
  if (jobs == 1) {
    work(0, a_count, total, opts.log ? &logs[0] : nullptr);
  } else {
    std::vector<FormAccumulator> accs(jobs, FormAccumulator(m, G.dim()));
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) {
      int lo = a_count * t / jobs, hi = a_count * (t + 1) / jobs;
      threads.emplace_back(work, lo, hi, std::ref(accs[t]), opts.log ? &logs[t] : nullptr);
    }
    for (auto& th : threads) th.join();
    for (auto& acc : accs) total.merge(std::move(acc));
  }
  if (opts.log)
    for (const auto& chunk : logs)
      for (const auto& line : chunk) opts.log(line);

  Cochain projected = proj_H(G, total.result(G));
  if (full) return projected.scaled(CycNum(mpq_class(1, static_cast<long>(order) * order)));
  return reynolds(G, projected).scaled(CycNum(mpq_class(1, order)));
}

PoissonReport poisson_check(const Group& G, const Cochain& alpha, const BracketOptions& opts) {
  if (alpha.degree() != 2) throw PreconditionError("Poisson check needs a degree-2 cocycle");
  PoissonReport r;
  Cochain a = alpha;
  if (!is_invariant(G, alpha)) {
    a = reynolds(G, alpha);
    r.averaged = true;
  }
  r.square = gerstenhaber_bracket(G, a, a, opts);
  r.poisson = r.square.is_zero();
  return r;
}

Cochain commuting_prebracket(const Group& G, int g, const GForm& alpha, int p, int h,
                             const GForm& beta, int q) {
  const int n = G.dim();
  const int m = p + q - 1;
  Cochain out(std::max(m, 0), n);
  if (m < 0 || m > n) return out;
  if (!same_basis(alpha.basis, beta.basis))
    throw PreconditionError("commuting prebracket needs one common basis");
  EdRef eg = G.custom_eigen(g, alpha.basis->to_standard, alpha.basis->label);
  EdRef eh = G.custom_eigen(h, alpha.basis->to_standard, alpha.basis->label);
  const int gh = G.mul(g, h), hg = G.mul(h, g);
  auto half = [&](const GForm& x, int px, const EigenData& ex, const GForm& y, int qy, int tag,
                  bool negate) {
    for (const auto& [J, fx] : x.comps) {
      std::vector<int> jv = wedge_indices(J);
      for (const auto& [L, fy] : y.comps) {
        std::vector<int> lv = wedge_indices(L);
        for (int k = 0; k < px; ++k) {
          std::vector<int> ik(jv.begin(), jv.begin() + k);
          ik.insert(ik.end(), lv.begin(), lv.end());
          ik.insert(ik.end(), jv.begin() + k + 1, jv.end());
          int s = wedge_sort_sign(ik);
          if (!s) continue;
          Poly t = twisted_partial(fy.relabeled(ex.basis), jv[k], ex);
          if (t.is_zero()) continue;
          if ((qy - 1) * k % 2) s = -s;
          if (negate) s = -s;
          Poly v = t * fx.relabeled(ex.basis);
          out.add(tag, wedge_from_indices(ik), s < 0 ? -v : v);
        }
      }
    }
  };
  half(alpha, p, *eg, beta, q, gh, false);
  half(beta, q, *eh, alpha, p, hg, (p - 1) * (q - 1) % 2 == 0);
  return out;
}

Cochain sn_bracket(const Group& G, const Cochain& alpha, const Cochain& beta) {
  for (const Cochain* c : {&alpha, &beta})
    for (int tag : c->support())
      if (!G.in_kernel(tag))
        throw PreconditionError("Schouten-Nijenhuis bracket needs tags acting trivially; " +
                                G.word(tag) + " does not");
  Cochain a = to_standard(alpha), b = to_standard(beta);
  Cochain out(std::max(alpha.degree() + beta.degree() - 1, 0), G.dim());
  for (const auto& [g, fa] : a.terms())
    for (const auto& [h, fb] : b.terms())
      out += commuting_prebracket(G, g, fa, alpha.degree(), h, fb, beta.degree());
  return out;
}

AbelianCase abelian_case(Wedge j, Wedge l) {
  if (__builtin_popcount(j) != 2 || __builtin_popcount(l) != 2) return AbelianCase::other;
  if (j == l) return AbelianCase::same_wedge;
  if (j & l) return AbelianCase::overlapping;
  return AbelianCase::disjoint;
}

namespace {

void require_diagonal(const Group& G) {
  if (!G.is_abelian()) throw PreconditionError("abelian formula needs an abelian group");
  for (int a = 0; a < G.order(); ++a)
    for (int i = 0; i < G.dim(); ++i)
      for (int j = 0; j < G.dim(); ++j)
        if (i != j && !G.element(a)(i, j).is_zero())
          throw PreconditionError("abelian formula needs a diagonal action in standard coordinates");
}

CycNum char_value(const Group& G, int a, const std::vector<long>& exps) {
  CycNum v(1);
  for (size_t i = 0; i < exps.size(); ++i)
    if (exps[i]) v *= G.element(a)(static_cast<int>(i), static_cast<int>(i)).pow(exps[i]);
  return v;
}

}  // namespace

CycNum character_mean(const Group& G, const std::vector<long>& exps) {
  CycNum s(0);
  for (int a = 0; a < G.order(); ++a) s += char_value(G, a, exps);
  return s / CycNum(G.order());
}

Cochain abelian_bracket(const Group& G, const Cochain& alpha, const Cochain& beta) {
  require_diagonal(G);
  const int n = G.dim();
  const int p = alpha.degree(), q = beta.degree();
  Cochain out(std::max(p + q - 1, 0), n);
  Cochain a = to_standard(alpha), b = to_standard(beta);
  BasisRef std_basis = standard_basis(n);
  // Monomial term weights: a.(f g (x) dx_J) = chi^c(a) chi_J(a)^-1 (same tag), so the
  // double group average factors into two character means.
  auto weight = [&](const Mono& mono, Wedge w) {
    std::vector<long> e(n);
    for (int i = 0; i < n; ++i) e[i] = static_cast<long>(mono[i]) - static_cast<long>((w >> i) & 1u);
    return character_mean(G, e);
  };
  for (const auto& [g, fa] : a.terms())
    for (const auto& [J, pa] : fa.comps)
      for (const auto& [ma, ca] : pa.terms()) {
        CycNum wa = weight(ma, J);
        if (wa.is_zero()) continue;
        GForm x{std_basis, {}};
        Poly px(std_basis);
        px.add_term(ma, ca);
        x.add(J, px);
        for (const auto& [h, fb] : b.terms())
          for (const auto& [L, pb] : fb.comps)
            for (const auto& [mb, cb] : pb.terms()) {
              CycNum wb = weight(mb, L);
              if (wb.is_zero()) continue;
              GForm y{std_basis, {}};
              Poly py(std_basis);
              py.add_term(mb, cb);
              y.add(L, py);
              out += commuting_prebracket(G, g, x, p, h, y, q).scaled(wa * wb);
            }
      }
  return proj_H(G, out);
}

CycNum abelian_overlap_kappa(const Group& G, int g, int h, const std::vector<long>& c,
                             const std::vector<long>& d) {
  require_diagonal(G);
  const int n = G.dim();
  if (n < 3 || static_cast<int>(c.size()) != n || static_cast<int>(d.size()) != n)
    throw PreconditionError("overlap kappa needs exponent vectors of length dim >= 3");
  auto chi = [&](int i, int x) { return G.element(x)(i, i); };
  std::vector<long> e1(c), e2(d);
  e1[0] -= 1;
  e1[1] -= 1;
  e2[1] -= 1;
  e2[2] -= 1;
  CycNum ip = character_mean(G, e1) * character_mean(G, e2);
  if (ip.is_zero()) return ip;
  auto qint = [](long k, const CycNum& eps) { return quantum_integer(k, eps); };
  CycNum left = qint(c[1], chi(1, h)) * chi(0, h).pow(c[0]);
  CycNum right = qint(d[1], chi(1, g)) * chi(0, g).pow(d[0]);
  return ip * (left - right);
}

}  // namespace hb
