#include "hochbracket/hecke.hpp"

#include "hochbracket/errors.hpp"

namespace hb {

std::vector<Cochain> constant_cocycle_space(const Group& G) { return invariant_basis(G, 2, 0); }

std::string summand_name(HeckeSummand s) {
  switch (s) {
    case HeckeSummand::kernel: return "kernel";
    case HeckeSummand::bireflection: return "bireflection";
    default: return "none";
  }
}

namespace {

CycNum trace(const Matrix& m) {
  CycNum t(0);
  for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace

HeckeReport hecke_parameter_space(const Group& G) {
  HeckeReport report;
  const auto& cls = G.classes();
  for (size_t c = 0; c < cls.representatives.size(); ++c) {
    int g = cls.representatives[c];
    const EigenData& ed = *G.eigen(g);
    HeckeClass hc{g, static_cast<int>(cls.members[c].size()), ed.perp_count, HeckeSummand::none, 0, ""};
    const auto& z = G.centralizer(g);
    if (ed.perp_count == 0) {
      // dim (Lambda^2 V^*)^{Z(g)} by the character of Lambda^2 V^*.
      CycNum s(0);
      for (int x : z) {
        CycNum t1 = trace(G.element(G.inv(x)));
        CycNum t2 = trace(G.element(G.inv(G.mul(x, x))));
        s += (t1 * t1 - t2) / CycNum(2);
      }
      s = s / CycNum(static_cast<long>(z.size()));
      if (!s.is_rational()) throw GroupError("invariant dimension is not rational");
      hc.summand = HeckeSummand::kernel;
      hc.dimension = static_cast<int>(s.rational_value().get_num().get_si());
      hc.reason = "acts trivially";
    } else if (ed.perp_count == 2) {
      std::vector<int> perp;
      for (int i = 0; i < ed.dim(); ++i)
        if (!ed.is_fixed(i)) perp.push_back(i);
      bool ok = true;
      for (int x : z) {
        Matrix a = ed.from_standard() * G.element(x) * ed.to_standard();
        if (!submatrix_det(a, perp, perp).is_one()) {
          ok = false;
          hc.reason = "det on (V^g)^perp is not 1 for " + G.word(x);
          break;
        }
      }
      if (ok) {
        hc.summand = HeckeSummand::bireflection;
        hc.dimension = 1;
        hc.reason = "bireflection";
      }
    } else {
      hc.reason = "codim " + std::to_string(ed.perp_count);
    }
    report.total += hc.dimension;
    report.classes.push_back(std::move(hc));
  }
  return report;
}

std::vector<PbwRelation> pbw_relations(const Group& G, const Cochain& alpha) {
  if (alpha.degree() != 2) throw PreconditionError("PBW relations need a degree-2 cochain");
  for (const auto& [tag, form] : alpha.terms())
    for (const auto& [w, f] : form.comps)
      if (!f.is_constant()) throw PreconditionError("PBW relations need a constant cocycle");
  const int n = G.dim();
  std::vector<PbwRelation> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<CycNum> ei(n, CycNum(0)), ej(n, CycNum(0));
      ei[i] = 1;
      ej[j] = 1;
      PbwRelation r{i, j, {}};
      for (const auto& [tag, f] : evaluate_form(alpha, {ei, ej}))
        r.rhs.emplace_back(tag, f.coefficient(Mono{}));
      out.push_back(std::move(r));
    }
  return out;
}

std::string relation_string(const Group& G, const PbwRelation& r) {
  std::string lhs = "x" + std::to_string(r.i + 1) + "*x" + std::to_string(r.j + 1) + " - x" +
                    std::to_string(r.j + 1) + "*x" + std::to_string(r.i + 1) + " = ";
  if (r.rhs.empty()) return lhs + "0";
  std::string rhs;
  for (const auto& [tag, c] : r.rhs) {
    std::string coeff = format_scalar(c, G.conductor());
    std::string term = c.is_monomial() ? coeff : "(" + coeff + ")";
    if (!rhs.empty()) rhs += " + ";
    rhs += term + "*[" + G.word(tag) + "]";
  }
  return lhs + rhs;
}

Mu1Result mu1(const Group& G, const Cochain& alpha, const std::pair<Poly, int>& left,
              const std::pair<Poly, int>& right) {
  if (alpha.degree() != 2) throw PreconditionError("mu1 needs a degree-2 cocycle");
  if (!is_invariant(G, alpha)) throw PreconditionError("mu1 needs a G-invariant cocycle; average it first");
  Mu1Result r;
  r.value = gamma(G, alpha)({left, right});
  int deg = 0;
  Cochain std_alpha = to_standard(alpha);
  for (const auto& [tag, form] : std_alpha.terms())
    for (const auto& [w, f] : form.comps) deg = std::max(deg, f.degree());
  r.degree_shift = deg - 2;
  r.constant = deg == 0;
  return r;
}

}  // namespace hb
