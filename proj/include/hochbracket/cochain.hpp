// Koszul cochains C^p = sum_g S(V) g (x) Lambda^p V*, the representative space H,
// projections, Reynolds averaging and the dual Koszul differential.

#ifndef HOCHBRACKET_COCHAIN_HPP_
#define HOCHBRACKET_COCHAIN_HPP_

#include <map>
#include <tuple>
#include <vector>

#include "hochbracket/group.hpp"
#include "hochbracket/poly.hpp"

namespace hb {

// Wedges are bitmasks over basis indices; bit i stands for b_i^*.
using Wedge = unsigned;
std::vector<int> wedge_indices(Wedge w);
Wedge wedge_from_indices(const std::vector<int>& idx);
// Sign that sorts the index list, 0 when an index repeats.
int wedge_sort_sign(const std::vector<int>& idx);

// One group component: polynomial-coefficient forms, all in `basis` coordinates.
struct GForm {
  BasisRef basis;
  std::map<Wedge, Poly> comps;

  bool is_zero() const { return comps.empty(); }
  void add(Wedge w, const Poly& f);
};

GForm convert_form(const GForm& form, const BasisRef& to);

class Cochain {
 public:
  Cochain(int degree, int dim) : degree_(degree), dim_(dim) {}

  int degree() const { return degree_; }
  int dim() const { return dim_; }
  const std::map<int, GForm>& terms() const { return terms_; }
  bool is_zero() const;
  std::vector<int> support() const;

  // f must be written in some basis; a later term on the same tag in another
  // basis is converted into the basis already present.
  void add(int tag, Wedge w, const Poly& f);
  void add_form(int tag, const GForm& form);
  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain scaled(const CycNum& c) const;
  void set_form(int tag, GForm form) { terms_[tag] = std::move(form); }

 private:
  int degree_;
  int dim_;
  std::map<int, GForm> terms_;
};

// Every tag rewritten in the canonical eigenbasis of that tag, zeros dropped.
Cochain canonical(const Group& G, const Cochain& a);
bool cochain_equal(const Group& G, const Cochain& a, const Cochain& b);
// Forms rewritten in standard coordinates (for display and serialization).
Cochain to_standard(const Cochain& a);

Cochain act_on_cochain(const Group& G, int a, const Cochain& alpha);
Cochain reynolds(const Group& G, const Cochain& alpha);
Cochain reynolds_over(const Group& G, const std::vector<int>& subgroup, const Cochain& alpha);
bool is_invariant(const Group& G, const Cochain& alpha);

Cochain proj_Vg(const Group& G, const Cochain& alpha);
Cochain proj_H(const Group& G, const Cochain& alpha);
bool in_H(const Group& G, const Cochain& alpha);
Cochain koszul_dual_diff(const Group& G, const Cochain& alpha);

// Monomial generators of H^p_g in canonical B_g coordinates, polynomial degree
// <= d (or exactly d).
std::vector<Cochain> h_space_basis(const Group& G, int g, int p, int d, bool exact_degree = false);
// Basis of (H^p)^G up to polynomial degree d.
std::vector<Cochain> invariant_basis(const Group& G, int p, int d, bool exact_degree = false);

// Independent cochains spanning the same space, in reduced echelon form.
std::vector<Cochain> echelon_basis(const Group& G, const std::vector<Cochain>& v);
// Whether x lies in the span of v.
bool in_span(const Group& G, const std::vector<Cochain>& v, const Cochain& x);

// alpha(v_1 ^ ... ^ v_p) per tag, vectors in standard coordinates; result polys
// in standard coordinates.
std::map<int, Poly> evaluate_form(const Cochain& alpha, const std::vector<std::vector<CycNum>>& vs);

// Sums forms lazily, converting each distinct basis only once.
class FormAccumulator {
 public:
  FormAccumulator(int degree, int dim) : degree_(degree), dim_(dim) {}
  void add(int tag, GForm form);
  void add(const Cochain& c);
  void merge(FormAccumulator&& o);
  Cochain result(const Group& G) const;  // canonical

 private:
  int degree_;
  int dim_;
  std::map<int, std::vector<GForm>> pending_;
};

}  // namespace hb

#endif  // HOCHBRACKET_COCHAIN_HPP_
