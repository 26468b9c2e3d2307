// Prebrackets on tagged vector forms and the Gerstenhaber bracket on H.

#ifndef HOCHBRACKET_BRACKET_HPP_
#define HOCHBRACKET_BRACKET_HPP_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hochbracket/cochain.hpp"

namespace hb {

// Untagged tau: prod_k twisted_partial(args_k, j_k) * f_g, summed over the
// components of `form`. Arguments may be in any basis.
Poly upsilon(const GForm& form, const EigenData& ed, const std::vector<Poly>& args);

// One (I, pi) contribution of circ_direct, summed over k; value in B1 coordinates.
struct CircTrace {
  Wedge I;
  std::vector<int> perm;
  Poly value;
};

// alpha o beta straight from the multi-index definition, evaluated on the standard
// basis. alpha is a g-form (g = ed1.owner) read in ed1, beta an h-form read in ed2.
// Result: degree p+q-1 cochain on gh in standard coordinates.
Cochain circ_direct(const Group& G, const GForm& alpha, int p, const EigenData& ed1,
                    const GForm& beta, int q, const EigenData& ed2,
                    std::vector<CircTrace>* trace = nullptr);

// Same composition by the determinant formula; beta must lie in H_h for ed2.
// Result is written in ed2 coordinates.
Cochain circ_det(const Group& G, const GForm& alpha, int p, const EigenData& ed1,
                 const GForm& beta, int q, const EigenData& ed2);

enum class CircMethod { det, direct };

Cochain prebracket(const Group& G, const GForm& alpha, int p, const EigenData& ed1,
                   const GForm& beta, int q, const EigenData& ed2,
                   CircMethod method = CircMethod::det);

// Eigenbasis per tag; tags without an entry use the canonical B_g.
struct BasisChoice {
  std::map<int, EdRef> custom;
  EdRef get(const Group& G, int tag) const;
};

enum class BracketStrategy { full, equivariant };

struct BracketOptions {
  BasisChoice bases;
  CircMethod method = CircMethod::det;
  BracketStrategy strategy = BracketStrategy::full;
  int jobs = 1;
  std::function<void(const std::string&)> log;  // per-pair intermediates
};

// (1/|G|^2) proj_H sum_{a,b} [[a.alpha, b.beta]]; inputs must lie in H.
Cochain gerstenhaber_bracket(const Group& G, const Cochain& alpha, const Cochain& beta,
                             const BracketOptions& opts = {});

struct PoissonReport {
  bool averaged = false;  // input was not invariant and was replaced by its average
  Cochain square{3, 0};
  bool poisson = false;
};
PoissonReport poisson_check(const Group& G, const Cochain& alpha, const BracketOptions& opts = {});

// Classical formula with ordinary partials; every tag must act trivially.
Cochain sn_bracket(const Group& G, const Cochain& alpha, const Cochain& beta);

// Prebracket of two forms written in one common eigenbasis of commuting g, h.
Cochain commuting_prebracket(const Group& G, int g, const GForm& alpha, int p, int h,
                             const GForm& beta, int q);

enum class AbelianCase { same_wedge, overlapping, disjoint, other };
AbelianCase abelian_case(Wedge j, Wedge l);

// <chi, 1> for the character a -> prod_i chi_i(a)^{e_i} of a diagonal group.
CycNum character_mean(const Group& G, const std::vector<long>& exps);

// Bracket of monomial terms for a diagonal abelian group through character
// inner products; no group double sum.
Cochain abelian_bracket(const Group& G, const Cochain& alpha, const Cochain& beta);

// kappa of the overlapping-wedge formula for alpha on dx1^dx2, beta on dx2^dx3.
CycNum abelian_overlap_kappa(const Group& G, int g, int h, const std::vector<long>& c,
                             const std::vector<long>& d);

}  // namespace hb

#endif  // HOCHBRACKET_BRACKET_HPP_
