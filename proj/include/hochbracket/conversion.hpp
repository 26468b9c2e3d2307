// Conversions between tagged vector forms and multilinear maps on S(V) or A = S(V)#G.

#ifndef HOCHBRACKET_CONVERSION_HPP_
#define HOCHBRACKET_CONVERSION_HPP_

#include <functional>
#include <map>
#include <vector>

#include "hochbracket/bracket.hpp"

namespace hb {

// A formal sum of f g-bar; polynomials in standard coordinates, keyed by element.
using AlgElem = std::map<int, Poly>;

void add_to(AlgElem& x, int tag, const Poly& f);
AlgElem scaled(const AlgElem& x, const CycNum& c);
AlgElem subtract(const AlgElem& x, const AlgElem& y);

// Multilinear map S(V)^{(x) p} -> A.
using Evaluator = std::function<AlgElem(const std::vector<Poly>&)>;

// tau(alpha) with the given eigenbases.
Evaluator tau_evaluator(const Group& G, const Cochain& alpha, const BasisChoice& bases = {});

// Antisymmetrization over standard basis wedges.
Cochain phi_star(const Group& G, const Evaluator& f, int p);

// Gamma(alpha): the averaged tau image as a map on p-tensors of algebra elements.
class BarMultiplier {
 public:
  BarMultiplier(const Group& G, Cochain alpha);
  int degree() const { return alpha_.degree(); }
  // args: (f_k, g_k) pairs.
  AlgElem operator()(const std::vector<std::pair<Poly, int>>& args) const;
  // Restriction to S(V)^{(x) p} (all tags the identity).
  Evaluator restricted() const;

 private:
  const Group* group_;
  Cochain alpha_;
};

BarMultiplier gamma(const Group& G, const Cochain& alpha);
// proj_H o phi_star o restriction; p <= 3.
Cochain gamma_prime(const Group& G, const BarMultiplier& m);

// For alpha in H^2_g with g a bireflection: whether w - g.w divides
// Upsilon(alpha)(w^m (x) w) - Upsilon(alpha)(w (x) w^m).
bool divisibility_check(const Group& G, const Cochain& alpha, const std::vector<CycNum>& w, int m);

}  // namespace hb

#endif  // HOCHBRACKET_CONVERSION_HPP_
