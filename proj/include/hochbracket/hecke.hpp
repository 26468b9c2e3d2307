// Graded Hecke algebra parameters: constant invariant 2-cocycles, PBW relations, mu_1.

#ifndef HOCHBRACKET_HECKE_HPP_
#define HOCHBRACKET_HECKE_HPP_

#include <string>
#include <vector>

#include "hochbracket/conversion.hpp"

namespace hb {

// Basis of constant (H^2)^G.
std::vector<Cochain> constant_cocycle_space(const Group& G);

enum class HeckeSummand { kernel, bireflection, none };
std::string summand_name(HeckeSummand s);

struct HeckeClass {
  int representative;
  int class_size;
  int codim;
  HeckeSummand summand;
  int dimension;
  std::string reason;
};

struct HeckeReport {
  std::vector<HeckeClass> classes;
  int total = 0;
};

// Dimension count class by class from the determinant and trace conditions,
// without building any cochain.
HeckeReport hecke_parameter_space(const Group& G);

struct PbwRelation {
  int i, j;  // 0-based, i < j
  std::vector<std::pair<int, CycNum>> rhs;  // element index -> coefficient
};

std::vector<PbwRelation> pbw_relations(const Group& G, const Cochain& alpha);
std::string relation_string(const Group& G, const PbwRelation& r);

struct Mu1Result {
  AlgElem value;
  int degree_shift = 0;  // polynomial degree change on homogeneous inputs
  bool constant = false;
};

Mu1Result mu1(const Group& G, const Cochain& alpha, const std::pair<Poly, int>& left,
              const std::pair<Poly, int>& right);

}  // namespace hb

#endif  // HOCHBRACKET_HECKE_HPP_
