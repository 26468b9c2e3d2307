// Coordinate bases of V. Every polynomial and form carries one of these so that
// mixing coordinates is always an explicit conversion.

#ifndef HOCHBRACKET_BASIS_HPP_
#define HOCHBRACKET_BASIS_HPP_

#include <memory>
#include <string>

#include "hochbracket/matrix.hpp"

namespace hb {

struct Basis {
  std::string label;
  Matrix to_standard;    // columns are the basis vectors in standard coordinates
  Matrix from_standard;  // inverse of to_standard
  int dim() const { return to_standard.rows(); }
};

using BasisRef = std::shared_ptr<const Basis>;

BasisRef standard_basis(int n);
BasisRef make_basis(std::string label, Matrix to_standard);
bool same_basis(const BasisRef& a, const BasisRef& b);

// Column i expresses the i-th vector of `to` in coordinates of `from`.
Matrix change_of_basis(const Basis& from, const Basis& to);

}  // namespace hb

#endif  // HOCHBRACKET_BASIS_HPP_
