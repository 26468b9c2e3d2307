#include "hochbracket/basis.hpp"

#include <map>
#include <mutex>

#include "hochbracket/errors.hpp"

namespace hb {

BasisRef standard_basis(int n) {
  static std::mutex mu;
  static std::map<int, BasisRef> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto b = std::make_shared<Basis>();
  b->label = "standard";
  b->to_standard = Matrix::identity(n);
  b->from_standard = Matrix::identity(n);
  cache[n] = b;
  return b;
}

BasisRef make_basis(std::string label, Matrix to_standard) {
  auto b = std::make_shared<Basis>();
  b->label = std::move(label);
  b->from_standard = to_standard.inverse();
  b->to_standard = std::move(to_standard);
  return b;
}

bool same_basis(const BasisRef& a, const BasisRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->to_standard == b->to_standard;
}

Matrix change_of_basis(const Basis& from, const Basis& to) {
  if (from.dim() != to.dim()) throw PreconditionError("change_of_basis: dimension mismatch");
  return from.from_standard * to.to_standard;
}

}  // namespace hb
