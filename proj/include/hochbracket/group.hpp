// Finite matrix groups: closure, conjugacy data, and per-element eigen-data.

#ifndef HOCHBRACKET_GROUP_HPP_
#define HOCHBRACKET_GROUP_HPP_

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hochbracket/basis.hpp"
#include "hochbracket/matrix.hpp"

namespace hb {

// An ordered eigenbasis B_g of one group element g, with g = s_1 ... s_n where
// s_i scales the i-th basis vector by eps_i. The perp set {i : eps_i != 1}
// spans Im(1 - g); canonical eigen-data lists it first, custom bases need not.
struct EigenData {
  int owner = 0;
  BasisRef basis;
  std::vector<CycNum> eigenvalues;
  std::vector<int> exponents;  // eps_i = zeta_conductor^exponents[i], conductor below
  int conductor = 1;
  unsigned perp_mask = 0;
  int perp_count = 0;

  int dim() const { return static_cast<int>(eigenvalues.size()); }
  const Matrix& to_standard() const { return basis->to_standard; }
  const Matrix& from_standard() const { return basis->from_standard; }
  bool is_fixed(int i) const { return !(perp_mask >> i & 1u); }
};

using EdRef = std::shared_ptr<const EigenData>;

struct ClassData {
  std::vector<int> representatives;         // least index of each class
  std::vector<std::vector<int>> members;    // parallel to representatives
  std::vector<int> class_of;                // element -> position in representatives
  std::vector<int> kernel;                  // elements acting as the identity
};

class Group {
 public:
  static constexpr size_t kDefaultCap = 10000;

  // Throws GroupError for singular generators or when closure exceeds cap.
  // `labels` (one matrix per generator, optional) is a faithful representation
  // used only to tell elements apart, so the action on V need not be faithful.
  Group(std::vector<Matrix> generators, int conductor, std::vector<std::string> names = {},
        size_t cap = kDefaultCap, std::vector<Matrix> labels = {});

  int dim() const { return dim_; }
  int conductor() const { return conductor_; }  // session conductor N*
  int order() const { return static_cast<int>(elements_.size()); }
  int exponent() const { return exponent_; }
  static constexpr int identity() { return 0; }

  const Matrix& element(int i) const { return elements_[i]; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order() + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int a, int g) const { return mul(mul(a, g), inv(a)); }  // a g a^-1
  int element_order(int a) const { return orders_[a]; }
  const std::vector<int>& generators() const { return gen_index_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  // First element acting by m.
  std::optional<int> find(const Matrix& m) const;

  const ClassData& classes() const { return classes_; }
  const std::vector<int>& centralizer(int g) const { return centralizers_[g]; }
  bool in_kernel(int g) const { return elements_[g].is_identity(); }
  bool is_abelian() const;
  // Representatives c of G / Z(g) with c g c^-1 running over the class of g once each.
  std::vector<int> coset_reps(int g) const;

  const EdRef& eigen(int g) const { return eigen_[g]; }
  // Basis a.B, owner a g a^-1, same eigenvalues.
  EdRef conjugated(const EdRef& ed, int a) const;
  // Conjugate of the canonical eigen-data of g; memoized for small groups.
  EdRef conjugated_canonical(int a, int g) const;
  // Eigen-data for a caller-chosen eigenbasis (columns of `vectors`, any order).
  EdRef custom_eigen(int g, const Matrix& vectors, std::string label = "custom") const;

  std::vector<std::vector<CycNum>> fixed_space(int g) const;
  std::vector<std::vector<CycNum>> perp_space(int g) const;

  // Shortest generator word, e.g. "g*h^2"; the identity is "1".
  std::string word(int g) const { return words_[g]; }
  // Parses a word or a decimal element index.
  int parse_element(const std::string& word) const;

 private:
  EdRef compute_eigen(int g) const;

  int dim_ = 0;
  int conductor_ = 1;
  int roots_ = 1;  // eigenvalues are powers of zeta_roots_; differs from conductor_ only at 2
  int exponent_ = 1;
  std::vector<Matrix> elements_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> orders_;
  std::vector<int> gen_index_;
  std::vector<std::string> names_;
  std::vector<std::string> words_;
  ClassData classes_;
  std::vector<std::vector<int>> centralizers_;
  std::vector<EdRef> eigen_;
  std::vector<EdRef> conj_eigen_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace hb

#endif  // HOCHBRACKET_GROUP_HPP_
