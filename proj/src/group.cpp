#include "hochbracket/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

#include "hochbracket/errors.hpp"

namespace hb {

namespace {

constexpr int kMaxDim = 8;
constexpr int kEagerConjugates = 64;  // memoize a.B_g tables up to this order

std::string format_word(const std::vector<int>& letters, const std::vector<std::string>& names) {
  if (letters.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < letters.size()) {
    size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!out.empty()) out += "*";
    out += names[letters[i]];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

namespace {

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

Matrix top_left(const Matrix& m, int n) {
  Matrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = m(i, j);
  return r;
}

}  // namespace

Group::Group(std::vector<Matrix> generators, int conductor, std::vector<std::string> names,
             size_t cap, std::vector<Matrix> labels) {
  if (conductor < 1) throw GroupError("conductor must be a positive integer");
  if (generators.empty()) throw GroupError("at least one generator is required");
  dim_ = generators[0].rows();
  if (dim_ < 1 || dim_ > kMaxDim) throw GroupError("dimension must be between 1 and 8");
  for (size_t k = 0; k < generators.size(); ++k) {
    if (generators[k].rows() != dim_ || generators[k].cols() != dim_)
      throw GroupError("generator " + std::to_string(k + 1) + " is not " + std::to_string(dim_) +
                       "x" + std::to_string(dim_));
    generators[k] = generators[k].promoted(conductor);
    if (generators[k].det().is_zero())
      throw GroupError("generator " + std::to_string(k + 1) + " is not invertible");
  }
  if (!labels.empty()) {
    if (labels.size() != generators.size()) throw GroupError("labels must match generators");
    for (size_t k = 0; k < labels.size(); ++k) {
      if (labels[k].rows() != labels[0].rows() || labels[k].cols() != labels[0].rows())
        throw GroupError("label matrices must be square of one size");
      labels[k] = labels[k].promoted(conductor);
      if (labels[k].det().is_zero()) throw GroupError("label " + std::to_string(k + 1) + " is not invertible");
      generators[k] = block_diag(generators[k], labels[k]);
    }
  }
  if (names.empty()) {
    for (size_t k = 0; k < generators.size(); ++k) names.push_back("g" + std::to_string(k + 1));
  }
  if (names.size() != generators.size()) throw GroupError("names must match generators");
  names_ = names;

  // Breadth-first closure from the identity; right multiplication by generators.
  const int full_dim = generators[0].rows();
  std::vector<std::vector<int>> letters;
  elements_.push_back(Matrix::identity(full_dim).promoted(conductor));
  letters.emplace_back();
  index_[elements_[0].key()] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (size_t k = 0; k < generators.size(); ++k) {
      Matrix y = elements_[x] * generators[k];
      std::string key = y.key();
      if (index_.count(key)) continue;
      if (elements_.size() >= cap) throw GroupError("group too large or infinite");
      index_[key] = static_cast<int>(elements_.size());
      elements_.push_back(std::move(y));
      std::vector<int> w = letters[x];
      w.push_back(static_cast<int>(k));
      letters.push_back(std::move(w));
      queue.push_back(static_cast<int>(elements_.size()) - 1);
    }
  }
  for (const auto& g : generators) gen_index_.push_back(index_.at(g.key()));
  for (const auto& w : letters) words_.push_back(format_word(w, names_));

  const int n = order();
  mul_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index_.find((elements_[a] * elements_[b]).key());
      if (it == index_.end()) throw GroupError("closure is not closed under multiplication");
      mul_[static_cast<size_t>(a) * n + b] = it->second;
    }
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0) inv_[a] = b;
  orders_.assign(n, 1);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    orders_[a] = k;
    if (a == 0) orders_[a] = 1;
    exponent_ = static_cast<int>(lcm_int(exponent_, orders_[a]));
  }

  roots_ = static_cast<int>(lcm_int(conductor, exponent_));
  conductor_ = roots_ == 2 ? 1 : roots_;
  index_.clear();
  for (int a = 0; a < n; ++a) {
    elements_[a] = top_left(elements_[a], dim_).promoted(conductor_);
    index_.emplace(elements_[a].key(), a);
  }

  // Conjugacy classes in index order, so each representative is the least member.
  classes_.class_of.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    if (classes_.class_of[g] >= 0) continue;
    std::vector<int> members;
    for (int a = 0; a < n; ++a) members.push_back(conj(a, g));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    int pos = static_cast<int>(classes_.representatives.size());
    for (int m : members) classes_.class_of[m] = pos;
    classes_.representatives.push_back(g);
    classes_.members.push_back(std::move(members));
  }
  for (int g = 0; g < n; ++g)
    if (elements_[g].is_identity()) classes_.kernel.push_back(g);

  centralizers_.resize(n);
  for (int g = 0; g < n; ++g)
    for (int a = 0; a < n; ++a)
      if (mul(a, g) == mul(g, a)) centralizers_[g].push_back(a);

  eigen_.resize(n);
  for (int g = 0; g < n; ++g) eigen_[g] = compute_eigen(g);
  if (n <= kEagerConjugates) {
    conj_eigen_.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int g = 0; g < n; ++g)
        conj_eigen_[static_cast<size_t>(a) * n + g] = a == 0 ? eigen_[g] : conjugated(eigen_[g], a);
  }
}

std::optional<int> Group::find(const Matrix& m) const {
  auto it = index_.find(m.promoted(conductor_).key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Group::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> Group::coset_reps(int g) const {
  std::vector<int> reps;
  std::vector<bool> seen(order(), false);
  for (int a = 0; a < order(); ++a) {
    int x = conj(a, g);
    if (seen[x]) continue;
    seen[x] = true;
    reps.push_back(a);
  }
  return reps;
}

EdRef Group::compute_eigen(int g) const {
  const Matrix& m = elements_[g];
  auto ed = std::make_shared<EigenData>();
  ed->owner = g;
  ed->conductor = roots_;
  std::vector<std::vector<CycNum>> vectors;
  for (int step = 1; step <= roots_; ++step) {
    int k = step % roots_;  // k = 0 (eigenvalue 1) comes last
    CycNum eps = CycNum::root_of_unity(k, roots_);
    Matrix a = m - Matrix::identity(dim_).scaled(eps);
    for (auto& v : a.kernel()) {
      vectors.push_back(std::move(v));
      if (k != 0) ed->perp_mask |= 1u << ed->eigenvalues.size();
      ed->eigenvalues.push_back(eps.promoted(conductor_));
      ed->exponents.push_back(k);
    }
  }
  if (static_cast<int>(vectors.size()) != dim_)
    throw GroupError("element " + words_[g] + " is not diagonalizable over the session field");
  ed->perp_count = __builtin_popcount(ed->perp_mask);
  ed->basis = make_basis("B[" + words_[g] + "]", Matrix::from_columns(vectors, dim_));
  return ed;
}

EdRef Group::conjugated(const EdRef& ed, int a) const {
  auto c = std::make_shared<EigenData>(*ed);
  c->owner = conj(a, ed->owner);
  auto b = std::make_shared<Basis>();
  b->label = words_[a] + "." + ed->basis->label;
  b->to_standard = elements_[a] * ed->to_standard();
  b->from_standard = ed->from_standard() * elements_[inv(a)];
  c->basis = b;
  return c;
}

EdRef Group::conjugated_canonical(int a, int g) const {
  if (!conj_eigen_.empty()) return conj_eigen_[static_cast<size_t>(a) * order() + g];
  return a == 0 ? eigen_[g] : conjugated(eigen_[g], a);
}

EdRef Group::custom_eigen(int g, const Matrix& vectors, std::string label) const {
  if (vectors.rows() != dim_ || vectors.cols() != dim_)
    throw PreconditionError("custom eigenbasis has the wrong shape");
  Matrix v = vectors.promoted(conductor_);
  if (v.det().is_zero()) throw PreconditionError("custom eigenbasis is singular");
  auto ed = std::make_shared<EigenData>();
  ed->owner = g;
  ed->conductor = roots_;
  for (int j = 0; j < dim_; ++j) {
    std::vector<CycNum> col = v.column(j);
    std::vector<CycNum> img = elements_[g].apply(col);
    int i = 0;
    while (col[i].is_zero()) ++i;
    CycNum eps = img[i] / col[i];
    for (int r = 0; r < dim_; ++r)
      if (img[r] != eps * col[r])
        throw PreconditionError("custom basis vector " + std::to_string(j + 1) +
                                " is not an eigenvector of " + words_[g]);
    if (!eps.is_one()) ed->perp_mask |= 1u << j;
    int k = 0;
    while (k < roots_ && CycNum::root_of_unity(k, roots_) != eps) ++k;
    if (k == roots_) throw PreconditionError("eigenvalue is not a root of unity of the session field");
    ed->eigenvalues.push_back(eps.promoted(conductor_));
    ed->exponents.push_back(k);
  }
  ed->perp_count = __builtin_popcount(ed->perp_mask);
  ed->basis = make_basis(std::move(label), v);
  return ed;
}

std::vector<std::vector<CycNum>> Group::fixed_space(int g) const {
  return (elements_[g] - Matrix::identity(dim_)).kernel();
}

std::vector<std::vector<CycNum>> Group::perp_space(int g) const {
  return (Matrix::identity(dim_) - elements_[g]).column_space();
}

int Group::parse_element(const std::string& text) const {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty group element reference");
  if (std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
      s != "1") {
    long idx = std::stol(s);
    if (idx < 0 || idx >= order()) throw GroupError("element index " + s + " is not in the group");
    return static_cast<int>(idx);
  }
  int result = 0;
  std::stringstream ss(s);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    factor = trim(factor);
    if (factor == "1" || factor == "e") continue;
    std::string name = factor;
    long power = 1;
    auto caret = factor.find('^');
    if (caret != std::string::npos) {
      name = trim(factor.substr(0, caret));
      try {
        power = std::stol(trim(factor.substr(caret + 1)));
      } catch (const std::exception&) {
        throw ParseError("bad exponent in group word '" + text + "'");
      }
    }
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw GroupError("unknown generator '" + name + "' in '" + text + "'");
    int gen = gen_index_[it - names_.begin()];
    if (power < 0) {
      gen = inv(gen);
      power = -power;
    }
    for (long k = 0; k < power; ++k) result = mul(result, gen);
  }
  return result;
}

}  // namespace hb
