#include "hochbracket/matrix.hpp"

#include <utility>

#include "hochbracket/errors.hpp"

namespace hb {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = CycNum(1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<CycNum>>& cols, int n) {
  Matrix m(n, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols_; ++j)
    for (int i = 0; i < n; ++i) m(i, j) = cols[j][i];
  return m;
}

std::vector<CycNum> Matrix::column(int j) const {
  std::vector<CycNum> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("matrix dimension mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const CycNum& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const CycNum& y = o(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
  return r;
}

Matrix Matrix::scaled(const CycNum& c) const {
  Matrix r = *this;
  for (auto& x : r.a_) x = x * c;
  return r;
}

std::vector<CycNum> Matrix::apply(const std::vector<CycNum>& v) const {
  std::vector<CycNum> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t k = 0; k < a_.size(); ++k)
    if (a_[k] != o.a_[k]) return false;
  return true;
}

bool Matrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

Matrix Matrix::rref(std::vector<int>* pivots) const {
  Matrix m = *this;
  if (pivots) pivots->clear();
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int piv = row;
    while (piv < rows_ && m(piv, col).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != row)
      for (int j = 0; j < cols_; ++j) std::swap(m(piv, j), m(row, j));
    CycNum inv = m(row, col).inverse();
    for (int j = col; j < cols_; ++j)
      if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      CycNum f = m(r, col);
      for (int j = col; j < cols_; ++j)
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return m;
}

int Matrix::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return static_cast<int>(piv.size());
}

std::vector<std::vector<CycNum>> Matrix::kernel() const {
  std::vector<int> piv;
  Matrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (int p : piv) is_pivot[p] = true;
  std::vector<std::vector<CycNum>> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<CycNum> v(cols_);
    v[f] = CycNum(1);
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(static_cast<int>(k), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<CycNum>> Matrix::column_space() const {
  std::vector<int> piv;
  rref(&piv);
  std::vector<std::vector<CycNum>> basis;
  for (int p : piv) basis.push_back(column(p));
  return basis;
}

CycNum Matrix::det() const {
  if (rows_ != cols_) throw PreconditionError("determinant of a non-square matrix");
  Matrix m = *this;
  CycNum d(1);
  const int n = rows_;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return CycNum(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      d = -d;
    }
    d = d * m(col, col);
    CycNum inv = m(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      CycNum f = m(r, col) * inv;
      for (int j = col; j < n; ++j)
        if (!m(col, j).is_zero()) m(r, j) -= f * m(col, j);
    }
  }
  return d;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw PreconditionError("inverse of a non-square matrix");
  const int n = rows_;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = CycNum(1);
  }
  std::vector<int> piv;
  Matrix r = aug.rref(&piv);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1)
    throw PreconditionError("matrix is singular");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

Matrix Matrix::promoted(int conductor) const {
  Matrix r = *this;
  for (auto& x : r.a_) x = x.promoted(conductor);
  return r;
}

std::string Matrix::key() const {
  std::string k;
  for (const auto& x : a_) {
    if (x.is_rational()) {
      k += x.coeffs()[0].get_str();
    } else {
      for (const auto& c : x.coeffs()) {
        k += c.get_str();
        k += ',';
      }
    }
    k += ';';
  }
  return k;
}

CycNum submatrix_det(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw PreconditionError("submatrix_det: index lists differ in length");
  const int k = static_cast<int>(rows.size());
  if (k == 0) return CycNum(1);
  Matrix s(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (rows[i] < 0 || rows[i] >= m.rows() || cols[j] < 0 || cols[j] >= m.cols())
        throw PreconditionError("submatrix_det: index out of range");
      s(i, j) = m(rows[i], cols[j]);
    }
  return s.det();
}

}  // namespace hb
