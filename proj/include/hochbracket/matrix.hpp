// Dense matrices over CycNum with exact Gaussian elimination.

#ifndef HOCHBRACKET_MATRIX_HPP_
#define HOCHBRACKET_MATRIX_HPP_

#include <string>
#include <vector>

#include "hochbracket/cyclotomic.hpp"

namespace hb {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static Matrix identity(int n);
  // Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<std::vector<CycNum>>& cols, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  CycNum& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const CycNum& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<CycNum> column(int j) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const CycNum& c) const;
  std::vector<CycNum> apply(const std::vector<CycNum>& v) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_identity() const;

  // Reduced row echelon form; pivots receives the pivot column of each nonzero row.
  Matrix rref(std::vector<int>* pivots = nullptr) const;
  int rank() const;
  // Kernel basis: one vector per free column, with a 1 in that column.
  std::vector<std::vector<CycNum>> kernel() const;
  // Basis of the column space: the pivot columns of the original matrix.
  std::vector<std::vector<CycNum>> column_space() const;
  CycNum det() const;
  // Throws PreconditionError when singular.
  Matrix inverse() const;

  Matrix promoted(int conductor) const;
  // Hash key; canonical as long as every irrational entry has the same conductor.
  std::string key() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<CycNum> a_;
};

// det of the rows x cols submatrix, indices taken in the order given.
// Empty index lists give 1; a length mismatch throws PreconditionError.
CycNum submatrix_det(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

}  // namespace hb

#endif  // HOCHBRACKET_MATRIX_HPP_
