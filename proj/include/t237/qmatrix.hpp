// Small dense exact matrices: Bareiss elimination, inertia, integer lattice bases.
#pragma once

#include <tuple>
#include <vector>

#include "t237/rational.hpp"

namespace t237 {

class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols);
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return data_[i * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const;
  QMatrix transpose() const;
  QMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b);

  // Bareiss fraction-free elimination; exact.
  Rational determinant() const;
  // Solves A x = rhs for square nonsingular A; throws std::domain_error otherwise.
  std::vector<Rational> solve(const std::vector<Rational>& rhs) const;

  // Inertia (positive, negative, zero) of a symmetric matrix by exact congruence
  // diagonalization; pivoting handles zero diagonal entries.
  std::tuple<int, int, int> inertia() const;

  // Leading principal minors alternate in sign starting negative.
  bool is_negative_definite() const;

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

// Basis of the lattice generated by the given integer row vectors (row-style
// Hermite reduction); the result has one row per basis vector.
std::vector<std::vector<Integer>> lattice_row_basis(std::vector<std::vector<Integer>> gens);

}  // namespace t237
