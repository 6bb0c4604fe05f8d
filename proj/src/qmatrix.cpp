#include "t237/qmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace t237 {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("QMatrix: negative dimension");
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

bool QMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

QMatrix QMatrix::submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
  QMatrix m(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
  for (size_t i = 0; i < row_idx.size(); ++i)
    for (size_t j = 0; j < col_idx.size(); ++j) m.at(i, j) = at(row_idx[i], col_idx[j]);
  return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: dimension mismatch in product");
  QMatrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return m;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// Bareiss forward elimination on an n x m tableau (m >= n). Returns the sign of the
// row permutation, or 0 if some pivot column is identically zero (singular head).
int bareiss_forward(QMatrix& t) {
  int n = t.rows();
  int sign = 1;
  Rational prev(1);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (!t.at(r, k).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != k) {
      for (int j = 0; j < t.cols(); ++j) std::swap(t.at(pivot, j), t.at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < t.cols(); ++j)
        t.at(i, j) = (t.at(k, k) * t.at(i, j) - t.at(i, k) * t.at(k, j)) / prev;
      t.at(i, k) = Rational(0);
    }
    prev = t.at(k, k);
  }
  return sign;
}

}  // namespace

Rational QMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("QMatrix: determinant of non-square matrix");
  if (rows_ == 0) return Rational(1);
  QMatrix t = *this;
  int sign = bareiss_forward(t);
  if (sign == 0) return Rational(0);
  return Rational(sign) * t.at(rows_ - 1, rows_ - 1);
}

std::vector<Rational> QMatrix::solve(const std::vector<Rational>& rhs) const {
  if (rows_ != cols_) throw std::invalid_argument("QMatrix: solve requires a square matrix");
  if (static_cast<int>(rhs.size()) != rows_)
    throw std::invalid_argument("QMatrix: right-hand side size mismatch");
  int n = rows_;
  QMatrix t(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t.at(i, j) = at(i, j);
    t.at(i, n) = rhs[i];
  }
  if (bareiss_forward(t) == 0) throw std::domain_error("QMatrix: singular system");
  std::vector<Rational> x(n);
  for (int i = n - 1; i >= 0; --i) {
    Rational acc = t.at(i, n);
    for (int j = i + 1; j < n; ++j) acc -= t.at(i, j) * x[j];
    x[i] = acc / t.at(i, i);
  }
  return x;
}

std::tuple<int, int, int> QMatrix::inertia() const {
  if (!is_symmetric()) throw std::invalid_argument("QMatrix: inertia of non-symmetric matrix");
  QMatrix a = *this;
  int n = rows_;
  int pos = 0, neg = 0, zero = 0;
  for (int k = 0; k < n; ++k) {
    if (a.at(k, k).is_zero()) {
      int d = -1, o = -1;
      for (int j = k + 1; j < n && d < 0; ++j)
        if (!a.at(j, j).is_zero()) d = j;
      for (int j = k + 1; j < n && o < 0; ++j)
        if (!a.at(k, j).is_zero()) o = j;
      if (d >= 0) {
        for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(d, j));
        for (int j = 0; j < n; ++j) std::swap(a.at(j, k), a.at(j, d));
      } else if (o >= 0) {
        // Diagonal block is zero: fold column o into k, giving pivot 2*a(k,o).
        for (int j = 0; j < n; ++j) a.at(k, j) += a.at(o, j);
        for (int j = 0; j < n; ++j) a.at(j, k) += a.at(j, o);
      } else {
        ++zero;
        continue;
      }
    }
    Rational p = a.at(k, k);
    if (p.sign() > 0)
      ++pos;
    else
      ++neg;
    for (int i = k + 1; i < n; ++i) {
      if (a.at(i, k).is_zero()) continue;
      Rational f = a.at(i, k) / p;
      for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      for (int j = 0; j < n; ++j) a.at(j, i) = a.at(i, j);
    }
  }
  return {pos, neg, zero};
}

bool QMatrix::is_negative_definite() const {
  if (!is_symmetric()) return false;
  std::vector<int> idx;
  for (int k = 0; k < rows_; ++k) {
    idx.push_back(k);
    Rational minor = submatrix(idx, idx).determinant();
    bool want_negative = (k % 2 == 0);
    if (minor.is_zero()) return false;
    if ((minor.sign() < 0) != want_negative) return false;
  }
  return true;
}

std::vector<std::vector<Integer>> lattice_row_basis(std::vector<std::vector<Integer>> gens) {
  if (gens.empty()) return {};
  size_t cols = gens[0].size();
  for (const auto& g : gens)
    if (g.size() != cols) throw std::invalid_argument("lattice_row_basis: ragged generators");
  size_t r = 0;
  for (size_t c = 0; c < cols && r < gens.size(); ++c) {
    // Reduce column c over rows r.. to a single nonzero entry by Euclidean row ops.
    while (true) {
      size_t best = r;
      int nonzero = 0;
      for (size_t i = r; i < gens.size(); ++i) {
        if (gens[i][c] == 0) continue;
        ++nonzero;
        if (gens[best][c] == 0 || cmp(abs(gens[i][c]), abs(gens[best][c])) < 0) best = i;
      }
      if (nonzero == 0) break;
      std::swap(gens[r], gens[best]);
      if (nonzero == 1) break;
      for (size_t i = r + 1; i < gens.size(); ++i) {
        if (gens[i][c] == 0) continue;
        Integer q = gens[i][c] / gens[r][c];  // truncated division is enough to shrink
        if (q != 0)
          for (size_t j = 0; j < cols; ++j) gens[i][j] -= q * gens[r][j];
      }
    }
    if (gens[r][c] != 0) {
      if (gens[r][c] < 0)
        for (auto& v : gens[r]) v = -v;
      ++r;
    }
  }
  gens.resize(r);
  return gens;
}

}  // namespace t237
