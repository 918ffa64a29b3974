#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace dp4 {

// Dense matrix over an exact field F. Row-major.
template <class F>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<F>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<F> row(std::size_t i) const {
    return std::vector<F>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  void set_row(std::size_t i, const std::vector<F>& r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: size mismatch in product");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const F& x = (*this)(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  Matrix vstack(const Matrix& o) const {
    if (cols_ != o.cols_ && rows_ != 0 && o.rows_ != 0)
      throw std::invalid_argument("Matrix: vstack width mismatch");
    Matrix r(rows_ + o.rows_, rows_ ? cols_ : o.cols_);
    r.a_ = a_;
    r.a_.insert(r.a_.end(), o.a_.begin(), o.a_.end());
    return r;
  }

  // In-place reduced row echelon form. Returns pivot column indices.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t sel = r;
      while (sel < rows_ && (*this)(sel, c).is_zero()) ++sel;
      if (sel == rows_) continue;
      if (sel != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(r, j));
      F inv = (*this)(r, c).inv();
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c).is_zero()) continue;
        F f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix copy = *this;
    return copy.rref().size();
  }

  // Basis of the right kernel {x : Ax = 0}, rows of the returned matrix.
  Matrix kernel() const {
    Matrix e = *this;
    auto pivots = e.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(free_cols.size(), cols_);
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
      std::size_t fc = free_cols[fi];
      k(fi, fc) = F(1);
      for (std::size_t pi = 0; pi < pivots.size(); ++pi) k(fi, pivots[pi]) = -e(pi, fc);
    }
    return k;
  }

  F det() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix: det of non-square");
    Matrix m = *this;
    F d(1);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t sel = c;
      while (sel < rows_ && m(sel, c).is_zero()) ++sel;
      if (sel == rows_) return F(0);
      if (sel != c) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(c, j));
        d = -d;
      }
      d *= m(c, c);
      F inv = m(c, c).inv();
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (m(i, c).is_zero()) continue;
        F f = m(i, c) * inv;
        for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return d;
  }

  std::vector<F> apply(const std::vector<F>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("Matrix: apply size mismatch");
    std::vector<F> y(rows_, F(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<F> a_;
};

// Linear subspace of F^n in canonical form: rows are an RREF basis.
// Canonical form makes equality a plain comparison.
template <class F>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Matrix<F> spanning_rows, std::size_t ambient)
      : ambient_(ambient), basis_(std::move(spanning_rows)) {
    if (basis_.rows() && basis_.cols() != ambient_)
      throw std::invalid_argument("Subspace: ambient mismatch");
    canonicalize();
  }
  static Subspace span_of(const std::vector<std::vector<F>>& vecs, std::size_t ambient) {
    if (vecs.empty()) return Subspace(Matrix<F>(0, ambient), ambient);
    return Subspace(Matrix<F>::from_rows(vecs), ambient);
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  std::vector<F> basis_row(std::size_t i) const { return basis_.row(i); }

  bool contains(const std::vector<F>& v) const {
    Matrix<F> m = basis_.vstack(Matrix<F>::from_rows({v}));
    return m.rank() == dim();
  }
  bool contains(const Subspace& o) const {
    if (o.ambient_ != ambient_) return false;
    Matrix<F> m = basis_.vstack(o.basis_);
    return m.rank() == dim();
  }

  Subspace sum(const Subspace& o) const {
    return Subspace(basis_.vstack(o.basis_), ambient_);
  }

  Subspace intersect(const Subspace& o) const {
    // x = y·A = z·B. Left-kernel vectors [y | z] of the stacked matrix give
    // intersection elements y·A; compute as right kernel of the transpose.
    if (o.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    Matrix<F> stacked = basis_.vstack(o.basis_);
    Matrix<F> lk = stacked.transpose().kernel();
    std::vector<std::vector<F>> vecs;
    for (std::size_t i = 0; i < lk.rows(); ++i) {
      std::vector<F> v(ambient_, F(0));
      for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < ambient_; ++c) v[c] += lk(i, r) * basis_(r, c);
      vecs.push_back(std::move(v));
    }
    if (vecs.empty()) return Subspace(Matrix<F>(0, ambient_), ambient_);
    return span_of(vecs, ambient_);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  void canonicalize() {
    auto pivots = basis_.rref();
    Matrix<F> clean(pivots.size(), ambient_);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t j = 0; j < ambient_; ++j) clean(i, j) = basis_(i, j);
    basis_ = std::move(clean);
  }

  std::size_t ambient_ = 0;
  Matrix<F> basis_;
};

}  // namespace dp4
