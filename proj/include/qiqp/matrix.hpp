#pragma once

#include "qiqp/numeric.hpp"

#include <initializer_list>

namespace qiqp {

// Dense row-major integer matrix. rows >= 0, cols >= 1; a "matrix with no
// rows" is the empty equality system over a fixed variable count.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(1) {}

  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 1) throw std::invalid_argument("IntMatrix: need rows >= 0, cols >= 1");
    data_.resize(static_cast<std::size_t>(rows) * cols);
  }

  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 1 : static_cast<int>(rows.begin()->size());
    if (cols_ < 1) throw std::invalid_argument("IntMatrix: need cols >= 1");
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_)
        throw std::invalid_argument("IntMatrix: ragged initializer");
      for (const Int& v : r) data_.push_back(v);
    }
  }

  static IntMatrix empty(int cols) { return IntMatrix(0, cols); }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Int& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  IntVector row(int r) const {
    IntVector out(cols_);
    for (int c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
    return out;
  }

  IntVector col(int c) const {
    IntVector out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void append_row(const IntVector& r) {
    if (static_cast<int>(r.size()) != cols_)
      throw std::invalid_argument("IntMatrix::append_row: width mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  IntMatrix transpose() const {
    if (rows_ == 0) {
      // Transposing an empty system would need 0 columns; callers never do.
      throw std::invalid_argument("IntMatrix::transpose: empty matrix");
    }
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  // Submatrix by explicit row/column index lists.
  IntMatrix select(const std::vector<int>& rows, const std::vector<int>& cols) const {
    IntMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) s(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i], cols[j]);
    return s;
  }

  Int max_abs_entry() const {
    Int m = 0;
    for (const Int& v : data_)
      if (int_abs(v) > m) m = int_abs(v);
    return m;
  }

  bool operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }
  bool operator!=(const IntMatrix& other) const { return !(*this == other); }

  // Lexicographic order on (rows, cols, entries); used for deterministic sets.
  bool operator<(const IntMatrix& other) const {
    if (rows_ != other.rows_) return rows_ < other.rows_;
    if (cols_ != other.cols_) return cols_ < other.cols_;
    return data_ < other.data_;
  }

 private:
  int rows_;
  int cols_;
  std::vector<Int> data_;
};

// Dense rational matrix, same conventions.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(1) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 1) throw std::invalid_argument("RatMatrix: need rows >= 0, cols >= 1");
    data_.resize(static_cast<std::size_t>(rows) * cols);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rat& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

 private:
  int rows_;
  int cols_;
  std::vector<Rat> data_;
};

inline Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IntVector mat_vec(const IntMatrix& m, const IntVector& x) {
  if (m.cols() != static_cast<int>(x.size())) throw std::invalid_argument("mat_vec: size mismatch");
  IntVector out(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    Int s = 0;
    for (int c = 0; c < m.cols(); ++c) s += m(r, c) * x[c];
    out[r] = s;
  }
  return out;
}

inline RatVector mat_vec(const RatMatrix& m, const RatVector& x) {
  if (m.cols() != static_cast<int>(x.size())) throw std::invalid_argument("mat_vec: size mismatch");
  RatVector out(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    Rat s = 0;
    for (int c = 0; c < m.cols(); ++c) s += m(r, c) * x[c];
    out[r] = s;
  }
  return out;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: size mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) {
      Int s = 0;
      for (int k = 0; k < a.cols(); ++k) s += a(r, k) * b(k, c);
      out(r, c) = s;
    }
  return out;
}

inline RatVector to_rat(const IntVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

inline Rat l1_distance(const IntVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("l1_distance: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += rat_abs(Rat(a[i]) - b[i]);
  return s;
}

inline Int l1_norm(const IntVector& v) {
  Int s = 0;
  for (const Int& e : v) s += int_abs(e);
  return s;
}

inline Int linf_norm(const IntVector& v) {
  Int m = 0;
  for (const Int& e : v)
    if (int_abs(e) > m) m = int_abs(e);
  return m;
}

}  // namespace qiqp
