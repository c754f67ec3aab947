#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "psdecomp/errors.hpp"

namespace psdecomp {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

/// Small dense integer matrix, row major, 0-based.  Used for Cartan matrices
/// and for the integral action of Weyl group elements.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_ * cols_));
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw ValidationError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Int& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  Int operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  IntMatrix operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ValidationError("matrix dimension mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Int a = (*this)(i, k);
        if (a == 0) continue;
        for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    return out;
  }

  IntVec operator*(const IntVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw ValidationError("matrix/vector dimension mismatch");
    IntVec out(static_cast<std::size_t>(rows_), 0);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    return out;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntVec column(int c) const {
    IntVec out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out[static_cast<std::size_t>(i)] = (*this)(i, c);
    return out;
  }

  IntVec row(int r) const {
    return IntVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  /// Fraction-free (Bareiss) determinant; exact for integer input.
  Int determinant() const {
    if (rows_ != cols_) throw ValidationError("determinant of a non-square matrix");
    const int n = rows_;
    if (n == 0) return 1;
    std::vector<Int> a = data_;
    auto at = [&](int r, int c) -> Int& { return a[static_cast<std::size_t>(r * n + c)]; };
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (at(k, k) == 0) {
        int swap = -1;
        for (int r = k + 1; r < n; ++r)
          if (at(r, k) != 0) { swap = r; break; }
        if (swap < 0) return 0;
        for (int c = 0; c < n; ++c) std::swap(at(k, c), at(swap, c));
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
  }

  const std::vector<Int>& data() const noexcept { return data_; }

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    os << '[';
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

}  // namespace psdecomp
