#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "brauer/errors.hpp"
#include "brauer/integer.hpp"

namespace brauer::linalg {

using IntVector = std::vector<Integer>;

// Dense row-major integer matrix. Used for transforms and small systems.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw InvalidArgumentError("ragged rows in IntMatrix::from_rows");
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] std::span<const Integer> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k.is_zero()) return;
    auto d = row(dst);
    auto s = row(src);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!s[c].is_zero()) d[c].add_mul(k, s[c]);
    }
  }
  // col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k.is_zero()) return;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Integer& s = (*this)(r, src);
      if (!s.is_zero()) (*this)(r, dst).add_mul(k, s);
    }
  }
  void negate_row(std::size_t r) {
    for (auto& v : row(r)) v = -v;
  }
  void negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
  }

  [[nodiscard]] IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v.is_zero(); });
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgumentError("IntMatrix product: shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik.is_zero()) continue;
        auto orow = out.row(i);
        auto brow = b.row(k);
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!brow[j].is_zero()) orow[j].add_mul(aik, brow[j]);
        }
      }
    }
    return out;
  }

  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntVector data_;
};

// x * M for a row vector x.
inline IntVector row_times(std::span<const Integer> x, const IntMatrix& m) {
  if (x.size() != m.rows()) throw InvalidArgumentError("row_times: shape mismatch");
  IntVector out(m.cols());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    auto r = m.row(i);
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (!r[j].is_zero()) out[j].add_mul(x[i], r[j]);
    }
  }
  return out;
}

// M * x for a column vector x.
inline IntVector times_col(const IntMatrix& m, std::span<const Integer> x) {
  if (x.size() != m.cols()) throw InvalidArgumentError("times_col: shape mismatch");
  IntVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!r[j].is_zero() && !x[j].is_zero()) out[i].add_mul(r[j], x[j]);
    }
  }
  return out;
}

// Determinant by fraction-free Bareiss elimination.
inline Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw InvalidArgumentError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k);
        v.sub_mul(m(i, k), m(k, j));
        m(i, j) = divexact(v, prev);
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace brauer::linalg
