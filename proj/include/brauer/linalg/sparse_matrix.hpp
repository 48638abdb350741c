#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "brauer/errors.hpp"
#include "brauer/integer.hpp"
#include "brauer/linalg/int_matrix.hpp"

namespace brauer::linalg {

struct Triplet {
  std::size_t row;
  std::size_t col;
  Integer value;
};

// Incremental 128-bit content hash (two independent 64-bit lanes).
class Digest {
 public:
  void add(std::uint64_t v) noexcept {
    for (int i = 0; i < 8; ++i) {
      const auto byte = static_cast<std::uint8_t>(v >> (8 * i));
      a_ = (a_ ^ byte) * 0x100000001b3ULL;
    }
    b_ ^= v + 0x9e3779b97f4a7c15ULL + (b_ << 6) + (b_ >> 2);
    b_ = (b_ ^ (b_ >> 31)) * 0xbf58476d1ce4e5b9ULL;
  }
  void add(std::string_view s) noexcept {
    add(static_cast<std::uint64_t>(s.size()));
    for (char c : s) add(static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
  }
  void add(const Integer& v) {
    if (v.is_small()) {
      add(static_cast<std::uint64_t>(v.to_int64()));
    } else {
      add(v.to_string());
    }
  }
  [[nodiscard]] std::string hex() const {
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(a_),
                  static_cast<unsigned long long>(b_));
    return buf;
  }

 private:
  std::uint64_t a_ = 0xcbf29ce484222325ULL;
  std::uint64_t b_ = 0x84222325cbf29ce4ULL;
};

// Immutable sparse integer matrix in compressed-column form. Each column
// holds strictly increasing row indices and no stored zeros.
class SparseIntMatrix {
 public:
  using Index = std::uint32_t;

  SparseIntMatrix() : col_start_(1, 0) {}
  SparseIntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), col_start_(cols + 1, 0) {}

  // Duplicate (row, col) pairs are summed; zero results are dropped.
  static SparseIntMatrix from_triplets(std::size_t rows, std::size_t cols,
                                       std::vector<Triplet> entries) {
    for (const auto& t : entries) {
      if (t.row >= rows || t.col >= cols) {
        throw InvalidArgumentError("sparse matrix entry out of bounds");
      }
    }
    std::sort(entries.begin(), entries.end(), [](const Triplet& x, const Triplet& y) {
      return std::tie(x.col, x.row) < std::tie(y.col, y.row);
    });
    SparseIntMatrix m(rows, cols);
    std::size_t i = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      while (i < entries.size() && entries[i].col == c) {
        const std::size_t r = entries[i].row;
        Integer sum = std::move(entries[i].value);
        ++i;
        while (i < entries.size() && entries[i].col == c && entries[i].row == r) {
          sum += entries[i].value;
          ++i;
        }
        if (!sum.is_zero()) {
          m.row_index_.push_back(static_cast<Index>(r));
          m.values_.push_back(std::move(sum));
        }
      }
      m.col_start_[c + 1] = m.row_index_.size();
    }
    return m;
  }

  class ColumnBuilder;

  static SparseIntMatrix from_dense(const IntMatrix& d) {
    std::vector<Triplet> t;
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c)
        if (!d(r, c).is_zero()) t.push_back({r, c, d(r, c)});
    return from_triplets(d.rows(), d.cols(), std::move(t));
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] std::size_t nnz() const noexcept { return values_.size(); }

  [[nodiscard]] std::span<const Index> column_rows(std::size_t c) const {
    return {row_index_.data() + col_start_[c], col_start_[c + 1] - col_start_[c]};
  }
  [[nodiscard]] std::span<const Integer> column_values(std::size_t c) const {
    return {values_.data() + col_start_[c], col_start_[c + 1] - col_start_[c]};
  }

  [[nodiscard]] Integer at(std::size_t r, std::size_t c) const {
    auto rs = column_rows(c);
    auto it = std::lower_bound(rs.begin(), rs.end(), static_cast<Index>(r));
    if (it == rs.end() || *it != r) return 0;
    return column_values(c)[static_cast<std::size_t>(it - rs.begin())];
  }

  [[nodiscard]] std::vector<Triplet> triplets() const {
    std::vector<Triplet> out;
    out.reserve(nnz());
    for (std::size_t c = 0; c < cols_; ++c) {
      auto rs = column_rows(c);
      auto vs = column_values(c);
      for (std::size_t k = 0; k < rs.size(); ++k) out.push_back({rs[k], c, vs[k]});
    }
    return out;
  }

  [[nodiscard]] IntMatrix to_dense() const {
    IntMatrix d(rows_, cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
      auto rs = column_rows(c);
      auto vs = column_values(c);
      for (std::size_t k = 0; k < rs.size(); ++k) d(rs[k], c) = vs[k];
    }
    return d;
  }

  [[nodiscard]] SparseIntMatrix transpose() const {
    auto t = triplets();
    for (auto& e : t) std::swap(e.row, e.col);
    return from_triplets(cols_, rows_, std::move(t));
  }

  // M * x
  [[nodiscard]] IntVector apply(std::span<const Integer> x) const {
    if (x.size() != cols_) throw InvalidArgumentError("SparseIntMatrix::apply: shape mismatch");
    IntVector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (x[c].is_zero()) continue;
      auto rs = column_rows(c);
      auto vs = column_values(c);
      for (std::size_t k = 0; k < rs.size(); ++k) out[rs[k]].add_mul(vs[k], x[c]);
    }
    return out;
  }

  // y * M for a row vector y.
  [[nodiscard]] IntVector apply_left(std::span<const Integer> y) const {
    if (y.size() != rows_) {
      throw InvalidArgumentError("SparseIntMatrix::apply_left: shape mismatch");
    }
    IntVector out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
      auto rs = column_rows(c);
      auto vs = column_values(c);
      Integer acc;
      for (std::size_t k = 0; k < rs.size(); ++k) {
        if (!y[rs[k]].is_zero()) acc.add_mul(y[rs[k]], vs[k]);
      }
      out[c] = std::move(acc);
    }
    return out;
  }

  [[nodiscard]] bool is_zero() const noexcept { return values_.empty(); }

  [[nodiscard]] std::string digest() const {
    Digest d;
    d.add(static_cast<std::uint64_t>(rows_));
    d.add(static_cast<std::uint64_t>(cols_));
    for (std::size_t c = 0; c < cols_; ++c) {
      d.add(static_cast<std::uint64_t>(col_start_[c + 1] - col_start_[c]));
      auto rs = column_rows(c);
      auto vs = column_values(c);
      for (std::size_t k = 0; k < rs.size(); ++k) {
        d.add(static_cast<std::uint64_t>(rs[k]));
        d.add(vs[k]);
      }
    }
    return d.hex();
  }

  friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.col_start_ == b.col_start_ &&
           a.row_index_ == b.row_index_ && a.values_ == b.values_;
  }

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> col_start_;
  std::vector<Index> row_index_;
  IntVector values_;
};

// Builds a matrix column by column.
class SparseIntMatrix::ColumnBuilder {
 public:
  ColumnBuilder(std::size_t rows, std::size_t cols) : m_(rows, 0), cols_(cols) {
    m_.col_start_.reserve(cols + 1);
  }
  void reserve(std::size_t nnz) {
    m_.row_index_.reserve(nnz);
    m_.values_.reserve(nnz);
  }
  // Entries may be unsorted and contain duplicates or zeros.
  void push_column(std::vector<std::pair<SparseIntMatrix::Index, Integer>>& col) {
    std::sort(col.begin(), col.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i < col.size();) {
      const SparseIntMatrix::Index r = col[i].first;
      if (r >= m_.rows_) throw InvalidArgumentError("sparse matrix entry out of bounds");
      Integer sum = std::move(col[i].second);
      for (++i; i < col.size() && col[i].first == r; ++i) sum += col[i].second;
      if (!sum.is_zero()) {
        m_.row_index_.push_back(r);
        m_.values_.push_back(std::move(sum));
      }
    }
    ++m_.cols_;
    m_.col_start_.push_back(m_.row_index_.size());
  }
  SparseIntMatrix finish() && {
    if (m_.cols_ != cols_) throw InvalidArgumentError("ColumnBuilder: wrong column count");
    return std::move(m_);
  }

 private:
  SparseIntMatrix m_;
  std::size_t cols_;
};

inline SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgumentError("sparse product: shape mismatch");
  SparseIntMatrix::ColumnBuilder out(a.rows_, b.cols_);
  std::vector<std::pair<SparseIntMatrix::Index, Integer>> acc;
  for (std::size_t c = 0; c < b.cols_; ++c) {
    acc.clear();
    auto brs = b.column_rows(c);
    auto bvs = b.column_values(c);
    for (std::size_t k = 0; k < brs.size(); ++k) {
      auto ars = a.column_rows(brs[k]);
      auto avs = a.column_values(brs[k]);
      for (std::size_t l = 0; l < ars.size(); ++l) acc.emplace_back(ars[l], avs[l] * bvs[k]);
    }
    out.push_column(acc);
  }
  return std::move(out).finish();
}

// Text exchange format: "rows cols nnz", then one "row col value" per line,
// zero-based, in column-major order.
inline void write_matrix(std::ostream& os, const SparseIntMatrix& m) {
  os << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto rs = m.column_rows(c);
    auto vs = m.column_values(c);
    for (std::size_t k = 0; k < rs.size(); ++k) os << rs[k] << ' ' << c << ' ' << vs[k] << '\n';
  }
}

inline SparseIntMatrix read_matrix(std::istream& is) {
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(is >> rows >> cols >> nnz)) throw ParseError("matrix: bad header, expected 'rows cols nnz'");
  std::vector<Triplet> t;
  t.reserve(nnz);
  std::string value;
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t r = 0, c = 0;
    if (!(is >> r >> c >> value)) throw ParseError("matrix: truncated entry list");
    if (r >= rows || c >= cols) throw ParseError("matrix: index out of bounds");
    Integer v;
    try {
      v = Integer::parse(value);
    } catch (const std::invalid_argument&) {
      throw ParseError("matrix: bad value '" + value + "'");
    }
    if (v.is_zero()) throw ParseError("matrix: stored zero entry");
    t.push_back({r, c, std::move(v)});
  }
  std::string extra;
  if (is >> extra) throw ParseError("matrix: trailing data");
  auto sorted = t;
  std::sort(sorted.begin(), sorted.end(), [](const Triplet& x, const Triplet& y) {
    return std::tie(x.col, x.row) < std::tie(y.col, y.row);
  });
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k].row == sorted[k - 1].row && sorted[k].col == sorted[k - 1].col) {
      throw ParseError("matrix: duplicate entry");
    }
  }
  return SparseIntMatrix::from_triplets(rows, cols, std::move(t));
}

}  // namespace brauer::linalg
