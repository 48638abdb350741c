#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauer/errors.hpp"
#include "brauer/integer.hpp"
#include "brauer/linalg/int_matrix.hpp"
#include "brauer/linalg/sparse_matrix.hpp"

namespace brauer::linalg {

inline constexpr const char* kSmithAlgorithmVersion = "snf-minabs-markowitz-1";

struct SmithOptions {
  bool left = true;
  bool left_inverse = false;
  bool right = true;
  bool right_inverse = false;
};

// U * M * V = D with U, V unimodular and d_1 | d_2 | ... | d_rank, zeros last.
// Transforms that were not requested are left empty.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix U_inverse;
  IntMatrix V_inverse;
  std::string source_digest;
  std::size_t rank = 0;

  [[nodiscard]] std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    const std::size_t k = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < k; ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

class SmithReducer {
 public:
  SmithReducer(IntMatrix a, const SmithOptions& opt) : a_(std::move(a)), opt_(opt) {
    const std::size_t r = a_.rows(), c = a_.cols();
    if (opt_.left) u_ = IntMatrix::identity(r);
    if (opt_.left_inverse) ui_ = IntMatrix::identity(r);
    if (opt_.right) v_ = IntMatrix::identity(c);
    if (opt_.right_inverse) vi_ = IntMatrix::identity(c);
  }

  SmithDecomposition run() {
    const std::size_t n = std::min(a_.rows(), a_.cols());
    std::size_t t = 0;
    for (; t < n; ++t) {
      if (!select_pivot(t)) break;
      reduce_at(t);
      if (a_(t, t).sign() < 0) negate_row(t);
    }
    SmithDecomposition out;
    out.rank = t;
    out.D = std::move(a_);
    out.U = std::move(u_);
    out.U_inverse = std::move(ui_);
    out.V = std::move(v_);
    out.V_inverse = std::move(vi_);
    return out;
  }

 private:
  static bool abs_less(const Integer& x, const Integer& y) {
    if (x.is_small() && y.is_small()) {
      const auto ax = x.to_int64() < 0 ? -static_cast<__int128>(x.to_int64()) : x.to_int64();
      const auto ay = y.to_int64() < 0 ? -static_cast<__int128>(y.to_int64()) : y.to_int64();
      return ax < ay;
    }
    return abs(x) < abs(y);
  }

  // Minimal nonzero |a_ij| in the trailing block; ties broken by the
  // Markowitz count (row_nnz - 1) * (col_nnz - 1), then position.
  bool select_pivot(std::size_t t) {
    const std::size_t R = a_.rows(), C = a_.cols();
    std::vector<std::size_t> row_nnz(R, 0), col_nnz(C, 0);
    const Integer* best = nullptr;
    for (std::size_t i = t; i < R; ++i) {
      auto row = a_.row(i);
      for (std::size_t j = t; j < C; ++j) {
        if (row[j].is_zero()) continue;
        ++row_nnz[i];
        ++col_nnz[j];
        if (best == nullptr || abs_less(row[j], *best)) best = &row[j];
      }
    }
    if (best == nullptr) return false;
    const Integer bound = abs(*best);
    std::size_t bi = 0, bj = 0, cost = static_cast<std::size_t>(-1);
    for (std::size_t i = t; i < R; ++i) {
      auto row = a_.row(i);
      for (std::size_t j = t; j < C; ++j) {
        if (row[j].is_zero() || abs(row[j]) != bound) continue;
        const std::size_t c = (row_nnz[i] - 1) * (col_nnz[j] - 1);
        if (c < cost) {
          cost = c;
          bi = i;
          bj = j;
        }
      }
    }
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void reduce_at(std::size_t t) {
    const std::size_t R = a_.rows(), C = a_.cols();
    for (;;) {
      bool remainder = false;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a_(i, t).is_zero()) continue;
        const Integer q = round_div(a_(i, t), a_(t, t));
        add_row(i, t, -q);
        if (!a_(i, t).is_zero()) remainder = true;
      }
      if (remainder) {
        std::size_t best = t;
        for (std::size_t i = t + 1; i < R; ++i) {
          if (!a_(i, t).is_zero() && abs_less(a_(i, t), a_(best, t))) best = i;
        }
        swap_rows(t, best);
        continue;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a_(t, j).is_zero()) continue;
        const Integer q = round_div(a_(t, j), a_(t, t));
        add_col(j, t, -q);
        if (!a_(t, j).is_zero()) remainder = true;
      }
      if (remainder) {
        std::size_t best = t;
        for (std::size_t j = t + 1; j < C; ++j) {
          if (!a_(t, j).is_zero() && abs_less(a_(t, j), a_(t, best))) best = j;
        }
        swap_cols(t, best);
        continue;
      }
      if (a_(t, t).is_unit()) return;
      // Divisibility chain: fold in a row whose entries the pivot does not divide.
      bool folded = false;
      for (std::size_t i = t + 1; i < R && !folded; ++i) {
        auto row = a_.row(i);
        for (std::size_t j = t + 1; j < C; ++j) {
          if (!row[j].is_zero() && !(row[j] % a_(t, t)).is_zero()) {
            add_row(t, i, 1);
            folded = true;
            break;
          }
        }
      }
      if (!folded) return;
    }
  }

  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    if (k.is_zero()) return;
    a_.add_row_multiple(dst, src, k);
    if (opt_.left) u_.add_row_multiple(dst, src, k);
    if (opt_.left_inverse) ui_.add_col_multiple(src, dst, -k);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    if (k.is_zero()) return;
    a_.add_col_multiple(dst, src, k);
    if (opt_.right) v_.add_col_multiple(dst, src, k);
    if (opt_.right_inverse) vi_.add_row_multiple(src, dst, -k);
  }
  void swap_rows(std::size_t x, std::size_t y) {
    if (x == y) return;
    a_.swap_rows(x, y);
    if (opt_.left) u_.swap_rows(x, y);
    if (opt_.left_inverse) ui_.swap_cols(x, y);
  }
  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    a_.swap_cols(x, y);
    if (opt_.right) v_.swap_cols(x, y);
    if (opt_.right_inverse) vi_.swap_rows(x, y);
  }
  void negate_row(std::size_t r) {
    a_.negate_row(r);
    if (opt_.left) u_.negate_row(r);
    if (opt_.left_inverse) ui_.negate_col(r);
  }

  IntMatrix a_, u_, ui_, v_, vi_;
  SmithOptions opt_;
};

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& m, const SmithOptions& opt = {}) {
  auto out = detail::SmithReducer(m, opt).run();
  out.source_digest = SparseIntMatrix::from_dense(m).digest();
  return out;
}

inline SmithDecomposition smith_normal_form(const SparseIntMatrix& m,
                                            const SmithOptions& opt = {}) {
  auto out = detail::SmithReducer(m.to_dense(), opt).run();
  out.source_digest = m.digest();
  return out;
}

// Certificate that M x = b (mod modulus) has no solution: certificate * M is
// divisible by obstruction_modulus while certificate * b is not (a zero
// obstruction modulus means certificate * M == 0 exactly and certificate * b != 0).
struct NoSolution {
  IntVector certificate;
  Integer obstruction_modulus;
};

struct LinearSolveResult {
  std::optional<IntVector> solution;
  std::optional<NoSolution> obstruction;
  [[nodiscard]] bool solvable() const noexcept { return solution.has_value(); }
};

// Solve M x = b over Z (modulus 0) or over Z/modulus.
inline LinearSolveResult solve_linear(const SparseIntMatrix& m, std::span<const Integer> b,
                                      const Integer& modulus) {
  if (b.size() != m.rows()) throw InvalidArgumentError("solve_linear: dimension mismatch");
  if (modulus.sign() < 0) throw InvalidArgumentError("solve_linear: negative modulus");
  const auto snf = smith_normal_form(m, {.left = true, .left_inverse = false, .right = true});
  const IntVector c = times_col(snf.U, b);
  IntVector y(m.cols());
  auto fail = [&](std::size_t i, Integer obstruction) {
    LinearSolveResult r;
    r.obstruction = NoSolution{IntVector(snf.U.row(i).begin(), snf.U.row(i).end()),
                               std::move(obstruction)};
    return r;
  };
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < snf.rank) {
      const Integer& d = snf.D(i, i);
      if (modulus.is_zero()) {
        if (!(c[i] % d).is_zero()) return fail(i, d);
        y[i] = c[i] / d;
      } else {
        const Integer g = gcd(d, modulus);
        if (!mod_floor(c[i], g).is_zero()) return fail(i, g);
        const Integer mg = modulus / g;
        y[i] = mg.is_one() ? Integer(0)
                           : mod_floor((c[i] / g) * mod_inverse(d / g, mg), mg);
      }
    } else if (!mod_floor(c[i], modulus).is_zero()) {
      return fail(i, modulus);
    }
  }
  IntVector x = times_col(snf.V, y);
  if (!modulus.is_zero()) {
    for (auto& v : x) v = mod_floor(v, modulus);
  }
  LinearSolveResult r;
  r.solution = std::move(x);
  return r;
}

}  // namespace brauer::linalg
