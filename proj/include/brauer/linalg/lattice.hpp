#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "brauer/errors.hpp"
#include "brauer/integer.hpp"
#include "brauer/linalg/int_matrix.hpp"
#include "brauer/linalg/smith.hpp"
#include "brauer/linalg/sparse_matrix.hpp"

namespace brauer::linalg {

// Dense transforms above this many entries are refused.
inline constexpr std::size_t kMaxDenseTransformEntries = 16'000'000;

namespace detail {

using SparseVec = std::vector<std::pair<std::uint32_t, Integer>>;

// x = a*x + b*y, both sorted by index.
inline SparseVec combine(const Integer& a, const SparseVec& x, const Integer& b,
                         const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      if (!a.is_zero()) out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      if (!b.is_zero()) out.emplace_back(y[j].first, b * y[j].second);
      ++j;
    } else {
      Integer v = a * x[i].second;
      v.add_mul(b, y[j].second);
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

// A basis of the lattice generated by the columns of B, one vector per
// distinct lowest nonzero row (echelon form), returned as an n x r matrix.
inline IntMatrix column_lattice_basis(const SparseIntMatrix& b) {
  using detail::SparseVec;
  std::vector<std::optional<SparseVec>> basis(b.rows());
  std::size_t count = 0;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    auto rs = b.column_rows(c);
    auto vs = b.column_values(c);
    SparseVec v;
    v.reserve(rs.size());
    for (std::size_t k = 0; k < rs.size(); ++k) v.emplace_back(rs[k], vs[k]);
    while (!v.empty()) {
      const std::uint32_t p = v.back().first;
      auto& slot = basis[p];
      if (!slot) {
        slot = std::move(v);
        ++count;
        break;
      }
      const Integer bp = slot->back().second;
      const Integer vp = v.back().second;
      if ((vp % bp).is_zero()) {
        v = detail::combine(1, v, -(vp / bp), *slot);
      } else {
        const auto e = xgcd(bp, vp);
        SparseVec nb = detail::combine(e.s, *slot, e.t, v);
        v = detail::combine(bp / e.g, v, -(vp / e.g), *slot);
        slot = std::move(nb);
      }
    }
  }
  IntMatrix out(b.rows(), count);
  std::size_t k = 0;
  for (const auto& slot : basis) {
    if (!slot) continue;
    for (const auto& [r, val] : *slot) out(r, k) = val;
    ++k;
  }
  return out;
}

// A basis of Z^n adapted to the column lattice L of B: U * L * V = diag(e),
// so rows r..n-1 of U span the integral left kernel of B and the first r
// rows pair with the invariant factors e_1 | ... | e_r (all >= 1).
struct AdaptedBasis {
  std::vector<Integer> invariants;
  IntMatrix U;
  IntMatrix U_inverse;

  [[nodiscard]] std::size_t dimension() const noexcept { return U.rows(); }
  [[nodiscard]] std::size_t rank() const noexcept { return invariants.size(); }
};

inline AdaptedBasis compute_adapted_basis(const SparseIntMatrix& b) {
  const std::size_t n = b.rows();
  if (n * n > kMaxDenseTransformEntries) {
    throw ResourceLimitError("cochain space of dimension " + std::to_string(n) +
                             " exceeds the dense transform limit");
  }
  IntMatrix lattice = column_lattice_basis(b);
  AdaptedBasis out;
  if (lattice.cols() == 0) {
    out.U = IntMatrix::identity(n);
    out.U_inverse = IntMatrix::identity(n);
    return out;
  }
  auto snf = smith_normal_form(
      lattice, {.left = true, .left_inverse = true, .right = false, .right_inverse = false});
  if (snf.rank != lattice.cols()) {
    throw InternalConsistencyError("lattice basis is not linearly independent");
  }
  out.invariants = snf.diagonal();
  out.U = std::move(snf.U);
  out.U_inverse = std::move(snf.U_inverse);
  return out;
}

}  // namespace brauer::linalg
