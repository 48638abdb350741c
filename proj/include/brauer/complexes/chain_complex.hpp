#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "brauer/complexes/simplex.hpp"
#include "brauer/complexes/simplicial_set.hpp"
#include "brauer/errors.hpp"
#include "brauer/linalg/sparse_matrix.hpp"

namespace brauer::complexes {

using linalg::SparseIntMatrix;

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

namespace detail {

// Per-degree memo of matrices produced on first use.
class LazyMatrices {
 public:
  using Fn = std::function<SparseIntMatrix(std::size_t)>;

  explicit LazyMatrices(Fn fn) : fn_(std::move(fn)) {}

  const SparseIntMatrix& get(std::size_t d) const {
    std::shared_ptr<Slot> slot;
    {
      std::lock_guard lock(mutex_);
      auto& s = slots_[d];
      if (!s) s = std::make_shared<Slot>();
      slot = s;
    }
    std::call_once(slot->once, [&] { slot->value = fn_(d); });
    return slot->value;
  }

 private:
  struct Slot {
    std::once_flag once;
    SparseIntMatrix value;
  };
  Fn fn_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::size_t, std::shared_ptr<Slot>> slots_;
};

}  // namespace detail

class Reduction;

// Graded free abelian group with boundary maps d_k : C_k -> C_{k-1}, given
// as rank(k-1) x rank(k) matrices computed on demand.
class ChainComplex {
 public:
  using BoundaryFn = std::function<SparseIntMatrix(std::size_t)>;

  ChainComplex(std::string label, std::vector<std::size_t> ranks, BoundaryFn fn)
      : label_(std::move(label)), ranks_(std::move(ranks)), boundaries_([this, fn](std::size_t d) {
          if (d == 0 || d >= ranks_.size()) return SparseIntMatrix(rank(d - 1), rank(d));
          SparseIntMatrix m = fn(d);
          if (m.rows() != rank(d - 1) || m.cols() != rank(d)) {
            throw InternalConsistencyError("boundary matrix has the wrong shape");
          }
          return m;
        }) {}

  ChainComplex(const ChainComplex&) = delete;
  ChainComplex& operator=(const ChainComplex&) = delete;

  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  [[nodiscard]] std::size_t rank(std::size_t d) const noexcept {
    return d < ranks_.size() ? ranks_[d] : 0;
  }
  [[nodiscard]] const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  [[nodiscard]] int top_dimension() const noexcept {
    for (std::size_t d = ranks_.size(); d-- > 0;) {
      if (ranks_[d] != 0) return static_cast<int>(d);
    }
    return -1;
  }

  // d_d for d >= 1; zero matrices outside the stored range.
  [[nodiscard]] const SparseIntMatrix& boundary(std::size_t d) const {
    if (d == 0) throw InvalidArgumentError("boundary in degree 0 is not defined");
    return boundaries_.get(d);
  }

  [[nodiscard]] long long euler_characteristic() const noexcept {
    long long chi = 0;
    for (std::size_t d = 0; d < ranks_.size(); ++d) {
      chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(ranks_[d]);
    }
    return chi;
  }

  [[nodiscard]] const std::shared_ptr<const Reduction>& reduction() const noexcept {
    return reduction_;
  }
  void set_reduction(std::shared_ptr<const Reduction> r) { reduction_ = std::move(r); }

 private:
  std::string label_;
  std::vector<std::size_t> ranks_;
  detail::LazyMatrices boundaries_;
  std::shared_ptr<const Reduction> reduction_;
};

using ComplexPtr = std::shared_ptr<const ChainComplex>;

// Chain maps f : C -> E and g : E -> C with f g = id and g f homotopic to the
// identity in degrees below valid_below, so cohomology of C in those degrees
// may be computed on the smaller complex E.
class Reduction {
 public:
  using MatrixFn = std::function<SparseIntMatrix(std::size_t)>;

  Reduction(ComplexPtr effective, std::size_t valid_below, MatrixFn inclusion,
            MatrixFn projection)
      : effective_(std::move(effective)),
        valid_below_(valid_below),
        inclusion_(std::move(inclusion)),
        projection_(std::move(projection)) {}

  [[nodiscard]] const ComplexPtr& effective() const noexcept { return effective_; }
  [[nodiscard]] std::size_t valid_below() const noexcept { return valid_below_; }
  // g_d as a rank_C(d) x rank_E(d) matrix.
  [[nodiscard]] const SparseIntMatrix& inclusion(std::size_t d) const { return inclusion_.get(d); }
  // f_d as a rank_E(d) x rank_C(d) matrix.
  [[nodiscard]] const SparseIntMatrix& projection(std::size_t d) const {
    return projection_.get(d);
  }

 private:
  ComplexPtr effective_;
  std::size_t valid_below_;
  detail::LazyMatrices inclusion_, projection_;
};

// Basis of (E_X tensor E_Y)_d: blocks p = 0..d of size rank_X(p) * rank_Y(d - p),
// element (u, v) at offset(d, p) + u * rank_Y(d - p) + v.
class TensorLayout {
 public:
  TensorLayout(std::vector<std::size_t> left, std::vector<std::size_t> right, std::size_t cut)
      : rx_(std::move(left)), ry_(std::move(right)) {
    const std::size_t top = (rx_.empty() || ry_.empty()) ? 0 : rx_.size() + ry_.size() - 2;
    const std::size_t last = std::min(top, cut);
    offsets_.resize(last + 1);
    for (std::size_t d = 0; d <= last; ++d) {
      offsets_[d].assign(d + 2, 0);
      for (std::size_t p = 0; p <= d; ++p) {
        offsets_[d][p + 1] = offsets_[d][p] + rx(p) * ry(d - p);
      }
    }
  }
  [[nodiscard]] std::size_t rx(std::size_t p) const { return p < rx_.size() ? rx_[p] : 0; }
  [[nodiscard]] std::size_t ry(std::size_t q) const { return q < ry_.size() ? ry_[q] : 0; }
  [[nodiscard]] std::size_t degrees() const { return offsets_.size(); }
  [[nodiscard]] std::size_t rank(std::size_t d) const {
    return d < offsets_.size() ? offsets_[d].back() : 0;
  }
  [[nodiscard]] std::size_t index(std::size_t d, std::size_t p, std::size_t u,
                                  std::size_t v) const {
    return offsets_[d][p] + u * ry(d - p) + v;
  }
  // (p, u, v) for a basis index in degree d.
  [[nodiscard]] std::tuple<std::size_t, std::size_t, std::size_t> decode(std::size_t d,
                                                                         std::size_t i) const {
    const auto& o = offsets_[d];
    std::size_t p = static_cast<std::size_t>(std::upper_bound(o.begin(), o.end(), i) - o.begin()) - 1;
    const std::size_t local = i - o[p];
    const std::size_t n = ry(d - p);
    return {p, local / n, local % n};
  }

 private:
  std::vector<std::size_t> rx_, ry_;
  std::vector<std::vector<std::size_t>> offsets_;
};

// Tensor product with d(u x v) = du x v + (-1)^p u x dv, cut above `cut`.
inline ComplexPtr tensor_product(const ComplexPtr& x, const ComplexPtr& y,
                                 std::size_t cut = kUnbounded) {
  auto layout = std::make_shared<const TensorLayout>(x->ranks(), y->ranks(), cut);
  std::vector<std::size_t> ranks(layout->degrees());
  for (std::size_t d = 0; d < ranks.size(); ++d) ranks[d] = layout->rank(d);
  auto fn = [x, y, layout](std::size_t d) {
    SparseIntMatrix::ColumnBuilder out(layout->rank(d - 1), layout->rank(d));
    std::vector<std::pair<SparseIntMatrix::Index, Integer>> col;
    for (std::size_t p = 0; p <= d; ++p) {
      const std::size_t q = d - p;
      const std::size_t nu = layout->rx(p), nv = layout->ry(q);
      for (std::size_t u = 0; u < nu; ++u) {
        for (std::size_t v = 0; v < nv; ++v) {
          col.clear();
          if (p >= 1) {
            const auto& bx = x->boundary(p);
            auto rs = bx.column_rows(u);
            auto vs = bx.column_values(u);
            for (std::size_t k = 0; k < rs.size(); ++k) {
              col.emplace_back(static_cast<SparseIntMatrix::Index>(layout->index(d - 1, p - 1, rs[k], v)),
                               vs[k]);
            }
          }
          if (q >= 1) {
            const auto& by = y->boundary(q);
            auto rs = by.column_rows(v);
            auto vs = by.column_values(v);
            for (std::size_t k = 0; k < rs.size(); ++k) {
              col.emplace_back(static_cast<SparseIntMatrix::Index>(layout->index(d - 1, p, u, rs[k])),
                               p % 2 == 0 ? vs[k] : -vs[k]);
            }
          }
          out.push_column(col);
        }
      }
    }
    return std::move(out).finish();
  };
  return std::make_shared<const ChainComplex>("(" + x->label() + ")x(" + y->label() + ")",
                                              std::move(ranks), fn);
}

inline ComplexPtr normalized_chain_complex(const SpacePtr& space);

namespace detail {

struct Shuffle {
  DegeneracyMask left_mask;   // degeneracies applied to the X factor
  DegeneracyMask right_mask;  // degeneracies applied to the Y factor
  int sign;
};

// (p, q)-shuffles as lattice paths; the X factor stays put on Y-steps and
// vice versa. Sign = (-1)^(pairs where a Y-step precedes an X-step).
inline std::vector<Shuffle> shuffles(std::size_t p, std::size_t q) {
  std::vector<Shuffle> out;
  const std::size_t n = p + q;
  const unsigned universe = (1u << n) - 1;
  for (unsigned xs = 0; xs <= universe; ++xs) {
    if (static_cast<std::size_t>(std::popcount(xs)) != p) continue;
    int inversions = 0, ysteps = 0;
    for (std::size_t t = 0; t < n; ++t) {
      if ((xs >> t) & 1u) {
        inversions += ysteps;
      } else {
        ++ysteps;
      }
    }
    out.push_back({static_cast<DegeneracyMask>(universe & ~xs), static_cast<DegeneracyMask>(xs),
                   inversions % 2 == 0 ? 1 : -1});
  }
  return out;
}

using SparseColumn = std::vector<std::pair<std::size_t, Integer>>;

inline SparseColumn matrix_column(const SparseIntMatrix& m, std::size_t c) {
  SparseColumn out;
  auto rs = m.column_rows(c);
  auto vs = m.column_values(c);
  for (std::size_t k = 0; k < rs.size(); ++k) out.emplace_back(rs[k], vs[k]);
  return out;
}

// Eilenberg-Zilber reduction of C(X x Y) onto E_X tensor E_Y, where E_X, E_Y
// are the effective complexes of the factors: g = EML o (g_X x g_Y) and
// f = (f_X x f_Y) o AW.
inline std::shared_ptr<const Reduction> product_reduction(const SpacePtr& space) {
  auto ps = space->product_structure();
  const SpacePtr& xs = ps->left();
  const SpacePtr& ys = ps->right();
  const ComplexPtr cx = normalized_chain_complex(xs);
  const ComplexPtr cy = normalized_chain_complex(ys);
  const auto rx = cx->reduction();
  const auto ry = cy->reduction();
  const ComplexPtr ex = rx ? rx->effective() : cx;
  const ComplexPtr ey = ry ? ry->effective() : cy;
  std::size_t valid = kUnbounded;
  if (rx) valid = std::min(valid, rx->valid_below());
  if (ry) valid = std::min(valid, ry->valid_below());
  const auto full = static_cast<std::size_t>(xs->dimension() + ys->dimension());
  if (ps->cut() < full) valid = std::min(valid, ps->cut());
  const ComplexPtr e = tensor_product(ex, ey, ps->cut());
  auto layout = std::make_shared<const TensorLayout>(ex->ranks(), ey->ranks(), ps->cut());

  auto g_column = [](const std::shared_ptr<const Reduction>& r, std::size_t d, std::size_t i) {
    if (!r) return SparseColumn{{i, Integer(1)}};
    return matrix_column(r->inclusion(d), i);
  };
  auto inclusion = [ps, rx, ry, layout, space, g_column](std::size_t d) {
    SparseIntMatrix::ColumnBuilder out(space->count(d), layout->rank(d));
    std::vector<std::pair<SparseIntMatrix::Index, Integer>> col;
    for (std::size_t p = 0; p <= d; ++p) {
      const std::size_t q = d - p;
      const auto sh = shuffles(p, q);
      std::vector<const ProductBlock*> blocks;
      for (const auto& s : sh) blocks.push_back(ps->find_block(d, s.left_mask, s.right_mask));
      const std::size_t ny = ps->right()->count(q);
      for (std::size_t u = 0; u < layout->rx(p); ++u) {
        const SparseColumn gu = g_column(rx, p, u);
        for (std::size_t v = 0; v < layout->ry(q); ++v) {
          const SparseColumn gv = g_column(ry, q, v);
          col.clear();
          for (const auto& [x, a] : gu) {
            for (const auto& [y, b] : gv) {
              const Integer ab = a * b;
              for (std::size_t k = 0; k < sh.size(); ++k) {
                if (blocks[k] == nullptr) {
                  throw InternalConsistencyError("shuffle product outside the product range");
                }
                const std::size_t id = blocks[k]->offset + x * ny + y;
                col.emplace_back(static_cast<SparseIntMatrix::Index>(id),
                                 sh[k].sign > 0 ? ab : -ab);
              }
            }
          }
          out.push_column(col);
        }
      }
    }
    return std::move(out).finish();
  };

  auto f_column = [](const std::shared_ptr<const Reduction>& r, std::size_t d, std::size_t i) {
    if (!r) return SparseColumn{{i, Integer(1)}};
    return matrix_column(r->projection(d), i);
  };
  auto projection = [ps, rx, ry, layout, space, f_column](std::size_t d) {
    SparseIntMatrix::ColumnBuilder out(layout->rank(d), space->count(d));
    std::vector<std::pair<SparseIntMatrix::Index, Integer>> col;
    const SimplicialSet& x = *ps->left();
    const SimplicialSet& y = *ps->right();
    for (std::size_t id = 0; id < space->count(d); ++id) {
      const auto [sx, sy] = ps->decode(d, id);
      col.clear();
      for (std::size_t s = 0; s <= d; ++s) {
        if (s > sx.base_dim || d - s > sy.base_dim) continue;
        const SimplexRef fx = x.front(sx, s);
        if (fx.degenerate()) continue;
        const SimplexRef by = y.back(sy, s);
        if (by.degenerate()) continue;
        const SparseColumn cu = f_column(rx, s, fx.index);
        const SparseColumn cv = f_column(ry, d - s, by.index);
        for (const auto& [u, a] : cu) {
          for (const auto& [v, b] : cv) {
            col.emplace_back(static_cast<SparseIntMatrix::Index>(layout->index(d, s, u, v)), a * b);
          }
        }
      }
      out.push_column(col);
    }
    return std::move(out).finish();
  };
  return std::make_shared<const Reduction>(e, valid, inclusion, projection);
}

}  // namespace detail

// Normalized chains: nondegenerate simplices, faces landing on degenerate
// simplices contribute nothing.
inline ComplexPtr normalized_chain_complex(const SpacePtr& space) {
  std::vector<std::size_t> ranks;
  const int top = space->dimension();
  for (int d = 0; d <= top; ++d) ranks.push_back(space->count(static_cast<std::size_t>(d)));
  auto fn = [space](std::size_t d) {
    SparseIntMatrix::ColumnBuilder out(space->count(d - 1), space->count(d));
    out.reserve(space->count(d) * (d + 1));
    std::vector<std::pair<SparseIntMatrix::Index, Integer>> col;
    for (std::size_t id = 0; id < space->count(d); ++id) {
      col.clear();
      for (std::size_t i = 0; i <= d; ++i) {
        const SimplexRef f = space->face(d, id, i);
        if (f.degenerate()) continue;
        col.emplace_back(f.index, i % 2 == 0 ? 1 : -1);
      }
      out.push_column(col);
    }
    return std::move(out).finish();
  };
  auto c = std::make_shared<ChainComplex>(space->label(), std::move(ranks), fn);
  if (space->product_structure()) c->set_reduction(detail::product_reduction(space));
  return c;
}

}  // namespace brauer::complexes
