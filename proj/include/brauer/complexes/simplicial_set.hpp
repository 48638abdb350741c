#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "brauer/complexes/simplex.hpp"
#include "brauer/errors.hpp"

namespace brauer::complexes {

class ProductStructure;

// Finite simplicial set stored through its nondegenerate simplices. Every
// face is kept as a canonical reference (nondegenerate simplex + mask).
class SimplicialSet {
 public:
  class Builder;

  SimplicialSet() = default;

  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  // Largest dimension carrying a nondegenerate simplex, or -1 when empty.
  [[nodiscard]] int dimension() const noexcept {
    for (std::size_t d = counts_.size(); d-- > 0;) {
      if (counts_[d] != 0) return static_cast<int>(d);
    }
    return -1;
  }
  [[nodiscard]] std::size_t count(std::size_t d) const noexcept {
    return d < counts_.size() ? counts_[d] : 0;
  }
  [[nodiscard]] std::size_t total_count() const noexcept {
    std::size_t t = 0;
    for (auto c : counts_) t += c;
    return t;
  }
  [[nodiscard]] const std::vector<std::size_t>& counts() const noexcept { return counts_; }

  // i-th face of the nondegenerate d-simplex id.
  [[nodiscard]] SimplexRef face(std::size_t d, std::size_t id, std::size_t i) const {
    return faces_[d][id * (d + 1) + i];
  }
  [[nodiscard]] std::span<const SimplexRef> faces(std::size_t d, std::size_t id) const {
    if (d == 0) return {};
    return {faces_[d].data() + id * (d + 1), d + 1};
  }

  // r o phi, normalized, for a monotone phi : [k] -> [r.dim()].
  [[nodiscard]] SimplexRef compose(SimplexRef r, std::span<const std::uint8_t> phi) const {
    std::array<std::uint8_t, kMaxDimension + 1> psi{};
    const std::size_t k1 = phi.size();
    for (std::size_t t = 0; t < k1; ++t) {
      psi[t] = static_cast<std::uint8_t>(collapse(r.degeneracy, phi[t]));
    }
    std::uint32_t index = r.index;
    std::size_t m = r.base_dim;
    for (;;) {
      unsigned present = 0;
      for (std::size_t t = 0; t < k1; ++t) present |= 1u << psi[t];
      const unsigned full = (1u << (m + 1)) - 1;
      if (present == full) {
        DegeneracyMask mask = 0;
        for (std::size_t t = 0; t + 1 < k1; ++t) {
          if (psi[t] == psi[t + 1]) mask |= static_cast<DegeneracyMask>(1u << t);
        }
        return {index, mask, static_cast<std::uint8_t>(m)};
      }
      const auto i = static_cast<std::size_t>(std::bit_width(full & ~present) - 1);
      const SimplexRef y = face(m, index, i);
      for (std::size_t t = 0; t < k1; ++t) {
        const std::size_t v = psi[t] - (psi[t] > i ? 1 : 0);
        psi[t] = static_cast<std::uint8_t>(collapse(y.degeneracy, v));
      }
      index = y.index;
      m = y.base_dim;
    }
  }

  [[nodiscard]] SimplexRef face(SimplexRef r, std::size_t i) const {
    const VertexMap d = coface(r.dim(), i);
    return compose(r, d);
  }
  // Restriction to vertices 0..p.
  [[nodiscard]] SimplexRef front(SimplexRef r, std::size_t p) const {
    const VertexMap m = vertex_range(0, p);
    return compose(r, m);
  }
  // Restriction to vertices p..dim.
  [[nodiscard]] SimplexRef back(SimplexRef r, std::size_t p) const {
    const VertexMap m = vertex_range(p, r.dim());
    return compose(r, m);
  }

  [[nodiscard]] const std::shared_ptr<const ProductStructure>& product_structure() const noexcept {
    return product_;
  }
  void set_product_structure(std::shared_ptr<const ProductStructure> p) {
    product_ = std::move(p);
  }

  // Face references in range and of the right dimension, simplicial
  // identities d_i d_j = d_{j-1} d_i for i < j. Returns a description of
  // the first violation.
  [[nodiscard]] std::optional<std::string> validate() const {
    for (std::size_t d = 1; d < counts_.size(); ++d) {
      for (std::size_t id = 0; id < counts_[d]; ++id) {
        for (std::size_t i = 0; i <= d; ++i) {
          const SimplexRef f = face(d, id, i);
          if (f.dim() != d - 1 || f.index >= count(f.base_dim) ||
              (f.degeneracy >> (d - 1)) != 0) {
            return "bad face reference at dim " + std::to_string(d) + " id " +
                   std::to_string(id) + " face " + std::to_string(i);
          }
        }
      }
    }
    for (std::size_t d = 2; d < counts_.size(); ++d) {
      for (std::size_t id = 0; id < counts_[d]; ++id) {
        for (std::size_t j = 1; j <= d; ++j) {
          for (std::size_t i = 0; i < j; ++i) {
            const SimplexRef lhs = face(face(d, id, j), i);
            const SimplexRef rhs = face(face(d, id, i), j - 1);
            if (!(lhs == rhs)) {
              return "simplicial identity fails at dim " + std::to_string(d) + " id " +
                     std::to_string(id) + " (i=" + std::to_string(i) +
                     ", j=" + std::to_string(j) + ")";
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  // Sub-simplicial set of simplices of dimension <= d; ids are preserved.
  [[nodiscard]] SimplicialSet truncated(std::size_t d) const {
    SimplicialSet out;
    out.label_ = label_;
    const std::size_t keep = std::min(counts_.size(), d + 1);
    out.counts_.assign(counts_.begin(), counts_.begin() + static_cast<std::ptrdiff_t>(keep));
    out.faces_.assign(faces_.begin(), faces_.begin() + static_cast<std::ptrdiff_t>(keep));
    return out;
  }

 private:
  std::string label_;
  std::vector<std::size_t> counts_;
  std::vector<std::vector<SimplexRef>> faces_;
  std::shared_ptr<const ProductStructure> product_;
};

using SpacePtr = std::shared_ptr<const SimplicialSet>;

class SimplicialSet::Builder {
 public:
  explicit Builder(std::string label) { s_.label_ = std::move(label); }

  void reserve(std::size_t d, std::size_t n) {
    grow(d);
    s_.faces_[d].reserve(n * (d + 1));
  }

  std::uint32_t add_vertex() { return add(0, {}); }

  // Faces must already be canonical references into lower dimensions.
  std::uint32_t add(std::size_t d, std::span<const SimplexRef> faces) {
    if (d > kMaxDimension) throw ResourceLimitError("simplex dimension above 15");
    if (faces.size() != (d == 0 ? 0 : d + 1)) {
      throw InvalidArgumentError("simplex of dimension " + std::to_string(d) + " needs " +
                                 std::to_string(d + 1) + " faces");
    }
    grow(d);
    for (const auto& f : faces) {
      if (f.dim() + 1 != d || f.index >= s_.count(f.base_dim)) {
        throw InvalidArgumentError("face reference out of range");
      }
    }
    s_.faces_[d].insert(s_.faces_[d].end(), faces.begin(), faces.end());
    return static_cast<std::uint32_t>(s_.counts_[d]++);
  }

  [[nodiscard]] std::size_t count(std::size_t d) const { return s_.count(d); }

  SimplicialSet finish() && { return std::move(s_); }

 private:
  void grow(std::size_t d) {
    if (s_.counts_.size() <= d) {
      s_.counts_.resize(d + 1, 0);
      s_.faces_.resize(d + 1);
    }
  }
  SimplicialSet s_;
};

// Nondegenerate simplices of X x Y in dimension n are pairs (s_A x, s_B y)
// with A, B disjoint subsets of {0..n-1}. They are grouped into blocks by
// (A, B); inside a block the id is x * |Y_q| + y.
struct ProductBlock {
  DegeneracyMask left_mask = 0;
  DegeneracyMask right_mask = 0;
  std::uint8_t p = 0;
  std::uint8_t q = 0;
  std::size_t offset = 0;
  std::size_t count = 0;
};

class ProductStructure {
 public:
  ProductStructure(SpacePtr left, SpacePtr right, std::size_t cut)
      : left_(std::move(left)), right_(std::move(right)), cut_(cut) {
    const int dx = left_->dimension(), dy = right_->dimension();
    if (dx < 0 || dy < 0) {
      blocks_.clear();
      return;
    }
    cut_ = std::min<std::size_t>(cut_, static_cast<std::size_t>(dx + dy));
    if (cut_ > kMaxDimension) throw ResourceLimitError("product dimension above 15");
    blocks_.resize(cut_ + 1);
    index_.resize(cut_ + 1);
    totals_.assign(cut_ + 1, 0);
    for (std::size_t n = 0; n <= cut_; ++n) {
      const unsigned universe = (1u << n) - 1;
      for (unsigned a = 0; a <= universe; ++a) {
        const unsigned rest = universe & ~a;
        // Subsets b of rest in increasing numeric order.
        for (unsigned b = 0;; b = (b - rest) & rest) {
          const std::size_t p = n - static_cast<std::size_t>(std::popcount(a));
          const std::size_t q = n - static_cast<std::size_t>(std::popcount(b));
          const std::size_t c = left_->count(p) * right_->count(q);
          if (c != 0) {
            ProductBlock blk{static_cast<DegeneracyMask>(a), static_cast<DegeneracyMask>(b),
                             static_cast<std::uint8_t>(p), static_cast<std::uint8_t>(q),
                             totals_[n], c};
            index_[n].emplace(key(blk.left_mask, blk.right_mask),
                              static_cast<std::uint32_t>(blocks_[n].size()));
            blocks_[n].push_back(blk);
            totals_[n] += c;
          }
          if (b == rest) break;
        }
      }
    }
  }

  [[nodiscard]] const SpacePtr& left() const noexcept { return left_; }
  [[nodiscard]] const SpacePtr& right() const noexcept { return right_; }
  [[nodiscard]] std::size_t cut() const noexcept { return cut_; }
  [[nodiscard]] std::size_t count(std::size_t n) const noexcept {
    return n < totals_.size() ? totals_[n] : 0;
  }
  [[nodiscard]] const std::vector<ProductBlock>& blocks(std::size_t n) const {
    return blocks_[n];
  }

  [[nodiscard]] const ProductBlock* find_block(std::size_t n, DegeneracyMask a,
                                               DegeneracyMask b) const {
    if (n >= index_.size()) return nullptr;
    auto it = index_[n].find(key(a, b));
    return it == index_[n].end() ? nullptr : &blocks_[n][it->second];
  }

  // The product simplex (x, y), both of the same dimension, in canonical form.
  [[nodiscard]] SimplexRef lookup(SimplexRef x, SimplexRef y) const {
    const std::size_t n = x.dim();
    if (y.dim() != n) throw InvalidArgumentError("product lookup: dimension mismatch");
    const auto common = static_cast<DegeneracyMask>(x.degeneracy & y.degeneracy);
    const DegeneracyMask a = quotient_mask(x.degeneracy, common);
    const DegeneracyMask b = quotient_mask(y.degeneracy, common);
    const std::size_t m = n - static_cast<std::size_t>(std::popcount(common));
    const ProductBlock* blk = find_block(m, a, b);
    if (blk == nullptr) {
      throw InternalConsistencyError("product simplex outside the enumerated range");
    }
    const std::size_t id = blk->offset + x.index * right_->count(blk->q) + y.index;
    return {static_cast<std::uint32_t>(id), common, static_cast<std::uint8_t>(m)};
  }

  [[nodiscard]] std::pair<SimplexRef, SimplexRef> decode(std::size_t n, std::size_t id) const {
    const auto& bl = blocks_[n];
    auto it = std::upper_bound(bl.begin(), bl.end(), id,
                               [](std::size_t v, const ProductBlock& b) { return v < b.offset; });
    const ProductBlock& blk = *std::prev(it);
    const std::size_t local = id - blk.offset;
    const std::size_t ny = right_->count(blk.q);
    return {SimplexRef{static_cast<std::uint32_t>(local / ny), blk.left_mask, blk.p},
            SimplexRef{static_cast<std::uint32_t>(local % ny), blk.right_mask, blk.q}};
  }

  [[nodiscard]] std::shared_ptr<const ProductStructure> truncated(std::size_t d) const {
    auto out = std::make_shared<ProductStructure>(*this);
    if (d < out->cut_) {
      out->cut_ = d;
      out->blocks_.resize(d + 1);
      out->index_.resize(d + 1);
      out->totals_.resize(d + 1);
    }
    return out;
  }

 private:
  static std::uint32_t key(DegeneracyMask a, DegeneracyMask b) {
    return (static_cast<std::uint32_t>(a) << 16) | b;
  }

  SpacePtr left_, right_;
  std::size_t cut_;
  std::vector<std::vector<ProductBlock>> blocks_;
  std::vector<std::unordered_map<std::uint32_t, std::uint32_t>> index_;
  std::vector<std::size_t> totals_;
};

}  // namespace brauer::complexes
