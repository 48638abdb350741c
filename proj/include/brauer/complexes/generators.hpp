#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "brauer/complexes/simplex.hpp"
#include "brauer/complexes/simplicial_set.hpp"
#include "brauer/errors.hpp"

namespace brauer::complexes {

// Candidate simplices examined by the Eilenberg-MacLane generators, and the
// nondegenerate simplices stored by products.
inline constexpr std::size_t kDefaultSimplexBudget = 5'000'000;

inline SpacePtr point() {
  SimplicialSet::Builder b("point");
  b.add_vertex();
  return std::make_shared<const SimplicialSet>(std::move(b).finish());
}

inline SpacePtr two_points() {
  SimplicialSet::Builder b("two-points");
  b.add_vertex();
  b.add_vertex();
  return std::make_shared<const SimplicialSet>(std::move(b).finish());
}

// One vertex and one loop.
inline SpacePtr minimal_circle() {
  SimplicialSet::Builder b("circle");
  b.add_vertex();
  const std::array<SimplexRef, 2> f{nondegenerate(0, 0), nondegenerate(0, 0)};
  b.add(1, f);
  return std::make_shared<const SimplicialSet>(std::move(b).finish());
}

// Boundary of a triangle: vertices 0,1,2 and edges 01, 02, 12.
inline SpacePtr triangle_circle() {
  SimplicialSet::Builder b("triangle");
  for (int i = 0; i < 3; ++i) b.add_vertex();
  auto edge = [&](std::uint32_t from, std::uint32_t to) {
    const std::array<SimplexRef, 2> f{nondegenerate(0, to), nondegenerate(0, from)};
    b.add(1, f);
  };
  edge(0, 1);
  edge(0, 2);
  edge(1, 2);
  return std::make_shared<const SimplicialSet>(std::move(b).finish());
}

// S^1 with a 2-cell attached by a degree-n map. Vertices v, c; the loop e
// at v; edges f_i from v to c; triangles t_i with faces (f_{i+1}, f_i, e).
inline SpacePtr moore_polygon(unsigned n) {
  if (n < 2) throw InvalidArgumentError("moore_polygon needs n >= 2");
  SimplicialSet::Builder b("moore:" + std::to_string(n));
  const auto v = b.add_vertex();
  const auto c = b.add_vertex();
  const std::array<SimplexRef, 2> loop{nondegenerate(0, v), nondegenerate(0, v)};
  const auto e = b.add(1, loop);
  std::vector<std::uint32_t> f(n);
  for (unsigned i = 0; i < n; ++i) {
    const std::array<SimplexRef, 2> spoke{nondegenerate(0, c), nondegenerate(0, v)};
    f[i] = b.add(1, spoke);
  }
  for (unsigned i = 0; i < n; ++i) {
    const std::array<SimplexRef, 3> tri{nondegenerate(1, f[(i + 1) % n]), nondegenerate(1, f[i]),
                                        nondegenerate(1, e)};
    b.add(2, tri);
  }
  return std::make_shared<const SimplicialSet>(std::move(b).finish());
}

// Unreduced suspension X * {N, S}. In dimension d the ids are X_d, then the
// cones x*N for x in X_{d-1}, then x*S. Cone vertices come last in dim 0.
inline SpacePtr suspension(const SpacePtr& x) {
  const int top = x->dimension();
  if (top < 0) throw InvalidArgumentError("suspension of an empty simplicial set");
  SimplicialSet::Builder b("susp(" + x->label() + ")");
  const auto dx = static_cast<std::size_t>(top);
  std::vector<SimplexRef> faces;
  // r * apex for a reference r into X.
  auto cone = [&](std::size_t apex, SimplexRef r) -> SimplexRef {
    const std::size_t base = r.base_dim;
    const std::size_t id = x->count(base + 1) + apex * x->count(base) + r.index;
    return {static_cast<std::uint32_t>(id), r.degeneracy, static_cast<std::uint8_t>(base + 1)};
  };
  for (std::size_t d = 0; d <= dx + 1; ++d) {
    for (std::size_t id = 0; id < x->count(d); ++id) {
      faces.assign(x->faces(d, id).begin(), x->faces(d, id).end());
      b.add(d, faces);
    }
    if (d == 0) {
      b.add_vertex();  // N
      b.add_vertex();  // S
      continue;
    }
    for (std::size_t apex = 0; apex < 2; ++apex) {
      const SimplexRef apex_ref = nondegenerate(0, static_cast<std::uint32_t>(x->count(0) + apex));
      for (std::size_t id = 0; id < x->count(d - 1); ++id) {
        faces.clear();
        const std::size_t p = d - 1;
        if (p == 0) {
          faces.push_back(apex_ref);
        } else {
          for (std::size_t i = 0; i <= p; ++i) faces.push_back(cone(apex, x->face(p, id, i)));
        }
        faces.push_back(nondegenerate(p, static_cast<std::uint32_t>(id)));
        b.add(d, faces);
      }
    }
  }
  return std::make_shared<const SimplicialSet>(std::move(b).finish());
}

inline SpacePtr skeleton(const SpacePtr& x, std::size_t d) {
  auto s = std::make_shared<SimplicialSet>(x->truncated(d));
  s->set_label("skel(" + x->label() + "," + std::to_string(d) + ")");
  if (x->product_structure()) s->set_product_structure(x->product_structure()->truncated(d));
  return s;
}

// Levelwise product, optionally cut above max_dim.
inline SpacePtr product(const SpacePtr& x, const SpacePtr& y,
                        std::optional<std::size_t> max_dim = std::nullopt,
                        std::size_t budget = kDefaultSimplexBudget) {
  const int dx = x->dimension(), dy = y->dimension();
  if (dx < 0 || dy < 0) throw InvalidArgumentError("product with an empty simplicial set");
  const std::size_t full = static_cast<std::size_t>(dx + dy);
  const std::size_t cut = max_dim ? std::min(*max_dim, full) : full;
  auto ps = std::make_shared<const ProductStructure>(x, y, cut);
  std::size_t total = 0;
  for (std::size_t n = 0; n <= cut; ++n) total += ps->count(n);
  if (total > budget) {
    throw ResourceLimitError("product has " + std::to_string(total) +
                             " nondegenerate simplices, budget " + std::to_string(budget));
  }
  std::string label = "prod(" + x->label() + "," + y->label();
  if (max_dim) label += "," + std::to_string(*max_dim);
  label += ")";
  SimplicialSet::Builder b(label);
  std::vector<SimplexRef> faces;
  for (std::size_t n = 0; n <= cut; ++n) {
    b.reserve(n, ps->count(n));
    for (const ProductBlock& blk : ps->blocks(n)) {
      const std::size_t nx = x->count(blk.p), ny = y->count(blk.q);
      for (std::size_t i = 0; i < nx; ++i) {
        const SimplexRef rx{static_cast<std::uint32_t>(i), blk.left_mask, blk.p};
        for (std::size_t j = 0; j < ny; ++j) {
          faces.clear();
          if (n > 0) {
            const SimplexRef ry{static_cast<std::uint32_t>(j), blk.right_mask, blk.q};
            for (std::size_t k = 0; k <= n; ++k) {
              faces.push_back(ps->lookup(x->face(rx, k), y->face(ry, k)));
            }
          }
          b.add(n, faces);
        }
      }
    }
  }
  auto s = std::make_shared<SimplicialSet>(std::move(b).finish());
  s->set_product_structure(ps);
  return s;
}

inline SpacePtr torus() {
  auto t = product(minimal_circle(), minimal_circle());
  auto s = std::make_shared<SimplicialSet>(*t);
  s->set_label("torus");
  return s;
}

namespace detail {

// Simplicial sets whose d-simplices are normalized k-cocycles on the
// standard d-simplex with values in Z/n (k = 1: the nerve of Z/n; k = 2: a
// model of K(Z/n, 2)). A cocycle is determined by its values on the
// k-faces through vertex 0, which serve as free coordinates; ids follow the
// mixed-radix code of those coordinates.
class CocycleModel {
 public:
  CocycleModel(unsigned n, unsigned k, std::size_t dmax, std::size_t budget)
      : n_(n), k_(k), dmax_(dmax) {
    if (n < 2) throw InvalidArgumentError("modulus must be at least 2");
    if (dmax > kMaxDimension - 1) throw ResourceLimitError("dimension above 14");
    long double total = 0;
    for (std::size_t d = 0; d <= dmax; ++d) {
      total += std::pow(static_cast<long double>(n), static_cast<long double>(free_count(d)));
    }
    if (total > static_cast<long double>(budget)) {
      throw ResourceLimitError("model needs " + std::to_string(static_cast<double>(total)) +
                               " candidate simplices, budget " + std::to_string(budget));
    }
  }

  SimplicialSet build(std::string label) {
    SimplicialSet::Builder b(std::move(label));
    tables_.resize(dmax_ + 1);
    std::vector<std::uint32_t> freev;
    std::vector<SimplexRef> faces;
    for (std::size_t d = 0; d <= dmax_; ++d) {
      const std::size_t fc = free_count(d);
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < fc; ++i) total *= n_;
      if (d < dmax_) tables_[d].assign(total, kNone);
      freev.assign(fc, 0);
      for (std::uint64_t code = 0; code < total; ++code) {
        if (code != 0) {
          for (std::size_t i = 0; i < fc; ++i) {
            if (++freev[i] < n_) break;
            freev[i] = 0;
          }
        }
        fill_table(d, freev);
        identity_map(d);
        if (degeneracy_mask(map_, d) != 0) continue;
        faces.clear();
        if (d > 0) {
          for (std::size_t i = 0; i <= d; ++i) faces.push_back(face_ref(d, i));
        }
        const auto id = b.add(d, faces);
        if (d < dmax_) tables_[d][code] = id;
      }
    }
    return std::move(b).finish();
  }

 private:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  using Map = std::array<std::uint8_t, kMaxDimension + 1>;

  [[nodiscard]] std::size_t free_count(std::size_t d) const {
    return k_ == 1 ? d : d * (d == 0 ? 0 : d - 1) / 2;
  }

  // Position of the free coordinate for the k-subset s of {1..d}.
  static std::size_t pair_index(std::size_t d, std::size_t x, std::size_t y) {
    // Lex order of pairs 1 <= x < y <= d.
    return (x - 1) * d - (x - 1) * x / 2 + (y - x - 1);
  }

  std::uint32_t& at(std::size_t a, std::size_t b, std::size_t c = 0) {
    return values_[(a << 8) | (b << 4) | c];
  }
  std::uint32_t value(const Map& w, std::size_t a, std::size_t b, std::size_t c = 0) {
    return k_ == 1 ? at(w[a], w[b]) : at(w[a], w[b], w[c]);
  }

  void fill_table(std::size_t d, const std::vector<std::uint32_t>& f) {
    if (k_ == 1) {
      for (std::size_t b = 1; b <= d; ++b) {
        at(0, b) = f[b - 1];
        for (std::size_t a = 1; a < b; ++a) at(a, b) = (f[b - 1] + n_ - f[a - 1]) % n_;
      }
      return;
    }
    for (std::size_t b = 1; b <= d; ++b) {
      for (std::size_t c = b + 1; c <= d; ++c) {
        const std::uint32_t fbc = f[pair_index(d, b, c)];
        at(0, b, c) = fbc;
        for (std::size_t a = 1; a < b; ++a) {
          at(a, b, c) = (fbc + n_ - f[pair_index(d, a, c)] + f[pair_index(d, a, b)]) % n_;
        }
      }
    }
  }

  void identity_map(std::size_t d) {
    for (std::size_t t = 0; t <= d; ++t) map_[t] = static_cast<std::uint8_t>(t);
  }

  // Set of j with g = s_j d_j g, for the cocycle g = values o w on [0..e].
  DegeneracyMask degeneracy_mask(const Map& w, std::size_t e) {
    DegeneracyMask mask = 0;
    for (std::size_t j = 0; j < e; ++j) {
      if (degenerate_at(w, e, j)) mask |= static_cast<DegeneracyMask>(1u << j);
    }
    return mask;
  }

  bool degenerate_at(const Map& w, std::size_t e, std::size_t j) {
    auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
      // {a,b,c} (or {a,b}) contains j.
      std::array<std::size_t, 3> s{a, b, c};
      const std::size_t len = k_ + 1;
      bool has_next = false;
      for (std::size_t i = 0; i < len; ++i) has_next |= s[i] == j + 1;
      const std::uint32_t v = k_ == 1 ? value(w, a, b) : value(w, a, b, c);
      if (has_next) return v == 0;
      for (std::size_t i = 0; i < len; ++i) {
        if (s[i] == j) s[i] = j + 1;
      }
      std::sort(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(len));
      const std::uint32_t u = k_ == 1 ? value(w, s[0], s[1]) : value(w, s[0], s[1], s[2]);
      return u == v;
    };
    if (k_ == 1) {
      for (std::size_t a = 0; a <= e; ++a) {
        if (a == j) continue;
        if (!(a < j ? check(a, j, 0) : check(j, a, 0))) return false;
      }
      return true;
    }
    for (std::size_t a = 0; a <= e; ++a) {
      if (a == j) continue;
      for (std::size_t b = a + 1; b <= e; ++b) {
        if (b == j) continue;
        std::array<std::size_t, 3> s{a, b, j};
        std::sort(s.begin(), s.end());
        if (!check(s[0], s[1], s[2])) return false;
      }
    }
    return true;
  }

  SimplexRef face_ref(std::size_t d, std::size_t i) {
    Map w{};
    for (std::size_t t = 0, u = 0; t <= d; ++t) {
      if (t != i) w[u++] = static_cast<std::uint8_t>(t);
    }
    const std::size_t e = d - 1;
    const DegeneracyMask mask = degeneracy_mask(w, e);
    Map r{};
    std::size_t m = 0;
    for (std::size_t t = 0; t <= e; ++t) {
      if (t == 0 || ((mask >> (t - 1)) & 1u) == 0) r[m++] = w[t];
    }
    --m;
    std::uint64_t code = 0, radix = 1;
    if (k_ == 1) {
      for (std::size_t b = 1; b <= m; ++b, radix *= n_) code += radix * value(r, 0, b);
    } else {
      for (std::size_t b = 1; b <= m; ++b) {
        for (std::size_t c = b + 1; c <= m; ++c, radix *= n_) code += radix * value(r, 0, b, c);
      }
    }
    const std::uint32_t id = tables_[m][code];
    if (id == kNone) throw InternalConsistencyError("cocycle model: face base is degenerate");
    return {id, mask, static_cast<std::uint8_t>(m)};
  }

  unsigned n_, k_;
  std::size_t dmax_;
  std::vector<std::vector<std::uint32_t>> tables_;
  std::array<std::uint32_t, 4096> values_{};
  Map map_{};
};

}  // namespace detail

// Nerve of Z/n: d-simplices [g_1|...|g_d], nondegenerate iff all g_i != 0.
inline SpacePtr wbar_cyclic(unsigned n, std::size_t dmax,
                            std::size_t budget = kDefaultSimplexBudget) {
  detail::CocycleModel m(n, 1, dmax, budget);
  return std::make_shared<const SimplicialSet>(
      m.build("wbar:" + std::to_string(n) + ":" + std::to_string(dmax)));
}

// K(Z/n, 2) through dimension dmax. The 2-simplex with id i carries the
// value i + 1, so the tautological class sends id i to i + 1.
inline SpacePtr em_space_2(unsigned n, std::size_t dmax,
                           std::size_t budget = kDefaultSimplexBudget) {
  detail::CocycleModel m(n, 2, dmax, budget);
  return std::make_shared<const SimplicialSet>(
      m.build("em2:" + std::to_string(n) + ":" + std::to_string(dmax)));
}

}  // namespace brauer::complexes
