#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/errors.hpp"
#include "brauer/integer.hpp"
#include "brauer/linalg/int_matrix.hpp"
#include "brauer/linalg/smith.hpp"
#include "brauer/linalg/sparse_matrix.hpp"

namespace brauer::linalg {

// A finitely generated abelian group Z/d_1 + ... + Z/d_t + Z^f presented as a
// quotient of an ambient lattice Z^N. Canonical coordinates list the torsion
// summands first (in divisibility order) and then the free ones.
struct AbelianGroupPresentation {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  // N x (t + f): canonical(x) = reduce(x * coordinate_map) for a row vector x.
  IntMatrix coordinate_map;
  // (t + f) x N: row i is an ambient vector mapping to the i-th canonical basis vector.
  IntMatrix generators;

  [[nodiscard]] std::size_t generator_count() const noexcept {
    return torsion.size() + free_rank;
  }
  [[nodiscard]] std::size_t ambient_dimension() const noexcept {
    return coordinate_map.rows();
  }
  [[nodiscard]] bool is_trivial() const noexcept { return generator_count() == 0; }
  [[nodiscard]] bool is_finite() const noexcept { return free_rank == 0; }

  // nullopt for infinite groups.
  [[nodiscard]] std::optional<Integer> order() const {
    if (free_rank != 0) return std::nullopt;
    Integer o = 1;
    for (const auto& d : torsion) o *= d;
    return o;
  }

  [[nodiscard]] IntVector reduce(IntVector c) const {
    if (c.size() != generator_count()) {
      throw InvalidArgumentError("canonical coordinates do not match the presentation");
    }
    for (std::size_t i = 0; i < torsion.size(); ++i) c[i] = mod_floor(c[i], torsion[i]);
    return c;
  }

  [[nodiscard]] IntVector canonical(std::span<const Integer> ambient) const {
    return reduce(row_times(ambient, coordinate_map));
  }

  [[nodiscard]] std::string to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
      os << "Z";
      if (free_rank > 1) os << '^' << free_rank;
      first = false;
    }
    for (const auto& d : torsion) {
      os << (first ? "" : " + ") << "Z/" << d;
      first = false;
    }
    return os.str();
  }

  // "free: [..]; torsion: [..] (mod [..])"
  [[nodiscard]] std::string format_coordinates(std::span<const Integer> c) const {
    std::ostringstream os;
    os << "free: [";
    for (std::size_t i = 0; i < free_rank; ++i) os << (i ? "," : "") << c[torsion.size() + i];
    os << "]; torsion: [";
    for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << c[i];
    os << "] (mod [";
    for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << torsion[i];
    os << "])";
    return os.str();
  }
};

// Presentation of Z^n / rowspan(relations).
inline AbelianGroupPresentation quotient_by_rows(const IntMatrix& relations, std::size_t n) {
  if (relations.rows() > 0 && relations.cols() != n) {
    throw InvalidArgumentError("quotient_by_rows: relation width mismatch");
  }
  IntMatrix rel = relations.rows() > 0 ? relations : IntMatrix(0, n);
  const auto snf = smith_normal_form(
      rel, {.left = false, .left_inverse = false, .right = true, .right_inverse = true});
  std::vector<std::size_t> torsion_cols, free_cols;
  AbelianGroupPresentation g;
  for (std::size_t j = 0; j < n; ++j) {
    if (j < snf.rank) {
      if (!snf.D(j, j).is_one()) {
        torsion_cols.push_back(j);
        g.torsion.push_back(snf.D(j, j));
      }
    } else {
      free_cols.push_back(j);
    }
  }
  g.free_rank = free_cols.size();
  std::vector<std::size_t> cols = torsion_cols;
  cols.insert(cols.end(), free_cols.begin(), free_cols.end());
  g.coordinate_map = IntMatrix(n, cols.size());
  g.generators = IntMatrix(cols.size(), n);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      g.coordinate_map(i, k) = snf.V(i, cols[k]);
      g.generators(k, i) = snf.V_inverse(cols[k], i);
    }
  }
  return g;
}

// Z^rows / column-span(M).
inline AbelianGroupPresentation cokernel(const SparseIntMatrix& m) {
  return quotient_by_rows(m.transpose().to_dense(), m.rows());
}

// Smallest k >= 1 with k * c == 0; nullopt when c has a nonzero free coordinate.
inline std::optional<Integer> element_order(const AbelianGroupPresentation& g,
                                            std::span<const Integer> c) {
  if (c.size() != g.generator_count()) {
    throw InvalidArgumentError("element_order: coordinate shape mismatch");
  }
  for (std::size_t i = g.torsion.size(); i < c.size(); ++i) {
    if (!c[i].is_zero()) return std::nullopt;
  }
  Integer order = 1;
  for (std::size_t i = 0; i < g.torsion.size(); ++i) {
    const Integer& d = g.torsion[i];
    const Integer ci = mod_floor(c[i], d);
    if (ci.is_zero()) continue;
    order = lcm(order, d / gcd(d, ci));
  }
  return order;
}

struct QuotientPresentation {
  AbelianGroupPresentation group;  // ambient = canonical coordinates of the parent
  [[nodiscard]] IntVector project(std::span<const Integer> parent_coords) const {
    return group.canonical(parent_coords);
  }
};

// G / <gens>, where gens are given in G's canonical coordinates.
inline QuotientPresentation subgroup_quotient(const AbelianGroupPresentation& g,
                                              const std::vector<IntVector>& gens) {
  const std::size_t n = g.generator_count();
  IntMatrix rel(gens.size() + g.torsion.size(), n);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != n) throw InvalidArgumentError("subgroup_quotient: generator shape");
    for (std::size_t j = 0; j < n; ++j) rel(i, j) = gens[i][j];
  }
  for (std::size_t i = 0; i < g.torsion.size(); ++i) rel(gens.size() + i, i) = g.torsion[i];
  return {quotient_by_rows(rel, n)};
}

}  // namespace brauer::linalg
