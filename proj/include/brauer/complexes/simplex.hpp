#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "brauer/errors.hpp"

namespace brauer::complexes {

// Vertices per simplex are capped so degeneracy masks fit in 16 bits.
inline constexpr std::size_t kMaxDimension = 15;

using DegeneracyMask = std::uint16_t;

// A possibly degenerate simplex s_{j_1} ... s_{j_k} z with j_1 > ... > j_k and
// z nondegenerate. The mask holds the set {j_1, ..., j_k}; equivalently the
// positions t where the collapsing surjection [dim] -> [base_dim] has
// sigma(t) == sigma(t + 1).
struct SimplexRef {
  std::uint32_t index = 0;
  DegeneracyMask degeneracy = 0;
  std::uint8_t base_dim = 0;

  [[nodiscard]] std::size_t dim() const noexcept {
    return base_dim + static_cast<std::size_t>(std::popcount(degeneracy));
  }
  [[nodiscard]] bool degenerate() const noexcept { return degeneracy != 0; }

  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
};

inline SimplexRef nondegenerate(std::size_t dim, std::uint32_t index) {
  return {index, 0, static_cast<std::uint8_t>(dim)};
}

// sigma_J(v) for the surjection encoded by mask J.
inline std::size_t collapse(DegeneracyMask j, std::size_t v) noexcept {
  return v - static_cast<std::size_t>(std::popcount(static_cast<unsigned>(j & ((1u << v) - 1))));
}

// Mask of tau where sigma_M = tau o sigma_C and C is a subset of M.
inline DegeneracyMask quotient_mask(DegeneracyMask m, DegeneracyMask c) noexcept {
  DegeneracyMask out = 0;
  for (unsigned rest = static_cast<unsigned>(m & ~c); rest != 0; rest &= rest - 1) {
    const auto t = static_cast<std::size_t>(std::countr_zero(rest));
    out |= static_cast<DegeneracyMask>(1u << collapse(c, t));
  }
  return out;
}

// Comma-separated decreasing indices, e.g. "3,1"; empty for no degeneracy.
inline std::string degeneracy_word(DegeneracyMask m) {
  std::string out;
  for (int t = 15; t >= 0; --t) {
    if ((m >> t) & 1u) {
      if (!out.empty()) out += ',';
      out += std::to_string(t);
    }
  }
  return out;
}

inline DegeneracyMask parse_degeneracy_word(std::string_view w) {
  DegeneracyMask m = 0;
  int previous = 16;
  std::size_t pos = 0;
  while (pos < w.size()) {
    std::size_t end = w.find(',', pos);
    if (end == std::string_view::npos) end = w.size();
    const std::string_view tok = w.substr(pos, end - pos);
    if (tok.empty() || tok.size() > 2) throw ParseError("bad degeneracy word");
    int v = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') throw ParseError("bad degeneracy word");
      v = v * 10 + (ch - '0');
    }
    if (v >= previous || v >= static_cast<int>(kMaxDimension)) {
      throw ParseError("degeneracy word must be strictly decreasing and in range");
    }
    m |= static_cast<DegeneracyMask>(1u << v);
    previous = v;
    pos = end + 1;
    if (end == w.size()) break;
  }
  return m;
}

inline std::string to_string(const SimplexRef& r) {
  return std::to_string(r.index) + ":" + degeneracy_word(r.degeneracy);
}

// Monotone map [k] -> [n] given by its values.
using VertexMap = std::vector<std::uint8_t>;

// delta^i : [n-1] -> [n], skipping i.
inline VertexMap coface(std::size_t n, std::size_t i) {
  VertexMap m(n);
  for (std::size_t t = 0; t < n; ++t) m[t] = static_cast<std::uint8_t>(t + (t >= i ? 1 : 0));
  return m;
}

// Inclusion of the vertices first..last.
inline VertexMap vertex_range(std::size_t first, std::size_t last) {
  VertexMap m;
  for (std::size_t t = first; t <= last; ++t) m.push_back(static_cast<std::uint8_t>(t));
  return m;
}

}  // namespace brauer::complexes
