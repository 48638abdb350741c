#pragma once

// Reference computations that share no algorithmic code with the library:
// boundary matrices rebuilt from face lists, a textbook Smith form over
// boost::multiprecision::cpp_int, sparse elimination over F_p, and cup
// products through iterated face maps.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "brauer/complexes/simplicial_set.hpp"

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using DenseMatrix = std::vector<std::vector<Big>>;
using brauer::complexes::SimplexRef;
using brauer::complexes::SimplicialSet;

// ---------------------------------------------------------------------------
// chains

// Column j: the boundary of the j-th nondegenerate n-simplex as (row, coeff).
using SparseColumns = std::vector<std::vector<std::pair<std::size_t, long>>>;

inline SparseColumns boundary_columns(const SimplicialSet& s, std::size_t n) {
  SparseColumns cols(s.count(n));
  if (n == 0) return cols;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::map<std::size_t, long> acc;
    const auto faces = s.faces(n, j);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (faces[i].degenerate()) continue;
      acc[faces[i].index] += (i % 2 == 0) ? 1 : -1;
    }
    for (const auto& [r, v] : acc) {
      if (v != 0) cols[j].emplace_back(r, v);
    }
  }
  return cols;
}

inline DenseMatrix boundary_dense(const SimplicialSet& s, std::size_t n) {
  const std::size_t rows = n == 0 ? 0 : s.count(n - 1);
  DenseMatrix m(rows, std::vector<Big>(s.count(n)));
  const auto cols = boundary_columns(s, n);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [r, v] : cols[j]) m[r][j] = v;
  }
  return m;
}

// (dz)(sigma) = sum_i (-1)^i z(d_i sigma) over integers.
inline std::vector<Big> coboundary(const SimplicialSet& s, std::size_t k,
                                   const std::vector<Big>& z) {
  const auto cols = boundary_columns(s, k + 1);
  std::vector<Big> out(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [r, v] : cols[j]) out[j] += v * z[r];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Smith form: take a smallest entry as pivot and clear its row and column,
// by exact subtraction when the pivot divides and by a Bezout step (which
// shrinks the pivot) otherwise; repeat until the pivot divides the rest.

inline std::vector<Big> invariant_factors(DenseMatrix a) {
  const std::size_t R = a.size(), C = R ? a[0].size() : 0;
  std::vector<Big> out;
  auto absb = [](const Big& x) { return x < 0 ? Big(-x) : x; };
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    // pivot: an entry of least absolute value in the trailing block
    std::size_t pi = R, pj = C;
    Big best = 0;
    for (std::size_t i = t; i < R; ++i) {
      for (std::size_t j = t; j < C; ++j) {
        if (a[i][j] == 0) continue;
        const Big v = absb(a[i][j]);
        if (pi == R || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
      if (pi != R && best == 1) break;
    }
    if (pi == R) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);
    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a[i][t] == 0) continue;
        if (a[i][t] % a[t][t] == 0) {
          const Big k = a[i][t] / a[t][t];
          for (std::size_t j = t; j < C; ++j) a[i][j] -= k * a[t][j];
          continue;
        }
        // Bezout combination of rows t and i
        Big x = a[t][t], y = a[i][t];
        Big s0 = 1, s1 = 0, t0 = 0, t1 = 1, r0 = x, r1 = y;
        while (r1 != 0) {
          Big q = r0 / r1;
          Big tmp = r0 - q * r1; r0 = r1; r1 = tmp;
          tmp = s0 - q * s1; s0 = s1; s1 = tmp;
          tmp = t0 - q * t1; t0 = t1; t1 = tmp;
        }
        const Big g = r0, u = x / g, v = y / g;
        for (std::size_t j = t; j < C; ++j) {
          const Big p = a[t][j], q = a[i][j];
          a[t][j] = s0 * p + t0 * q;
          a[i][j] = -v * p + u * q;
        }
        changed = true;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a[t][j] == 0) continue;
        if (a[t][j] % a[t][t] == 0) {
          const Big k = a[t][j] / a[t][t];
          for (std::size_t i = t; i < R; ++i) a[i][j] -= k * a[i][t];
          continue;
        }
        Big x = a[t][t], y = a[t][j];
        Big s0 = 1, s1 = 0, t0 = 0, t1 = 1, r0 = x, r1 = y;
        while (r1 != 0) {
          Big q = r0 / r1;
          Big tmp = r0 - q * r1; r0 = r1; r1 = tmp;
          tmp = s0 - q * s1; s0 = s1; s1 = tmp;
          tmp = t0 - q * t1; t0 = t1; t1 = tmp;
        }
        const Big g = r0, u = x / g, v = y / g;
        for (std::size_t i = t; i < R; ++i) {
          const Big p = a[i][t], q = a[i][j];
          a[i][t] = s0 * p + t0 * q;
          a[i][j] = -v * p + u * q;
        }
        changed = true;
      }
      if (changed) continue;
      // divisibility: add a row holding a non-multiple into row t
      bool folded = false;
      for (std::size_t i = t + 1; i < R && !folded; ++i) {
        for (std::size_t j = t + 1; j < C; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < C; ++k) a[t][k] += a[i][k];
            folded = true;
            break;
          }
        }
      }
      if (!folded) break;
    }
    out.push_back(absb(a[t][t]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// F_p elimination on sparse columns

class ModpReducer {
 public:
  explicit ModpReducer(long p, std::size_t rows) : p_(p), pivot_of_(rows, -1) {}

  using Vec = std::map<std::size_t, long>;

  // Reduce v against the stored columns; returns the remainder.
  Vec reduce(Vec v) const {
    while (!v.empty()) {
      const auto low = std::prev(v.end());
      const long owner = pivot_of_[low->first];
      if (owner < 0) break;
      const Vec& c = columns_[static_cast<std::size_t>(owner)];
      const long f = mul(low->second, inverse(c.rbegin()->second));
      for (const auto& [r, x] : c) {
        long& e = v[r];
        e = norm(e - mul(f, x));
        if (e == 0) v.erase(r);
      }
    }
    return v;
  }

  // Adds a column; true when it increased the rank.
  bool add(Vec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    pivot_of_[v.rbegin()->first] = static_cast<long>(columns_.size());
    columns_.push_back(std::move(v));
    return true;
  }

  [[nodiscard]] std::size_t rank() const { return columns_.size(); }
  [[nodiscard]] bool in_span(const Vec& v) const { return reduce(v).empty(); }

  Vec make(const std::vector<std::pair<std::size_t, long>>& entries) const {
    Vec v;
    for (const auto& [r, x] : entries) {
      const long e = norm(x);
      if (e != 0) v[r] = norm(v[r] + e);
      if (v.count(r) && v[r] == 0) v.erase(r);
    }
    return v;
  }

 private:
  [[nodiscard]] long norm(long x) const { return ((x % p_) + p_) % p_; }
  [[nodiscard]] long mul(long a, long b) const {
    return static_cast<long>((static_cast<__int128>(a) * b) % p_);
  }
  [[nodiscard]] long inverse(long a) const {
    long r = 1, e = p_ - 2, b = a;
    while (e > 0) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  long p_;
  std::vector<long> pivot_of_;
  std::vector<Vec> columns_;
};

inline std::size_t rank_mod_p(const SparseColumns& cols, std::size_t rows, long p) {
  ModpReducer red(p, rows);
  for (const auto& c : cols) red.add(red.make(c));
  return red.rank();
}

// Columns of the coboundary C^k -> C^{k+1}, indexed by k-simplices.
inline SparseColumns coboundary_columns(const SimplicialSet& s, std::size_t k) {
  const auto bd = boundary_columns(s, k + 1);
  SparseColumns cols(s.count(k));
  for (std::size_t sigma = 0; sigma < bd.size(); ++sigma) {
    for (const auto& [tau, v] : bd[sigma]) cols[tau].emplace_back(sigma, v);
  }
  return cols;
}

// True when z mod p is a coboundary mod p.
inline bool is_coboundary_mod_p(const SimplicialSet& s, std::size_t degree,
                                const std::vector<Big>& z, long p) {
  ModpReducer red(p, s.count(degree));
  if (degree > 0) {
    for (const auto& c : coboundary_columns(s, degree - 1)) red.add(red.make(c));
  }
  std::vector<std::pair<std::size_t, long>> entries;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Big r = ((z[i] % p) + p) % p;
    if (r != 0) entries.emplace_back(i, static_cast<long>(r));
  }
  return red.in_span(red.make(entries));
}

// ---------------------------------------------------------------------------
// integral cohomology from homology: H^k = Z^{b_k} + torsion(H_{k-1})

struct Invariants {
  std::size_t free_rank = 0;
  std::vector<Big> torsion;

  [[nodiscard]] std::string to_string() const {
    if (free_rank == 0 && torsion.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
      os << "Z";
      if (free_rank > 1) os << '^' << free_rank;
      first = false;
    }
    for (const auto& t : torsion) {
      os << (first ? "" : " + ") << "Z/" << t;
      first = false;
    }
    return os.str();
  }
};

inline constexpr long kLargePrime = 2147483629;

// Ranks over Q are taken mod a large prime; the result is a lower bound that
// is exact unless the prime divides a minor.
inline Invariants integral_cohomology(const SimplicialSet& s, std::size_t k) {
  Invariants out;
  const std::size_t ck = s.count(k);
  const std::size_t rank_k =
      k == 0 ? 0 : rank_mod_p(boundary_columns(s, k), s.count(k - 1), kLargePrime);
  const std::size_t rank_k1 = rank_mod_p(boundary_columns(s, k + 1), ck, kLargePrime);
  out.free_rank = ck - rank_k - rank_k1;
  if (k > 0) {
    std::vector<Big> inv = invariant_factors(boundary_dense(s, k));
    for (auto& d : inv) {
      if (d > 1) out.torsion.push_back(d);
    }
    std::sort(out.torsion.begin(), out.torsion.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// cup product through iterated faces

inline std::optional<std::uint32_t> front_face(const SimplicialSet& s, std::size_t n,
                                               std::uint32_t id, std::size_t p) {
  SimplexRef r = brauer::complexes::nondegenerate(n, id);
  for (std::size_t top = n; top > p; --top) r = s.face(r, top);
  if (r.degenerate()) return std::nullopt;
  return r.index;
}

inline std::optional<std::uint32_t> back_face(const SimplicialSet& s, std::size_t n,
                                              std::uint32_t id, std::size_t p) {
  SimplexRef r = brauer::complexes::nondegenerate(n, id);
  for (std::size_t i = 0; i < p; ++i) r = s.face(r, 0);
  if (r.degenerate()) return std::nullopt;
  return r.index;
}

inline std::vector<Big> cup(const SimplicialSet& s, std::size_t p, const std::vector<Big>& x,
                            std::size_t q, const std::vector<Big>& y) {
  const std::size_t n = p + q;
  std::vector<Big> out(s.count(n));
  for (std::size_t id = 0; id < out.size(); ++id) {
    const auto f = front_face(s, n, static_cast<std::uint32_t>(id), p);
    const auto b = back_face(s, n, static_cast<std::uint32_t>(id), p);
    if (f && b) out[id] = x[*f] * y[*b];
  }
  return out;
}

}  // namespace oracle
