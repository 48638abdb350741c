#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "brauer/cohomology/cochain.hpp"
#include "brauer/cohomology/cohomology_group.hpp"
#include "brauer/complexes/chain_complex.hpp"
#include "brauer/complexes/simplicial_set.hpp"
#include "brauer/errors.hpp"
#include "brauer/integer.hpp"

namespace brauer::ops {

using cohomology::Cochain;
using cohomology::CohomologyClass;
using cohomology::CohomologyOptions;
using cohomology::GroupPtr;
using cohomology::IntVector;
using complexes::ComplexPtr;
using complexes::SpacePtr;

inline constexpr std::uint32_t kDegenerate = std::numeric_limits<std::uint32_t>::max();

// n * gcd(2, n)
inline Integer epsilon(const Integer& n) { return n * gcd(Integer(2), n); }

// A space, its normalized chain complex and memoized cohomology groups.
class OperationContext {
 public:
  explicit OperationContext(SpacePtr space, CohomologyOptions opt = {})
      : space_(std::move(space)),
        complex_(complexes::normalized_chain_complex(space_)),
        options_(opt) {}

  OperationContext(const OperationContext&) = delete;
  OperationContext& operator=(const OperationContext&) = delete;

  [[nodiscard]] const SpacePtr& space() const noexcept { return space_; }
  [[nodiscard]] const ComplexPtr& complex() const noexcept { return complex_; }
  [[nodiscard]] std::size_t count(std::size_t d) const { return space_->count(d); }
  [[nodiscard]] int dimension() const { return space_->dimension(); }

  [[nodiscard]] GroupPtr group(std::size_t degree, const Integer& modulus) const {
    const auto key = std::make_pair(degree, modulus.to_string());
    {
      std::shared_lock lock(mutex_);
      if (auto it = groups_.find(key); it != groups_.end()) return it->second;
    }
    GroupPtr g = cohomology::cohomology_group(complex_, degree, modulus, options_);
    std::unique_lock lock(mutex_);
    return groups_.emplace(key, std::move(g)).first->second;
  }

  // For every nondegenerate n-simplex, the id of its restriction to the
  // vertex subset `vertices` of {0..n}, or kDegenerate.
  [[nodiscard]] const std::vector<std::uint32_t>& restriction(std::size_t n,
                                                              std::uint32_t vertices) const {
    const auto key = std::make_pair(n, vertices);
    {
      std::shared_lock lock(mutex_);
      if (auto it = restrictions_.find(key); it != restrictions_.end()) return *it->second;
    }
    complexes::VertexMap map;
    for (std::size_t t = 0; t <= n; ++t) {
      if ((vertices >> t) & 1u) map.push_back(static_cast<std::uint8_t>(t));
    }
    auto table = std::make_shared<std::vector<std::uint32_t>>(space_->count(n));
    for (std::size_t id = 0; id < table->size(); ++id) {
      const auto r =
          space_->compose(complexes::nondegenerate(n, static_cast<std::uint32_t>(id)), map);
      (*table)[id] = r.degenerate() ? kDegenerate : r.index;
    }
    std::unique_lock lock(mutex_);
    return *restrictions_.emplace(key, std::move(table)).first->second;
  }

  void check(const Cochain& c) const {
    if (c.values.size() != space_->count(c.degree)) {
      throw SpaceMismatchError("cochain of degree " + std::to_string(c.degree) + " has " +
                               std::to_string(c.values.size()) + " coefficients, space " +
                               space_->label() + " has " +
                               std::to_string(space_->count(c.degree)) + " simplices");
    }
  }

  // (dz)(s) = z(boundary of s), reduced by the cochain's modulus.
  [[nodiscard]] Cochain coboundary(const Cochain& z) const {
    check(z);
    return Cochain(z.degree + 1, z.modulus, complex_->boundary(z.degree + 1).apply_left(z.values));
  }

 private:
  SpacePtr space_;
  ComplexPtr complex_;
  CohomologyOptions options_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<std::size_t, std::string>, GroupPtr> groups_;
  mutable std::map<std::pair<std::size_t, std::uint32_t>,
                   std::shared_ptr<const std::vector<std::uint32_t>>>
      restrictions_;
};

namespace detail {

inline std::uint32_t interval(std::size_t first, std::size_t last) {
  return ((1u << (last + 1)) - 1) & ~((1u << first) - 1);
}

// Modulus of a product of coefficients: integral factors act on mod-m ones.
inline Integer product_modulus(const Cochain& x, const Cochain& y) {
  if (x.modulus.is_zero()) return y.modulus;
  if (y.modulus.is_zero() || y.modulus == x.modulus) return x.modulus;
  throw ModulusMismatchError("cup of cochains mod " + x.modulus.to_string() + " and mod " +
                             y.modulus.to_string());
}

}  // namespace detail

// Alexander-Whitney cup product: (x u y)(s) = x(s[0..p]) y(s[p..p+q]).
inline Cochain cup(const OperationContext& ctx, const Cochain& x, const Cochain& y) {
  ctx.check(x);
  ctx.check(y);
  const Integer m = detail::product_modulus(x, y);
  const std::size_t p = x.degree, q = y.degree, n = p + q;
  Cochain out = Cochain::zero(n, ctx.count(n), 0);
  if (out.values.empty() || x.is_zero() || y.is_zero()) return Cochain(n, m, std::move(out.values));
  const auto& front = ctx.restriction(n, detail::interval(0, p));
  const auto& back = ctx.restriction(n, detail::interval(p, n));
  for (std::size_t s = 0; s < out.values.size(); ++s) {
    if (front[s] == kDegenerate || back[s] == kDegenerate) continue;
    const Integer& a = x.values[front[s]];
    if (a.is_zero()) continue;
    const Integer& b = y.values[back[s]];
    if (!b.is_zero()) out.values[s] = a * b;
  }
  return Cochain(n, m, std::move(out.values));
}

// Steenrod cup-1 product of degree p + q - 1:
//   (x u_1 y)(s) = sum_{i=0}^{p-1} (-1)^{(p-i)(q+1)} x(s[0..i, i+q..n]) y(s[i..i+q]).
// d(x u_1 y) = (-1)^{p+q+1} (x u y - (-1)^{pq} y u x) + dx u_1 y + (-1)^p x u_1 dy.
inline Cochain cup1(const OperationContext& ctx, const Cochain& x, const Cochain& y) {
  ctx.check(x);
  ctx.check(y);
  const Integer m = detail::product_modulus(x, y);
  const std::size_t p = x.degree, q = y.degree;
  if (p + q == 0) throw InvalidArgumentError("cup-1 needs total degree at least 1");
  const std::size_t n = p + q - 1;
  IntVector out(ctx.count(n));
  if (out.empty() || x.is_zero() || y.is_zero() || p == 0 || q == 0) {
    return Cochain(n, m, std::move(out));
  }
  for (std::size_t i = 0; i + 1 <= p; ++i) {
    const std::uint32_t outer = detail::interval(0, i) | detail::interval(i + q, n);
    const auto& xs = ctx.restriction(n, outer);
    const auto& ys = ctx.restriction(n, detail::interval(i, i + q));
    const bool negative = ((p - i) * (q + 1)) % 2 == 1;
    for (std::size_t s = 0; s < out.size(); ++s) {
      if (xs[s] == kDegenerate || ys[s] == kDegenerate) continue;
      const Integer& a = x.values[xs[s]];
      if (a.is_zero()) continue;
      const Integer& b = y.values[ys[s]];
      if (b.is_zero()) continue;
      if (negative) {
        out[s].sub_mul(a, b);
      } else {
        out[s].add_mul(a, b);
      }
    }
  }
  return Cochain(n, m, std::move(out));
}

// d(lift z) / n for a mod-n cocycle z; the division fails exactly when z is
// not a cocycle.
inline Cochain bockstein_cochain(const OperationContext& ctx, const Cochain& z) {
  if (z.modulus.is_zero()) throw ModulusMismatchError("Bockstein needs a mod-n cochain");
  const Cochain dz = ctx.coboundary(z.lifted());
  IntVector out(dz.values.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if ((dz.values[i] % z.modulus).is_zero()) {
      out[i] = dz.values[i] / z.modulus;
    } else {
      throw NotACocycleError("Bockstein input is not a cocycle mod " + z.modulus.to_string());
    }
  }
  return Cochain(z.degree + 1, 0, std::move(out));
}

// z u z + z u_1 dz on an integral lift, mod 4m, for a mod-2m cocycle z of
// even degree. Flipping the sign of the u_1 term changes the cochain by
// 2 (z u_1 dz), which vanishes mod 4m because dz = 0 mod 2m.
inline Cochain pontryagin_cochain(const OperationContext& ctx, const Cochain& z) {
  if (z.modulus.is_zero() || !(z.modulus % 2).is_zero()) {
    throw ModulusMismatchError("Pontryagin square needs an even modulus");
  }
  if (z.degree % 2 != 0) throw InvalidArgumentError("Pontryagin square needs even degree");
  const Cochain lift = z.lifted();
  const Cochain dz = ctx.coboundary(lift);
  Cochain out = cup(ctx, lift, lift) + cup1(ctx, lift, dz);
  return out.reduced(2 * z.modulus);
}

// beta_n(z u z) for odd n, beta_{2n}(P_2 z) for even n.
inline Cochain q_cochain(const OperationContext& ctx, const Cochain& z) {
  const Integer& n = z.modulus;
  if (n.is_zero() || n.is_one()) throw ModulusMismatchError("Q needs a mod-n cochain, n >= 2");
  if ((n % 2).is_zero()) return bockstein_cochain(ctx, pontryagin_cochain(ctx, z));
  return bockstein_cochain(ctx, cup(ctx, z, z));
}

// Class-level operations. Representatives come from the group generators.

inline CohomologyClass class_of(const OperationContext& ctx, const Cochain& z) {
  return CohomologyClass::of(ctx.group(z.degree, z.modulus), z);
}

inline CohomologyClass cup(const OperationContext& ctx, const CohomologyClass& a,
                           const CohomologyClass& b) {
  return class_of(ctx, cup(ctx, a.representative(), b.representative()));
}

inline CohomologyClass bockstein(const OperationContext& ctx, const CohomologyClass& xi) {
  return class_of(ctx, bockstein_cochain(ctx, xi.representative()));
}

// Z -> Z/m by reduction, Z/n -> Z/m by inclusion (times m/n) when n | m, by
// reduction when m | n.
inline Cochain change_coefficients(const Cochain& z, const Integer& m) {
  if (m.sign() <= 0 || m.is_one()) throw InvalidArgumentError("target modulus must be >= 2");
  const Integer& n = z.modulus;
  if (n.is_zero() || (n % m).is_zero()) return z.reduced(m);
  if ((m % n).is_zero()) return ((m / n) * z.lifted()).reduced(m);
  throw ModulusMismatchError("no coefficient map from Z/" + n.to_string() + " to Z/" +
                             m.to_string());
}

inline CohomologyClass reduce_coeffs(const OperationContext& ctx, const CohomologyClass& c,
                                     const Integer& m) {
  return class_of(ctx, change_coefficients(c.representative(), m));
}

inline CohomologyClass pontryagin_square(const OperationContext& ctx, const CohomologyClass& xi) {
  return class_of(ctx, pontryagin_cochain(ctx, xi.representative()));
}

inline CohomologyClass q_class(const OperationContext& ctx, const CohomologyClass& xi) {
  if (xi.group->degree() != 2) throw InvalidArgumentError("Q is defined on degree-2 classes");
  return class_of(ctx, q_cochain(ctx, xi.representative()));
}

}  // namespace brauer::ops
