#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "brauer/cohomology/cochain.hpp"
#include "brauer/cohomology/cohomology_group.hpp"
#include "brauer/errors.hpp"
#include "brauer/integer.hpp"
#include "brauer/linalg/abelian_group.hpp"
#include "brauer/linalg/smith.hpp"
#include "brauer/ops/operations.hpp"

namespace brauer::period_index {

using cohomology::Cochain;
using cohomology::CohomologyClass;
using linalg::IntVector;
using ops::OperationContext;

inline constexpr std::size_t kDefaultCosetCap = 4096;
inline constexpr int kExactDimensionBound = 6;

namespace detail {

inline void require_integral_h3(const OperationContext& ctx, const CohomologyClass& alpha) {
  if (alpha.group->degree() != 3 || !alpha.group->modulus().is_zero()) {
    throw InvalidArgumentError("alpha must be a class in H^3(X; Z)");
  }
  if (alpha.group->complex() != ctx.complex()) {
    throw SpaceMismatchError("alpha belongs to a different space");
  }
}

inline std::string format_vector(std::span<const Integer> v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

}  // namespace detail

// Order of a torsion class in H^3(X; Z).
inline Integer period(const OperationContext& ctx, const CohomologyClass& alpha) {
  detail::require_integral_h3(ctx, alpha);
  auto ord = cohomology::torsion_class_order(alpha);
  if (!ord) throw NotTorsionError("alpha " + alpha.to_string() + " has infinite order");
  return *ord;
}

// A mod-n 2-cocycle xi with beta_n(xi) = alpha, from an integral solution of
// db = n a.
inline Cochain lift_to_mod_n(const OperationContext& ctx, const CohomologyClass& alpha,
                             const Integer& n) {
  if (n < 2) throw InvalidArgumentError("lift modulus must be >= 2");
  const Integer per = period(ctx, alpha);
  if (!(n % per).is_zero()) {
    throw NoLiftError("alpha has order " + per.to_string() + ", which does not divide " +
                      n.to_string());
  }
  const Cochain a = alpha.representative();
  IntVector rhs(a.values.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = n * a.values[i];
  const auto solved = linalg::solve_linear(ctx.complex()->boundary(3).transpose(), rhs, 0);
  if (!solved.solvable()) {
    throw InternalConsistencyError("no integral solution of db = n a for a class of order " +
                                   per.to_string());
  }
  Cochain xi(2, n, *solved.solution);
  const auto back = ops::bockstein(ctx, ops::class_of(ctx, xi));
  if (!(back == alpha)) throw InternalConsistencyError("Bockstein of the lift differs from alpha");
  return xi;
}

// One representative for every class xi_0 + rho_n(c), c in H^2(X; Z).
inline std::vector<Cochain> all_lifts(const OperationContext& ctx, const CohomologyClass& alpha,
                                      const Integer& n, std::size_t cap = kDefaultCosetCap) {
  const Cochain base = lift_to_mod_n(ctx, alpha, n);
  const auto h2 = ctx.group(2, 0);
  const auto& pres = h2->presentation();
  std::vector<Integer> ranges;
  Integer total = 1;
  for (std::size_t i = 0; i < pres.generator_count(); ++i) {
    ranges.push_back(i < pres.torsion.size() ? gcd(pres.torsion[i], n) : n);
    total *= ranges.back();
  }
  if (total > Integer(static_cast<long>(cap))) {
    throw CosetTooLargeError("lift coset has up to " + total.to_string() +
                             " members, cap is " + std::to_string(cap));
  }
  std::vector<Cochain> reduced;
  for (const auto& g : h2->generators()) reduced.push_back(g.reduced(n));

  const auto target = ctx.group(2, n);
  std::set<std::string> seen;
  std::vector<Cochain> lifts;
  std::vector<Integer> c(ranges.size());
  while (true) {
    Cochain xi = base;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].is_zero()) xi += c[i] * reduced[i];
    }
    if (seen.insert(detail::format_vector(target->express(xi))).second) {
      lifts.push_back(std::move(xi));
    }
    std::size_t i = 0;
    for (; i < c.size(); ++i) {
      c[i] += 1;
      if (c[i] < ranges[i]) break;
      c[i] = 0;
    }
    if (i == c.size()) break;
  }
  return lifts;
}

struct QTilde {
  CohomologyClass q;                    // Q(xi) in H^5(X; Z)
  linalg::QuotientPresentation quotient;  // H^5(X; Z) / (alpha u H^2(X; Z))
  IntVector coords;                     // image of Q(xi) in the quotient
  Integer order;
};

inline QTilde q_tilde(const OperationContext& ctx, const CohomologyClass& alpha,
                      const Cochain& xi) {
  detail::require_integral_h3(ctx, alpha);
  const auto h5 = ctx.group(5, 0);
  CohomologyClass q = ops::class_of(ctx, ops::q_cochain(ctx, xi));
  const Cochain a = alpha.representative();
  std::vector<CohomologyClass> span;
  for (const auto& g : ctx.group(2, 0)->generators()) {
    span.push_back(ops::class_of(ctx, ops::cup(ctx, a, g)));
  }
  auto quotient = cohomology::subgroup_quotient(h5, span);
  IntVector coords = quotient.project(q.coords);
  auto ord = linalg::element_order(quotient.group, coords);
  if (!ord) throw InternalConsistencyError("Q~ has infinite order");
  if (!(ops::epsilon(xi.modulus) % *ord).is_zero()) {
    throw InternalConsistencyError("order " + ord->to_string() + " of Q~ does not divide " +
                                   ops::epsilon(xi.modulus).to_string());
  }
  return {std::move(q), std::move(quotient), std::move(coords), std::move(*ord)};
}

struct LiftIndependence {
  bool independent = true;
  std::size_t lifts_checked = 0;
  std::optional<std::pair<Cochain, Cochain>> witness;
};

inline LiftIndependence verify_lift_independence(const OperationContext& ctx,
                                                 const CohomologyClass& alpha, const Integer& n,
                                                 std::size_t cap = kDefaultCosetCap) {
  const auto lifts = all_lifts(ctx, alpha, n, cap);
  LiftIndependence result;
  IntVector first;
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    auto qt = q_tilde(ctx, alpha, lifts[i]);
    ++result.lifts_checked;
    if (i == 0) {
      first = std::move(qt.coords);
    } else if (qt.coords != first) {
      result.independent = false;
      result.witness.emplace(lifts[0], lifts[i]);
      break;
    }
  }
  return result;
}

struct PeriodIndexReport {
  std::string space;
  IntVector alpha;
  Integer per = 1;
  Cochain lift;
  Integer ord_q = 1;
  Integer index = 1;
  int dimension = 0;
  bool exact = false;
  bool epsilon_check = false;
  std::optional<bool> lift_independence;

  [[nodiscard]] std::string record() const {
    std::ostringstream os;
    os << "space=" << space << " alpha=" << detail::format_vector(alpha) << " per=" << per
       << " ordQ=" << ord_q << " index=" << index << " exact=" << (exact ? "true" : "false")
       << " epsilonCheck=" << (epsilon_check ? "true" : "false") << " liftIndependence="
       << (lift_independence ? (*lift_independence ? "true" : "false") : "NotChecked");
    return os.str();
  }

  [[nodiscard]] std::string table() const {
    std::ostringstream os;
    os << "space           " << space << '\n'
       << "model dimension " << dimension << '\n'
       << "alpha           " << detail::format_vector(alpha) << '\n'
       << "period          " << per << '\n'
       << "ord(Q~)         " << ord_q << '\n'
       << "index           " << index
       << (exact ? "  (= topological index)" : "  (divides topological index)") << '\n'
       << "ord(Q~) | eps   " << (epsilon_check ? "yes" : "no") << '\n'
       << "note            dimension is that of the simplicial model, not homotopy dimension\n";
    return os.str();
  }
};

inline PeriodIndexReport index_bound(const OperationContext& ctx, const CohomologyClass& alpha) {
  PeriodIndexReport r;
  r.space = ctx.space()->label();
  r.alpha = alpha.coords;
  r.per = period(ctx, alpha);
  r.dimension = ctx.dimension();
  r.exact = r.dimension <= kExactDimensionBound;
  if (r.per.is_one()) {
    r.lift = Cochain::zero(2, ctx.count(2), 1);
  } else {
    r.lift = lift_to_mod_n(ctx, alpha, r.per);
    r.ord_q = q_tilde(ctx, alpha, r.lift).order;
  }
  r.index = r.per * r.ord_q;
  r.epsilon_check = (ops::epsilon(r.per) % r.ord_q).is_zero();
  return r;
}

}  // namespace brauer::period_index
