#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "brauer/cohomology/cochain.hpp"
#include "brauer/cohomology/cohomology_group.hpp"
#include "brauer/complexes/chain_complex.hpp"
#include "brauer/complexes/generators.hpp"
#include "brauer/complexes/sset_io.hpp"
#include "brauer/errors.hpp"
#include "brauer/integer.hpp"
#include "brauer/linalg/smith.hpp"
#include "brauer/ops/operations.hpp"
#include "brauer/period_index/period_index.hpp"

namespace brauer::verify {

using cohomology::Cochain;
using cohomology::CohomologyClass;
using linalg::IntMatrix;
using linalg::IntVector;
using ops::OperationContext;
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t random_matrices = 1000;
  std::size_t random_inputs = 100;
};

struct CheckResult {
  std::string scope;
  std::string name;
  bool passed = true;
  std::string detail;
  std::uint64_t seed = 0;
};

inline std::string format(const CheckResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.scope << '/' << r.name << " seed=" << r.seed;
  if (!r.detail.empty()) os << ' ' << r.detail;
  return os.str();
}

inline const std::vector<std::string>& scopes() {
  static const std::vector<std::string> s = {"exact_linalg", "complexes", "cohomology",
                                             "cochain_ops", "period_index"};
  return s;
}

// ---------------------------------------------------------------------------
// random inputs

inline Integer uniform(Rng& rng, long lo, long hi) {
  return Integer(std::uniform_int_distribution<long>(lo, hi)(rng));
}

inline Cochain random_cochain(const OperationContext& ctx, std::size_t degree,
                              const Integer& modulus, Rng& rng, long range = 4) {
  IntVector v(ctx.count(degree));
  for (auto& x : v) x = uniform(rng, -range, range);
  return Cochain(degree, modulus, std::move(v));
}

inline CohomologyClass random_class(const cohomology::GroupPtr& g, Rng& rng) {
  IntVector c(g->presentation().generator_count());
  for (auto& x : c) x = uniform(rng, -6, 6);
  return {g, g->presentation().reduce(std::move(c))};
}

// A generator combination plus a random coboundary.
inline Cochain random_cocycle(const OperationContext& ctx, std::size_t degree,
                              const Integer& modulus, Rng& rng) {
  Cochain z = random_class(ctx.group(degree, modulus), rng).representative();
  if (degree > 0) z += ctx.coboundary(random_cochain(ctx, degree - 1, modulus, rng, 2));
  return z;
}

inline IntMatrix random_matrix(Rng& rng) {
  std::uniform_int_distribution<int> dim(1, 7);
  IntMatrix m(dim(rng), dim(rng));
  const int style = std::uniform_int_distribution<int>(0, 3)(rng);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (style == 1 && uniform(rng, 0, 2) != 0) continue;
      m(r, c) = uniform(rng, -12, 12);
      if (style == 2) m(r, c) *= 6;
      if (style == 3 && uniform(rng, 0, 4) == 0) {
        for (int i = 0; i < 45; ++i) m(r, c) *= 3;
      }
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// bookkeeping

class Recorder {
 public:
  Recorder(std::string scope, std::uint64_t seed, std::vector<CheckResult>& out)
      : scope_(std::move(scope)), seed_(seed), out_(out) {}

  // Runs body; a thrown brauer::Error counts as a failure with its message.
  void check(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{scope_, name, true, {}, seed_};
    try {
      r.detail = body();
      r.passed = r.detail.rfind("mismatch", 0) != 0;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::string scope_;
  std::uint64_t seed_;
  std::vector<CheckResult>& out_;
};

inline std::string mismatch(const std::string& what) { return "mismatch: " + what; }

inline Rng rng_for(std::uint64_t seed, std::string_view tag) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(std::hash<std::string_view>{}(tag))};
  return Rng(seq);
}

// ---------------------------------------------------------------------------
// exact_linalg

inline void run_exact_linalg(const SuiteOptions& opt, std::vector<CheckResult>& out) {
  Recorder rec("exact_linalg", opt.seed, out);
  rec.check("smith_invariants[" + std::to_string(opt.random_matrices) + " matrices]", [&] {
    Rng rng = rng_for(opt.seed, "smith");
    for (std::size_t t = 0; t < opt.random_matrices; ++t) {
      const IntMatrix m = random_matrix(rng);
      const auto s = linalg::smith_normal_form(m, {true, true, true, true});
      const std::string where = " on matrix #" + std::to_string(t) + "\n" + m.to_string();
      if (!(s.U * m * s.V == s.D)) return mismatch("U M V != D" + where);
      if (!(s.U * s.U_inverse == IntMatrix::identity(m.rows()))) return mismatch("U not unimodular" + where);
      if (!(s.V * s.V_inverse == IntMatrix::identity(m.cols()))) return mismatch("V not unimodular" + where);
      for (std::size_t r = 0; r < s.D.rows(); ++r) {
        for (std::size_t c = 0; c < s.D.cols(); ++c) {
          if (r != c && !s.D(r, c).is_zero()) return mismatch("D not diagonal" + where);
        }
      }
      const auto d = s.diagonal();
      std::size_t rank = 0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i].sign() < 0) return mismatch("negative invariant factor" + where);
        if (!d[i].is_zero()) ++rank;
        if (i + 1 < d.size() && !d[i].is_zero() && !(d[i + 1] % d[i]).is_zero()) {
          return mismatch("divisibility chain broken" + where);
        }
        if (i + 1 < d.size() && d[i].is_zero() && !d[i + 1].is_zero()) {
          return mismatch("zero before nonzero invariant" + where);
        }
      }
      if (rank != s.rank) return mismatch("rank field wrong" + where);
    }
    return std::string();
  });
  rec.check("solve_linear_certificates", [&] {
    Rng rng = rng_for(opt.seed, "solve");
    for (std::size_t t = 0; t < opt.random_matrices / 4; ++t) {
      const IntMatrix m = random_matrix(rng);
      IntVector b(m.rows());
      for (auto& x : b) x = uniform(rng, -9, 9);
      const auto res = linalg::solve_linear(linalg::SparseIntMatrix::from_dense(m), b, 0);
      if (res.solution) {
        if (linalg::times_col(m, *res.solution) != b) return mismatch("solution does not solve");
      } else {
        // y M = 0 mod k while y b != 0 mod k
        const auto& ob = *res.obstruction;
        const IntVector ym = linalg::row_times(ob.certificate, m);
        for (const auto& v : ym) {
          if (!mod_floor(v, ob.obstruction_modulus).is_zero()) return mismatch("bad certificate");
        }
        Integer yb = 0;
        for (std::size_t i = 0; i < b.size(); ++i) yb += ob.certificate[i] * b[i];
        if (mod_floor(yb, ob.obstruction_modulus).is_zero()) return mismatch("certificate does not obstruct");
      }
    }
    return std::string();
  });
}

// ---------------------------------------------------------------------------
// shipped spaces

inline std::vector<complexes::SpacePtr> small_spaces() {
  using namespace complexes;
  return {point(),          two_points(),           minimal_circle(),       triangle_circle(),
          moore_polygon(2), moore_polygon(3),       suspension(moore_polygon(2)),
          suspension(moore_polygon(3)),             torus(),
          product(triangle_circle(), triangle_circle()), wbar_cyclic(2, 5), em_space_2(3, 4)};
}

inline void run_complexes(const SuiteOptions& opt, std::vector<CheckResult>& out) {
  Recorder rec("complexes", opt.seed, out);
  auto spaces = small_spaces();
  spaces.push_back(complexes::em_space_2(2, 6));
  for (const auto& s : spaces) {
    rec.check("simplicial_identities[" + s->label() + "]", [&] {
      if (auto err = s->validate()) return mismatch(*err);
      return std::string();
    });
    rec.check("boundary_squared_zero[" + s->label() + "]", [&] {
      const auto c = complexes::normalized_chain_complex(s);
      for (int d = 2; d <= c->top_dimension(); ++d) {
        if (!(c->boundary(d - 1) * c->boundary(d)).is_zero()) {
          return mismatch("d d != 0 in degree " + std::to_string(d));
        }
      }
      return std::string();
    });
    rec.check("sset_round_trip[" + s->label() + "]", [&] {
      std::ostringstream a, b;
      complexes::write_sset(a, *s);
      std::istringstream in(a.str());
      complexes::write_sset(b, *complexes::read_sset(in));
      return a.str() == b.str() ? std::string() : mismatch("re-serialization differs");
    });
  }
}

// ---------------------------------------------------------------------------
// cohomology

inline void run_cohomology(const SuiteOptions& opt, std::vector<CheckResult>& out) {
  Recorder rec("cohomology", opt.seed, out);
  for (const auto& s : small_spaces()) {
    const auto c = complexes::normalized_chain_complex(s);
    const auto top = static_cast<std::size_t>(std::max(c->top_dimension(), 0));
    rec.check("generators_and_coordinates[" + s->label() + "]", [&] {
      for (const long m : {0L, 2L, 3L}) {
        for (std::size_t k = 0; k <= top; ++k) {
          const auto g = cohomology::cohomology_group(c, k, m);
          for (std::size_t i = 0; i < g->generators().size(); ++i) {
            const auto e = g->express(g->generators()[i]);
            for (std::size_t j = 0; j < e.size(); ++j) {
              if (e[j] != Integer(i == j ? 1 : 0)) {
                return mismatch("generator " + std::to_string(i) + " of H^" +
                                std::to_string(k) + " mod " + std::to_string(m));
              }
            }
          }
        }
      }
      return std::string();
    });
    // |H^k(X; Z/m)| = m^f_k * prod gcd(t, m) over torsion of H^k and H^{k+1}.
    rec.check("universal_coefficients[" + s->label() + "]", [&] {
      for (const long m : {2L, 3L, 4L}) {
        for (std::size_t k = 0; k <= top; ++k) {
          const auto gk = cohomology::cohomology_group(c, k, 0);
          const auto gk1 = cohomology::cohomology_group(c, k + 1, 0);
          const auto& hk = gk->presentation();
          const auto& hk1 = gk1->presentation();
          Integer expect = 1;
          for (std::size_t i = 0; i < hk.free_rank; ++i) expect *= m;
          for (const auto& t : hk.torsion) expect *= gcd(t, Integer(m));
          for (const auto& t : hk1.torsion) expect *= gcd(t, Integer(m));
          const auto got = cohomology::cohomology_group(c, k, m)->presentation().order();
          if (!got || *got != expect) {
            return mismatch("H^" + std::to_string(k) + " mod " + std::to_string(m));
          }
        }
      }
      return std::string();
    });
    if (c->reduction()) {
      rec.check("reduction_matches_direct[" + s->label() + "]", [&] {
        for (std::size_t k = 0; k <= top; ++k) {
          for (const long m : {0L, 2L}) {
            const auto a = cohomology::cohomology_group(c, k, m, {true, nullptr});
            const auto b = cohomology::cohomology_group(c, k, m, {false, nullptr});
            if (a->to_string() != b->to_string()) {
              return mismatch("H^" + std::to_string(k) + ": " + a->to_string() + " vs " +
                              b->to_string());
            }
          }
        }
        return std::string();
      });
    }
  }
}

// ---------------------------------------------------------------------------
// cochain_ops

inline Integer sign(std::size_t e) { return e % 2 ? Integer(-1) : Integer(1); }

inline void run_cochain_ops(const SuiteOptions& opt, std::vector<CheckResult>& out) {
  Recorder rec("cochain_ops", opt.seed, out);
  using complexes::SpacePtr;
  const std::vector<SpacePtr> spaces = {
      complexes::torus(), complexes::suspension(complexes::moore_polygon(3)),
      complexes::product(complexes::moore_polygon(2), complexes::moore_polygon(2)),
      complexes::em_space_2(2, 6)};
  for (const auto& s : spaces) {
    OperationContext ctx(s);
    const std::size_t dim = static_cast<std::size_t>(ctx.dimension());
    const std::string tag = "[" + s->label() + "]";
    Rng rng = rng_for(opt.seed, s->label());
    auto pick_degrees = [&](std::size_t total_max, std::size_t& p, std::size_t& q) {
      p = std::uniform_int_distribution<std::size_t>(0, total_max)(rng);
      q = std::uniform_int_distribution<std::size_t>(0, total_max - p)(rng);
    };

    rec.check("leibniz" + tag, [&] {
      for (std::size_t t = 0; t < opt.random_inputs; ++t) {
        std::size_t p = 0, q = 0;
        pick_degrees(dim, p, q);
        const Integer m = t % 3 == 0 ? Integer(3) : Integer(0);
        const Cochain x = random_cochain(ctx, p, m, rng), y = random_cochain(ctx, q, m, rng);
        const Cochain lhs = ctx.coboundary(ops::cup(ctx, x, y));
        const Cochain rhs = ops::cup(ctx, ctx.coboundary(x), y) +
                            sign(p) * ops::cup(ctx, x, ctx.coboundary(y));
        if (!(lhs == rhs)) return mismatch("degrees " + std::to_string(p) + "," + std::to_string(q));
      }
      return std::string();
    });

    rec.check("cup1_coboundary_formula" + tag, [&] {
      for (std::size_t t = 0; t < opt.random_inputs; ++t) {
        std::size_t p = 0, q = 0;
        pick_degrees(dim, p, q);
        if (p + q == 0) q = 1;
        const Cochain x = random_cochain(ctx, p, 0, rng), y = random_cochain(ctx, q, 0, rng);
        const Cochain lhs = ctx.coboundary(ops::cup1(ctx, x, y));
        const Cochain rhs =
            sign(p + q + 1) * (ops::cup(ctx, x, y) - sign(p * q) * ops::cup(ctx, y, x)) +
            ops::cup1(ctx, ctx.coboundary(x), y) + sign(p) * ops::cup1(ctx, x, ctx.coboundary(y));
        if (!(lhs == rhs)) return mismatch("degrees " + std::to_string(p) + "," + std::to_string(q));
      }
      return std::string();
    });

    rec.check("cup1_commutator_on_cocycles" + tag, [&] {
      for (std::size_t t = 0; t < opt.random_inputs; ++t) {
        std::size_t p = 0, q = 0;
        pick_degrees(dim - 1, p, q);
        if (p + q == 0) q = 1;
        const Integer m = t % 2 ? Integer(2) : Integer(0);
        const Cochain x = random_cocycle(ctx, p, m, rng), y = random_cocycle(ctx, q, m, rng);
        const Cochain lhs = ctx.coboundary(ops::cup1(ctx, x, y));
        const Cochain rhs =
            sign(p + q + 1) * (ops::cup(ctx, x, y) - sign(p * q) * ops::cup(ctx, y, x));
        if (!(lhs == rhs)) return mismatch("degrees " + std::to_string(p) + "," + std::to_string(q));
      }
      return std::string();
    });

    rec.check("bockstein_lift_independence_and_torsion" + tag, [&] {
      for (std::size_t t = 0; t < opt.random_inputs / 4; ++t) {
        const std::size_t k = std::uniform_int_distribution<std::size_t>(0, dim - 2)(rng);
        const Integer n = uniform(rng, 2, 4);
        const Cochain z = random_cocycle(ctx, k, n, rng);
        const auto b1 = ops::class_of(ctx, ops::bockstein_cochain(ctx, z));
        // another integral lift of the same mod-n cocycle
        Cochain other = z.lifted() + n * random_cochain(ctx, k, 0, rng);
        IntVector d = ctx.coboundary(other).values;
        for (auto& v : d) v /= n;
        const auto b2 = ops::class_of(ctx, Cochain(k + 1, 0, std::move(d)));
        if (!(b1 == b2)) return mismatch("lifts disagree in degree " + std::to_string(k));
        if (!(n * b1).is_zero()) return mismatch("n beta_n != 0 in degree " + std::to_string(k));
      }
      return std::string();
    });

    if (dim >= 4) {
      rec.check("pontryagin_doubling_and_quadratic_law" + tag, [&] {
        for (const long m : {1L, 2L}) {
          const auto h2 = ctx.group(2, 2 * m);
          for (std::size_t t = 0; t < opt.random_inputs / 10; ++t) {
            const auto xi = random_class(h2, rng);
            const auto eta = random_class(h2, rng);
            const auto p_xi = ops::pontryagin_square(ctx, xi);
            const auto sq = ops::reduce_coeffs(ctx, ops::cup(ctx, xi, xi), Integer(4 * m));
            if (!(Integer(2) * p_xi == sq)) return mismatch("2 P2 != xi^2, m=" + std::to_string(m));
            const auto lhs = ops::pontryagin_square(ctx, xi + eta) - p_xi -
                             ops::pontryagin_square(ctx, eta);
            const auto rhs = ops::reduce_coeffs(ctx, ops::cup(ctx, xi, eta), Integer(4 * m));
            if (!(lhs == rhs)) return mismatch("quadratic law, m=" + std::to_string(m));
            // another representative of xi
            const Cochain alt = xi.representative() + ctx.coboundary(random_cochain(ctx, 1, 2 * m, rng));
            if (!(ops::class_of(ctx, ops::pontryagin_cochain(ctx, alt)) == p_xi)) {
              return mismatch("P2 depends on the representative");
            }
          }
        }
        return std::string();
      });
    }
  }

  rec.check("naturality_under_skeleton[em2:2:6 -> skel 5]", [&] {
    const auto x = complexes::em_space_2(2, 6);
    OperationContext big(x);
    OperationContext small(complexes::skeleton(x, 5));
    const auto iota = CohomologyClass::generator(big.group(2, 2), 0);
    const Cochain z = iota.representative();
    auto same = [&](const Cochain& on_big, const Cochain& on_small) {
      return ops::class_of(small, on_big) == ops::class_of(small, on_small);
    };
    if (!same(ops::bockstein_cochain(big, z), ops::bockstein_cochain(small, z))) {
      return mismatch("Bockstein");
    }
    if (!same(ops::cup(big, z, z), ops::cup(small, z, z))) return mismatch("cup");
    if (!same(ops::pontryagin_cochain(big, z), ops::pontryagin_cochain(small, z))) {
      return mismatch("Pontryagin square");
    }
    return std::string();
  });
}

// ---------------------------------------------------------------------------
// period_index

inline std::vector<complexes::SpacePtr> period_index_spaces() {
  using namespace complexes;
  const auto sm3 = suspension(moore_polygon(3));
  const auto sm2 = suspension(moore_polygon(2));
  return {moore_polygon(2),          moore_polygon(3),        sm2,
          sm3,                       product(sm2, minimal_circle()),
          product(sm3, sm3),         em_space_2(2, 6),        em_space_2(3, 4),
          product(em_space_2(2, 6), torus(), 6)};
}

// Every torsion class of H^3(X; Z), if there are at most `cap`.
inline std::vector<CohomologyClass> torsion_classes(const cohomology::GroupPtr& g,
                                                    std::size_t cap = 64) {
  const auto& pres = g->presentation();
  Integer total = 1;
  for (const auto& t : pres.torsion) total *= t;
  std::vector<CohomologyClass> out;
  if (total > Integer(static_cast<long>(cap))) return out;
  IntVector c(pres.generator_count());
  while (true) {
    out.push_back({g, c});
    std::size_t i = 0;
    for (; i < pres.torsion.size(); ++i) {
      c[i] += 1;
      if (c[i] < pres.torsion[i]) break;
      c[i] = 0;
    }
    if (i == pres.torsion.size()) break;
  }
  return out;
}

inline void run_period_index(const SuiteOptions& opt, std::vector<CheckResult>& out) {
  Recorder rec("period_index", opt.seed, out);
  for (const auto& s : period_index_spaces()) {
    OperationContext ctx(s);
    const std::string tag = "[" + s->label() + "]";
    const auto classes = torsion_classes(ctx.group(3, 0));
    Rng rng = rng_for(opt.seed, s->label());
    rec.check("report_invariants" + tag, [&] {
      std::ostringstream seen;
      for (const auto& alpha : classes) {
        const auto r = period_index::index_bound(ctx, alpha);
        const Integer eps = ops::epsilon(r.per);
        if (r.index != r.per * r.ord_q) return mismatch("index != per ordQ: " + r.record());
        if (!r.epsilon_check || !(eps % r.ord_q).is_zero()) return mismatch("ordQ does not divide eps: " + r.record());
        if (!(r.index % r.per).is_zero()) return mismatch("per does not divide index: " + r.record());
        if (!((r.per * eps) % r.index).is_zero()) return mismatch("index does not divide per eps: " + r.record());
        if (ctx.dimension() <= 4 && r.index != r.per) return mismatch("index != per in low dimension: " + r.record());
      }
      seen << classes.size() << " classes";
      return seen.str();
    });
    rec.check("lift_independence" + tag, [&] {
      std::size_t lifts = 0;
      for (const auto& alpha : classes) {
        const Integer per = period_index::period(ctx, alpha);
        for (const Integer& n : {per, 2 * per}) {
          if (n < 2) continue;
          const auto li = period_index::verify_lift_independence(ctx, alpha, n);
          lifts += li.lifts_checked;
          if (!li.independent) return mismatch("alpha " + alpha.to_string() + " n=" + n.to_string());
          // spot check: xi + rho_n(c) for random integral c
          const Cochain xi = period_index::lift_to_mod_n(ctx, alpha, n);
          const auto h2 = ctx.group(2, 0);
          const Cochain shifted =
              xi + random_class(h2, rng).representative().reduced(n);
          if (period_index::q_tilde(ctx, alpha, shifted).order !=
              period_index::q_tilde(ctx, alpha, xi).order) {
            return mismatch("order changed under xi + rho(c)");
          }
        }
      }
      return std::to_string(lifts) + " lifts";
    });
  }

  rec.check("skeleton_consistency[prod(susp(moore:3),susp(susp(moore:3))) -> skel 6]", [&] {
    const auto sm3 = complexes::suspension(complexes::moore_polygon(3));
    const auto x = complexes::product(sm3, complexes::suspension(sm3));
    OperationContext big(x);
    OperationContext small(complexes::skeleton(x, 6));
    for (const auto& alpha : torsion_classes(big.group(3, 0))) {
      const auto a = period_index::index_bound(big, alpha);
      const auto b = period_index::index_bound(
          small, CohomologyClass::of(small.group(3, 0), alpha.representative()));
      if (a.per != b.per || a.ord_q != b.ord_q) return mismatch(a.record() + " vs " + b.record());
    }
    return std::string();
  });
}

// scope: a module name or "all".
inline std::vector<CheckResult> run_suite(std::string_view scope, const SuiteOptions& opt = {}) {
  std::vector<CheckResult> out;
  const bool all = scope == "all";
  bool known = all;
  for (const auto& s : scopes()) known = known || s == scope;
  if (!known) throw InvalidArgumentError("unknown verify scope '" + std::string(scope) + "'");
  if (all || scope == "exact_linalg") run_exact_linalg(opt, out);
  if (all || scope == "complexes") run_complexes(opt, out);
  if (all || scope == "cohomology") run_cohomology(opt, out);
  if (all || scope == "cochain_ops") run_cochain_ops(opt, out);
  if (all || scope == "period_index") run_period_index(opt, out);
  return out;
}

}  // namespace brauer::verify
