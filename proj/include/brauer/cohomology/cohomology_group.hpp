#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brauer/cohomology/cochain.hpp"
#include "brauer/complexes/chain_complex.hpp"
#include "brauer/errors.hpp"
#include "brauer/integer.hpp"
#include "brauer/linalg/abelian_group.hpp"
#include "brauer/linalg/lattice.hpp"
#include "brauer/linalg/smith_cache.hpp"

namespace brauer::cohomology {

using complexes::ChainComplex;
using complexes::ComplexPtr;
using linalg::AbelianGroupPresentation;
using linalg::IntMatrix;
using linalg::SparseIntMatrix;

struct CohomologyOptions {
  // Use an attached reduction (e.g. Eilenberg-Zilber for products) when the
  // degree lies in its valid range.
  bool use_reduction = true;
  linalg::SmithCache* cache = nullptr;  // defaults to the global cache
};

class CohomologyGroup;
std::shared_ptr<const CohomologyGroup> cohomology_group(const ComplexPtr& complex,
                                                       std::size_t degree, const Integer& modulus,
                                                       const CohomologyOptions& opt);

// H^k(C; Z/m) with m = 0 meaning integral coefficients. Cocycles are written
// in coordinates c = z U^{-1} of a basis adapted to the image lattice of
// d_{k+1}; the cocycle condition then reads c_i e_i = 0 (mod m) for the
// invariant factors e_i.
class CohomologyGroup {
 public:
  [[nodiscard]] const ComplexPtr& complex() const noexcept { return complex_; }
  [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
  [[nodiscard]] const Integer& modulus() const noexcept { return modulus_; }
  [[nodiscard]] const AbelianGroupPresentation& presentation() const noexcept {
    return presentation_;
  }
  [[nodiscard]] const std::vector<Cochain>& generators() const noexcept { return generators_; }
  [[nodiscard]] std::size_t cochain_size() const { return complex_->rank(degree_); }
  [[nodiscard]] bool via_reduction() const noexcept { return inner_ != nullptr; }
  [[nodiscard]] std::string to_string() const { return presentation_.to_string(); }

  [[nodiscard]] bool is_cocycle(const Cochain& z) const {
    check_shape(z);
    const SparseIntMatrix& b = complex_->boundary(degree_ + 1);
    const IntVector s = b.apply_left(z.values);
    for (const auto& v : s) {
      if (!mod_floor(v, modulus_).is_zero()) return false;
    }
    return true;
  }

  // Canonical coordinates of the class of z; rejects non-cocycles.
  [[nodiscard]] IntVector express(const Cochain& z) const {
    if (!is_cocycle(z)) {
      throw NotACocycleError("degree " + std::to_string(degree_) + " cochain is not a cocycle" +
                             (modulus_.is_zero() ? "" : " mod " + modulus_.to_string()));
    }
    return express_cocycle(z);
  }

  // Same as express, for cochains already known to be cocycles.
  [[nodiscard]] IntVector express_cocycle(const Cochain& z) const {
    check_shape(z);
    if (inner_) {
      const IntVector pulled = reduction_->inclusion(degree_).apply_left(z.values);
      return inner_->express_cocycle(Cochain(degree_, modulus_, pulled));
    }
    if (presentation_.generator_count() == 0) return {};
    const IntVector c = linalg::row_times(z.values, basis_->U_inverse);
    IntVector y(coords_.size());
    for (std::size_t j = 0; j < coords_.size(); ++j) {
      const std::size_t i = coords_[j];
      y[j] = i < rank_ ? divexact(c[i], weights_[i]) : c[i];
    }
    return presentation_.canonical(y);
  }

  [[nodiscard]] Cochain representative(std::span<const Integer> coords) const {
    if (coords.size() != generators_.size()) {
      throw InvalidArgumentError("class coordinates do not match the group");
    }
    Cochain z = Cochain::zero(degree_, cochain_size(), modulus_);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i].is_zero()) continue;
      const auto& g = generators_[i].values;
      for (std::size_t s = 0; s < g.size(); ++s) {
        if (!g[s].is_zero()) z.values[s].add_mul(coords[i], g[s]);
      }
    }
    z.normalize();
    return z;
  }

 private:
  friend std::shared_ptr<const CohomologyGroup> cohomology_group(const ComplexPtr&, std::size_t,
                                                                 const Integer&,
                                                                 const CohomologyOptions&);

  void check_shape(const Cochain& z) const {
    if (z.degree != degree_ || z.values.size() != cochain_size()) {
      throw SpaceMismatchError("cochain of degree " + std::to_string(z.degree) + " and size " +
                               std::to_string(z.values.size()) + " does not live on " +
                               complex_->label() + " in degree " + std::to_string(degree_));
    }
    if (z.modulus != modulus_) {
      throw ModulusMismatchError("cochain modulus " + z.modulus.to_string() +
                                 " differs from group modulus " + modulus_.to_string());
    }
  }

  void build_direct(const CohomologyOptions& opt) {
    const std::size_t n = complex_->rank(degree_);
    linalg::SmithCache& cache = opt.cache ? *opt.cache : linalg::SmithCache::global();
    basis_ = cache.adapted_basis(complex_->boundary(degree_ + 1));
    rank_ = basis_->rank();
    const Integer& m = modulus_;
    weights_.assign(rank_, Integer(0));
    for (std::size_t i = 0; i < rank_; ++i) {
      if (!m.is_zero()) weights_[i] = m / gcd(m, basis_->invariants[i]);
    }
    for (std::size_t i = m.is_zero() ? rank_ : 0; i < n; ++i) coords_.push_back(i);
    const std::size_t width = coords_.size();

    std::vector<IntVector> rows;
    if (degree_ >= 1 && width > 0) {
      const SparseIntMatrix at = complex_->boundary(degree_).transpose();
      // Column j of the transpose is the coboundary of the j-th (k-1)-simplex.
      for (std::size_t j = 0; j < at.cols(); ++j) {
        auto rs = at.column_rows(j);
        auto vs = at.column_values(j);
        if (rs.empty()) continue;
        IntVector c(n);
        for (std::size_t t = 0; t < rs.size(); ++t) {
          auto urow = basis_->U_inverse.row(rs[t]);
          for (std::size_t i = 0; i < n; ++i) {
            if (!urow[i].is_zero()) c[i].add_mul(vs[t], urow[i]);
          }
        }
        IntVector y(width);
        bool nonzero = false;
        for (std::size_t q = 0; q < width; ++q) {
          const std::size_t i = coords_[q];
          y[q] = i < rank_ ? divexact(c[i], weights_[i]) : c[i];
          nonzero |= !y[q].is_zero();
        }
        for (std::size_t i = 0; i < rank_ && m.is_zero(); ++i) {
          if (!c[i].is_zero()) throw InternalConsistencyError("coboundary fails the cocycle test");
        }
        if (nonzero) rows.push_back(std::move(y));
      }
    }
    if (!m.is_zero()) {
      for (std::size_t q = 0; q < width; ++q) {
        const std::size_t i = coords_[q];
        IntVector y(width);
        y[q] = i < rank_ ? m / weights_[i] : m;
        rows.push_back(std::move(y));
      }
    }
    IntMatrix rel(rows.size(), width);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t q = 0; q < width; ++q) rel(r, q) = std::move(rows[r][q]);
    }
    presentation_ = linalg::quotient_by_rows(rel, width);

    for (std::size_t g = 0; g < presentation_.generator_count(); ++g) {
      IntVector c(n);
      for (std::size_t q = 0; q < width; ++q) {
        const std::size_t i = coords_[q];
        c[i] = presentation_.generators(g, q) * (i < rank_ ? weights_[i] : Integer(1));
      }
      generators_.emplace_back(degree_, m, linalg::row_times(c, basis_->U));
    }
  }

  void build_reduced(const CohomologyOptions& opt) {
    reduction_ = complex_->reduction();
    CohomologyOptions inner_opt = opt;
    inner_opt.use_reduction = false;
    inner_ = cohomology_group(reduction_->effective(), degree_, modulus_, inner_opt);
    presentation_ = inner_->presentation();
    const SparseIntMatrix& f = reduction_->projection(degree_);
    for (const Cochain& g : inner_->generators()) {
      generators_.emplace_back(degree_, modulus_, f.apply_left(g.values));
    }
  }

  ComplexPtr complex_;
  std::size_t degree_ = 0;
  Integer modulus_;
  AbelianGroupPresentation presentation_;
  std::vector<Cochain> generators_;

  std::shared_ptr<const linalg::AdaptedBasis> basis_;
  std::size_t rank_ = 0;
  std::vector<Integer> weights_;
  std::vector<std::size_t> coords_;

  std::shared_ptr<const complexes::Reduction> reduction_;
  std::shared_ptr<const CohomologyGroup> inner_;
};

using GroupPtr = std::shared_ptr<const CohomologyGroup>;

inline GroupPtr cohomology_group(const ComplexPtr& complex, std::size_t degree,
                                 const Integer& modulus) {
  return cohomology_group(complex, degree, modulus, CohomologyOptions{});
}

inline GroupPtr cohomology_group(const ComplexPtr& complex, std::size_t degree,
                                 const Integer& modulus, const CohomologyOptions& opt) {
  if (modulus.sign() < 0 || modulus.is_one()) {
    throw InvalidArgumentError("coefficient modulus must be 0 or at least 2");
  }
  auto g = std::make_shared<CohomologyGroup>();
  g->complex_ = complex;
  g->degree_ = degree;
  g->modulus_ = modulus;
  const auto& red = complex->reduction();
  if (opt.use_reduction && red && degree < red->valid_below()) {
    g->build_reduced(opt);
  } else {
    g->build_direct(opt);
  }
  return g;
}

// An element of a cohomology group in canonical coordinates.
struct CohomologyClass {
  GroupPtr group;
  IntVector coords;

  static CohomologyClass zero(const GroupPtr& g) {
    return {g, IntVector(g->presentation().generator_count())};
  }
  static CohomologyClass of(const GroupPtr& g, const Cochain& z) { return {g, g->express(z)}; }
  static CohomologyClass generator(const GroupPtr& g, std::size_t i) {
    CohomologyClass c = zero(g);
    c.coords.at(i) = 1;
    return c;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& v : coords) {
      if (!v.is_zero()) return false;
    }
    return true;
  }
  [[nodiscard]] Cochain representative() const { return group->representative(coords); }
  [[nodiscard]] std::string to_string() const {
    return group->presentation().format_coordinates(coords);
  }

  CohomologyClass& operator+=(const CohomologyClass& o) {
    check(o);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    coords = group->presentation().reduce(std::move(coords));
    return *this;
  }
  CohomologyClass& operator*=(const Integer& k) {
    for (auto& v : coords) v *= k;
    coords = group->presentation().reduce(std::move(coords));
    return *this;
  }
  friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
  friend CohomologyClass operator*(const Integer& k, CohomologyClass a) { return a *= k; }
  friend CohomologyClass operator-(const CohomologyClass& a) { return Integer(-1) * a; }
  friend CohomologyClass operator-(CohomologyClass a, const CohomologyClass& b) { return a += -b; }
  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
    return a.group == b.group && a.coords == b.coords;
  }

 private:
  void check(const CohomologyClass& o) const {
    if (o.group != group) throw SpaceMismatchError("classes from different groups");
  }
};

// nullopt when the class has infinite order.
inline std::optional<Integer> torsion_class_order(const CohomologyClass& c) {
  return linalg::element_order(c.group->presentation(), c.coords);
}

// G / <gens>, with the projection from G's canonical coordinates.
inline linalg::QuotientPresentation subgroup_quotient(const GroupPtr& g,
                                                      const std::vector<CohomologyClass>& gens) {
  std::vector<IntVector> coords;
  for (const auto& c : gens) {
    if (c.group != g) throw SpaceMismatchError("subgroup generator from another group");
    coords.push_back(c.coords);
  }
  return linalg::subgroup_quotient(g->presentation(), coords);
}

}  // namespace brauer::cohomology
