#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/errors.hpp"
#include "brauer/integer.hpp"
#include "brauer/linalg/int_matrix.hpp"

namespace brauer::cohomology {

using linalg::IntVector;

// A cochain on the nondegenerate simplices of one degree, stored densely.
// Modulus 0 means integral coefficients; otherwise values lie in [0, m).
struct Cochain {
  std::size_t degree = 0;
  Integer modulus = 0;
  IntVector values;

  Cochain() = default;
  Cochain(std::size_t deg, Integer mod, IntVector v)
      : degree(deg), modulus(std::move(mod)), values(std::move(v)) {
    if (modulus.sign() < 0) throw InvalidArgumentError("negative cochain modulus");
    normalize();
  }

  static Cochain zero(std::size_t deg, std::size_t size, const Integer& mod) {
    return Cochain(deg, mod, IntVector(size));
  }

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  [[nodiscard]] bool is_integral() const noexcept { return modulus.is_zero(); }
  [[nodiscard]] bool is_zero() const noexcept {
    for (const auto& v : values) {
      if (!v.is_zero()) return false;
    }
    return true;
  }
  [[nodiscard]] std::size_t nnz() const noexcept {
    std::size_t c = 0;
    for (const auto& v : values) c += v.is_zero() ? 0 : 1;
    return c;
  }

  void normalize() {
    if (modulus.is_zero()) return;
    for (auto& v : values) v = mod_floor(v, modulus);
  }

  // Coefficient change Z -> Z/m or Z/n -> Z/m for n divisible by m.
  [[nodiscard]] Cochain reduced(const Integer& m) const {
    if (!modulus.is_zero() && !(modulus % m).is_zero()) {
      throw ModulusMismatchError("cannot reduce mod " + modulus.to_string() + " to mod " +
                                 m.to_string());
    }
    return Cochain(degree, m, values);
  }

  // Integral lift with values in [0, m).
  [[nodiscard]] Cochain lifted() const { return Cochain(degree, 0, values); }

  Cochain& operator+=(const Cochain& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    normalize();
    return *this;
  }
  Cochain& operator-=(const Cochain& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
    normalize();
    return *this;
  }
  Cochain& operator*=(const Integer& k) {
    for (auto& v : values) v *= k;
    normalize();
    return *this;
  }
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Integer& k, Cochain a) { return a *= k; }
  friend Cochain operator-(Cochain a) { return a *= Integer(-1); }
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree == b.degree && a.modulus == b.modulus && a.values == b.values;
  }

 private:
  void check_compatible(const Cochain& o) const {
    if (o.degree != degree || o.values.size() != values.size()) {
      throw SpaceMismatchError("cochains of different shape");
    }
    if (o.modulus != modulus) throw ModulusMismatchError("cochains with different moduli");
  }
};

// "cochain v1", "degree d modulus m", then "simplexId coefficient" lines for
// the nonzero coefficients in increasing id order.
inline void write_cochain(std::ostream& os, const Cochain& c) {
  os << "cochain v1\n";
  os << "degree " << c.degree << " modulus " << c.modulus << '\n';
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (!c.values[i].is_zero()) os << i << ' ' << c.values[i] << '\n';
  }
}

// `size` is the number of nondegenerate simplices in the cochain's degree.
inline Cochain read_cochain(std::istream& is, std::size_t size) {
  std::string magic, version, kw1, kw2, mod_text;
  std::size_t degree = 0;
  if (!(is >> magic >> version) || magic != "cochain" || version != "v1") {
    throw ParseError("cochain: expected header 'cochain v1'");
  }
  if (!(is >> kw1 >> degree >> kw2 >> mod_text) || kw1 != "degree" || kw2 != "modulus") {
    throw ParseError("cochain: expected 'degree d modulus m'");
  }
  Integer modulus;
  try {
    modulus = Integer::parse(mod_text);
  } catch (const std::invalid_argument&) {
    throw ParseError("cochain: bad modulus '" + mod_text + "'");
  }
  if (modulus.sign() < 0) throw ParseError("cochain: negative modulus");
  IntVector values(size);
  std::vector<bool> seen(size, false);
  std::string id_text, value_text;
  while (is >> id_text) {
    if (!(is >> value_text)) throw ParseError("cochain: dangling simplex id");
    std::size_t id = 0;
    try {
      std::size_t used = 0;
      id = std::stoul(id_text, &used);
      if (used != id_text.size()) throw std::invalid_argument("id");
      values.at(id);
    } catch (const std::exception&) {
      throw ParseError("cochain: bad simplex id '" + id_text + "'");
    }
    if (seen[id]) throw ParseError("cochain: duplicate simplex id " + id_text);
    seen[id] = true;
    try {
      values[id] = Integer::parse(value_text);
    } catch (const std::invalid_argument&) {
      throw ParseError("cochain: bad coefficient '" + value_text + "'");
    }
  }
  return Cochain(degree, modulus, std::move(values));
}

}  // namespace brauer::cohomology
