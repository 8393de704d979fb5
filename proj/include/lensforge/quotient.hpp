#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lensforge/lens.hpp"
#include "lensforge/rational.hpp"
#include "lensforge/torus_cover.hpp"

namespace lensforge {

// C_{n,q} = C^2 / G_n with G_n acting by (z1, z2) -> (s^q z1, s z2), s^n = 1.
class QuotientGerm {
 public:
  // Throws InvalidInput unless n >= 2 and 1 <= q < n, NonManifoldInput if
  // gcd(n, q) != 1.
  QuotientGerm(std::int64_t n, std::int64_t q);

  std::int64_t n() const noexcept { return n_; }
  std::int64_t q() const noexcept { return q_; }

  friend bool operator==(const QuotientGerm&, const QuotientGerm&) = default;

 private:
  std::int64_t n_, q_;
};

// Exponents of the monomial z1^e1 z2^e2.
struct MonomialExponent {
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;

  friend bool operator==(const MonomialExponent&, const MonomialExponent&) = default;
  friend auto operator<=>(const MonomialExponent&, const MonomialExponent&) = default;
};

// Minimal generators of {(e1, e2) in N^2 : n | q*e1 + e2}, lexicographic.
struct SemigroupBasis {
  QuotientGerm germ;
  std::vector<MonomialExponent> generators;
};

// Nonzero complex number as (modulus, phase) with the phase a fraction of a
// full turn in [0, 1).
class ExactCoord {
 public:
  // Throws InvalidInput if modulus <= 0.
  ExactCoord(Rational modulus, const Rational& phase);

  const Rational& modulus() const noexcept { return modulus_; }
  const Rational& phase() const noexcept { return phase_; }

  ExactCoord operator*(const ExactCoord& o) const;
  ExactCoord pow(std::int64_t k) const;
  ExactCoord rotated(const Rational& turns) const;

  friend bool operator==(const ExactCoord&, const ExactCoord&) = default;

 private:
  Rational modulus_;
  Rational phase_;
};

// Point of (C \ {0})^2.
struct ExactPoint {
  ExactCoord z1;
  ExactCoord z2;

  friend bool operator==(const ExactPoint&, const ExactPoint&) = default;
};

bool is_invariant(const QuotientGerm& g, const MonomialExponent& m);

// Enumerates invariant exponents with e1 + e2 <= bound and keeps those that
// are not a sum of two nonzero invariant exponents.
//
// A minimal generator has e1 <= n and e2 <= n, since otherwise (n, 0) or
// (0, n) could be split off. Hence bound >= 2n is complete. Throws
// BoundTooSmall otherwise.
SemigroupBasis hilbert_basis(const QuotientGerm& g, std::int64_t bound);
SemigroupBasis hilbert_basis(const QuotientGerm& g);

// Components of nu(z1, z2) = (z1^n, z2^n, z1 z2^(n-q)).
std::vector<MonomialExponent> nu_components(const QuotientGerm& g);

// Action of s^k with s = exp(2 pi i / n).
ExactPoint act(const QuotientGerm& g, std::int64_t k, const ExactPoint& p);

ExactCoord eval_monomial(const MonomialExponent& m, const ExactPoint& p);

// Checks (pi o nu o gamma)(z1, z2) = (z1^n, z2^n) exactly, evaluating nu on
// every representative of the class of p.
bool chain_identity_check(const QuotientGerm& g, const ExactPoint& p);

// nu takes the same value on p and on every s^k . p.
bool nu_orbit_invariance(const QuotientGerm& g, const ExactPoint& p);

// Orbit size -> number of orbits, for the action k.(i, j) = (i + qk, j + k)
// on phase classes (Z/n)^2.
std::map<std::int64_t, std::int64_t> orbit_size_census(const QuotientGerm& g);

// nu evaluated on unit-modulus phase classes (i/n, j/n) separates distinct
// orbits.
bool nu_separates_orbits(const QuotientGerm& g);

// Normal quasi-ordinary model with link L: C_{n,q} with its degree n
// morphism of matrix [[n, q], [0, 1]], or the smooth germ for n = 1 (germ
// empty, matrix identity). Throws NotApplicable for S^1 x S^2.
struct NormalModel {
  std::optional<QuotientGerm> germ;
  CoveringMatrix matrix;

  bool smooth() const noexcept { return !germ.has_value(); }
};

NormalModel normal_model(const LensSpace& lens);

}  // namespace lensforge
