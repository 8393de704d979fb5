#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace lensforge {

class TorusCurve;

// Canonical name L(n, q) of a lens space.
//
//   n = 0  ->  (0, 1), S^1 x S^2
//   n = 1  ->  (1, 0), S^3
//   n >= 2 ->  1 <= q < n with gcd(n, q) = 1
//
// Only normalize_lens() and dehn_fill() construct values, so every LensSpace
// in circulation satisfies the invariant above.
class LensSpace {
 public:
  std::int64_t n() const noexcept { return n_; }
  std::int64_t q() const noexcept { return q_; }

  bool is_sphere() const noexcept { return n_ == 1; }
  bool is_s1_x_s2() const noexcept { return n_ == 0; }

  // "S^3", "S^1xS^2" or "L(n,q)".
  std::string name() const;

  friend bool operator==(const LensSpace&, const LensSpace&) = default;
  friend auto operator<=>(const LensSpace&, const LensSpace&) = default;

 private:
  friend LensSpace normalize_lens(std::int64_t n, std::int64_t q);
  LensSpace(std::int64_t n, std::int64_t q) : n_(n), q_(q) {}

  std::int64_t n_;
  std::int64_t q_;
};

// Negative n is replaced by |n|. That is an orientation reversal; callers
// that care check `n < 0` themselves (the CLI reports it).
// Throws NonManifoldInput when the meridian n*l2 - q*m2 is not primitive,
// InvalidInput for (0, 0).
LensSpace normalize_lens(std::int64_t n, std::int64_t q);

// Inverse of q modulo n, in [1, n). Throws NotInvertible.
std::int64_t mod_inverse(std::int64_t q, std::int64_t n);

// Orientation preserving homeomorphism: same n and q' = q^{+-1} mod n.
bool is_homeomorphic(const LensSpace& lhs, const LensSpace& rhs);

// Lens space obtained by gluing T1 so that its meridian lands on `m1`.
// Throws NonPrimitiveCurve when gcd of the coefficients is not 1.
LensSpace dehn_fill(const TorusCurve& m1);

}  // namespace lensforge
