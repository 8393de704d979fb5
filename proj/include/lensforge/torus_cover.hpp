#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "lensforge/lens.hpp"

namespace lensforge {

// Class coeff_m2 * m2 + coeff_l2 * l2 in pi_1 of the Heegaard torus, with the
// torus oriented as the boundary of T2.
class TorusCurve {
 public:
  constexpr TorusCurve(std::int64_t coeff_m2, std::int64_t coeff_l2)
      : m2_(coeff_m2), l2_(coeff_l2) {}

  static constexpr TorusCurve meridian() { return {1, 0}; }
  static constexpr TorusCurve parallel() { return {0, 1}; }

  constexpr std::int64_t coeff_m2() const noexcept { return m2_; }
  constexpr std::int64_t coeff_l2() const noexcept { return l2_; }

  bool is_primitive() const;

  constexpr TorusCurve operator+(const TorusCurve& o) const { return {m2_ + o.m2_, l2_ + o.l2_}; }
  constexpr TorusCurve operator-(const TorusCurve& o) const { return {m2_ - o.m2_, l2_ - o.l2_}; }
  constexpr TorusCurve operator-() const { return {-m2_, -l2_}; }
  friend constexpr TorusCurve operator*(std::int64_t k, const TorusCurve& c) {
    return {k * c.m2_, k * c.l2_};
  }

  friend bool operator==(const TorusCurve&, const TorusCurve&) = default;

 private:
  std::int64_t m2_;
  std::int64_t l2_;
};

// Signed intersection number, normalized so that m2 . l2 = +1.
constexpr std::int64_t intersection(const TorusCurve& c1, const TorusCurve& c2) {
  return c1.coeff_m2() * c2.coeff_l2() - c1.coeff_l2() * c2.coeff_m2();
}

// The target of every cover: L^3 = (S x D) u (D x S) = S^3, ramified over
// the Hopf link K = (S x {0}) u ({0} x S), i.e. over the discriminant uv = 0.
// The basis of pi_1(S x S) is (e1, e2), where e1 is the class of {0} x S and
// e2 the class of S x {0}. The u-axis component S x {0} is listed first.
struct HopfModel {
  static constexpr const char* discriminant = "uv=0";
  static constexpr const char* e1 = "[{0}xS]";
  static constexpr const char* e2 = "[Sx{0}]";
};

// Topological data (n, q, a, b) of a ramified cover L(n,q) -> L^3 over the
// Hopf link. a and b are the degrees on the cores K1 of T1 and K2 of T2.
class CoveringData {
 public:
  // Throws InvalidInput unless n >= 1, a, b >= 1 and (n, q) is a normalized
  // lens name with n >= 1.
  CoveringData(std::int64_t n, std::int64_t q, std::int64_t a, std::int64_t b);

  std::int64_t n() const noexcept { return n_; }
  std::int64_t q() const noexcept { return q_; }
  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }

  LensSpace lens() const { return normalize_lens(n_, q_); }

  friend bool operator==(const CoveringData&, const CoveringData&) = default;

 private:
  std::int64_t n_, q_, a_, b_;
};

// Upper triangular matrix of the induced map pi_1(tau) -> pi_1(S x S) in the
// bases (m2, l2) -> (e1, e2).
class CoveringMatrix {
 public:
  using Entries = std::array<std::array<std::int64_t, 2>, 2>;

  // Throws MalformedMatrix if not upper triangular with positive diagonal.
  explicit CoveringMatrix(const Entries& entries);

  std::int64_t at(int row, int col) const { return entries_.at(row).at(col); }
  const Entries& entries() const noexcept { return entries_; }
  std::int64_t determinant() const;

  friend bool operator==(const CoveringMatrix&, const CoveringMatrix&) = default;

 private:
  Entries entries_;
};

CoveringMatrix covering_matrix(const CoveringData& d);

// a is the gcd of the first row (or the (1,1) entry when q = 0, which forces
// n = 1). Throws MalformedMatrix if the recovered (n, q) is not coprime.
CoveringData decompose_matrix(const CoveringMatrix& m);

// a * b * n.
std::int64_t generic_degree(const CoveringData& d);

// Data of the same cover with the coordinates of C^2 listed in the other
// order: (n, q^{-1} mod n, b, a). Throws Degenerate for n <= 1.
CoveringData swap_coordinates(const CoveringData& d);

// Same data, or same data up to swapping the coordinates. For n = 1 the swap
// is (1, 0, b, a).
bool covering_equivalent(const CoveringData& lhs, const CoveringData& rhs);

// Step-by-step record of the link computation for X_{n,q} = {z^n = x y^(n-q)}.
struct LinkTrace {
  std::int64_t m2_cap_m1;  // points of pi^{-1}(a, b), i.e. roots of z^n
  std::int64_t m1_cap_l2;  // points of {z = c} on m1, i.e. roots of v^(n-q)
  std::int64_t alpha;      // m1 = alpha*l2 + beta*m2
  std::int64_t beta;
  TorusCurve m1;
  TorusCurve l2_prime;           // reparametrized parallel l2 + m2
  TorusCurve m1_in_l2_prime;     // m1 = n*l2' - q*m2, in the basis (m2, l2')
  LensSpace result;
};

struct LinkOfX {
  LensSpace lens;
  CoveringData cover;
  LinkTrace trace;
};

// Link of (X_{n,q}, 0) and the data of the projection (x, y, z) -> (x, y).
// Throws NonManifoldInput unless 0 < q < n and gcd(n, q) = 1.
LinkOfX link_of_X(std::int64_t n, std::int64_t q);

// X_{n,q} is normal iff q = n - 1.
bool is_normal_X(std::int64_t n, std::int64_t q);

// Normal form (x, y) -> (x, y^n) of a cover of generic degree n with smooth
// discriminant v = 0: link S^3, one sheet over the u-axis and n over the
// v-axis. Throws InvalidDegree if n < 1.
CoveringData smooth_discriminant_model(std::int64_t n);

}  // namespace lensforge
