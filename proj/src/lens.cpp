#include "lensforge/lens.hpp"

#include <cstdlib>
#include <numeric>

#include "lensforge/error.hpp"
#include "lensforge/rational.hpp"
#include "lensforge/torus_cover.hpp"

namespace lensforge {

std::string LensSpace::name() const {
  if (n_ == 0) return "S^1xS^2";
  if (n_ == 1) return "S^3";
  return "L(" + std::to_string(n_) + "," + std::to_string(q_) + ")";
}

LensSpace normalize_lens(std::int64_t n, std::int64_t q) {
  const std::int64_t order = std::llabs(n);
  if (order == 0) {
    if (q == 0) throw Error(ErrorCode::InvalidInput, "(n, q) = (0, 0) is not a curve");
    // m1 = -q*m2 is simple only for q = +-1.
    if (std::llabs(q) != 1) {
      throw Error(ErrorCode::NonManifoldInput,
                  "n = 0 requires q = +-1, got q = " + std::to_string(q));
    }
    return LensSpace(0, 1);
  }
  if (order == 1) return LensSpace(1, 0);
  if (std::gcd(order, q) != 1) {
    throw Error(ErrorCode::NonManifoldInput,
                "q = " + std::to_string(q) + " is not prime to n = " + std::to_string(order));
  }
  return LensSpace(order, floor_mod(q, order));
}

std::int64_t mod_inverse(std::int64_t q, std::int64_t n) {
  if (n < 2) throw Error(ErrorCode::NotInvertible, "modulus must be at least 2");
  // Extended Euclid on (q mod n, n).
  std::int64_t old_r = floor_mod(q, n), r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw Error(ErrorCode::NotInvertible,
                std::to_string(q) + " is not invertible modulo " + std::to_string(n));
  }
  return floor_mod(old_s, n);
}

bool is_homeomorphic(const LensSpace& lhs, const LensSpace& rhs) {
  if (lhs.n() != rhs.n()) return false;
  if (lhs.n() < 2) return lhs == rhs;
  return lhs.q() == rhs.q() || rhs.q() == mod_inverse(lhs.q(), lhs.n());
}

LensSpace dehn_fill(const TorusCurve& m1) {
  std::int64_t beta = m1.coeff_m2();
  std::int64_t alpha = m1.coeff_l2();
  if (std::gcd(alpha, beta) != 1) {
    throw Error(ErrorCode::NonPrimitiveCurve,
                "curve " + std::to_string(beta) + "*m2 + " + std::to_string(alpha) +
                    "*l2 is not primitive");
  }
  // The filling only sees the unoriented curve, so flip to alpha >= 0.
  if (alpha < 0 || (alpha == 0 && beta < 0)) {
    alpha = -alpha;
    beta = -beta;
  }
  if (alpha == 0) return normalize_lens(0, 1);
  return normalize_lens(alpha, floor_mod(-beta, alpha));
}

}  // namespace lensforge
