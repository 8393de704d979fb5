#include "lensforge/torus_cover.hpp"

#include <numeric>
#include <string>

#include "lensforge/error.hpp"

namespace lensforge {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) {
    throw Error(ErrorCode::InvalidInput, "covering data too large for 64-bit entries");
  }
  return out;
}

}  // namespace

bool TorusCurve::is_primitive() const { return std::gcd(m2_, l2_) == 1; }

CoveringData::CoveringData(std::int64_t n, std::int64_t q, std::int64_t a, std::int64_t b)
    : n_(n), q_(q), a_(a), b_(b) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "covering data needs n >= 1");
  if (a < 1 || b < 1) throw Error(ErrorCode::InvalidInput, "covering degrees must be >= 1");
  if (q < 0 || q >= n) throw Error(ErrorCode::InvalidInput, "covering data needs 0 <= q < n");
  if (std::gcd(n, q) != 1) {
    throw Error(ErrorCode::NonManifoldInput, "q is not prime to n in covering data");
  }
}

CoveringMatrix::CoveringMatrix(const Entries& entries) : entries_(entries) {
  if (entries_[1][0] != 0) throw Error(ErrorCode::MalformedMatrix, "entry (2,1) must be 0");
  if (entries_[0][0] <= 0 || entries_[1][1] <= 0) {
    throw Error(ErrorCode::MalformedMatrix, "diagonal entries must be positive");
  }
}

std::int64_t CoveringMatrix::determinant() const {
  // Upper triangular, so the product of the diagonal.
  return checked_mul(entries_[0][0], entries_[1][1]);
}

CoveringMatrix covering_matrix(const CoveringData& d) {
  return CoveringMatrix({{{checked_mul(d.a(), d.n()), checked_mul(d.a(), d.q())}, {0, d.b()}}});
}

CoveringData decompose_matrix(const CoveringMatrix& m) {
  const std::int64_t an = m.at(0, 0);
  const std::int64_t aq = m.at(0, 1);
  const std::int64_t b = m.at(1, 1);
  if (aq < 0) throw Error(ErrorCode::MalformedMatrix, "entry (1,2) must be nonnegative");
  if (aq == 0) return CoveringData(1, 0, an, b);
  const std::int64_t a = std::gcd(an, aq);
  const std::int64_t n = an / a;
  const std::int64_t q = aq / a;
  if (q >= n) {
    throw Error(ErrorCode::MalformedMatrix, "recovered q = " + std::to_string(q) +
                                                " is not below n = " + std::to_string(n));
  }
  return CoveringData(n, q, a, b);
}

std::int64_t generic_degree(const CoveringData& d) {
  return checked_mul(checked_mul(d.a(), d.b()), d.n());
}

CoveringData swap_coordinates(const CoveringData& d) {
  if (d.n() <= 1) {
    throw Error(ErrorCode::Degenerate, "coordinate swap is degenerate for n <= 1");
  }
  return CoveringData(d.n(), mod_inverse(d.q(), d.n()), d.b(), d.a());
}

bool covering_equivalent(const CoveringData& lhs, const CoveringData& rhs) {
  if (lhs == rhs) return true;
  const CoveringData swapped =
      rhs.n() <= 1 ? CoveringData(rhs.n(), rhs.q(), rhs.b(), rhs.a()) : swap_coordinates(rhs);
  return lhs == swapped;
}

namespace {

void require_x_parameters(std::int64_t n, std::int64_t q) {
  if (!(0 < q && q < n)) {
    throw Error(ErrorCode::InvalidInput, "X_{n,q} needs 0 < q < n");
  }
  if (std::gcd(n, q) != 1) {
    throw Error(ErrorCode::NonManifoldInput,
                "X_{" + std::to_string(n) + "," + std::to_string(q) +
                    "} has a topologically singular link (gcd(n, q) != 1)");
  }
}

}  // namespace

LinkOfX link_of_X(std::int64_t n, std::int64_t q) {
  require_x_parameters(n, q);

  // On tau = pi^{-1}(S x S), z^n = x y^(n-q). The meridian discs
  // D1 = pi^{-1}({a} x D) and D2 = pi^{-1}(D x {b}) meet in the n roots of
  // z^n = a b^(n-q); the parallel {z = c} meets m1 where v^(n-q) = c^n / a.
  const std::int64_t z_degree = n;
  const std::int64_t y_degree = n - q;
  const std::int64_t m2_cap_m1 = z_degree;
  const std::int64_t m1_cap_l2 = y_degree;

  // Write m1 = alpha*l2 + beta*m2. Pairing with m2 on the left and l2 on the
  // right isolates each coefficient since m2 . l2 = 1.
  const std::int64_t alpha = m2_cap_m1;
  const std::int64_t beta = m1_cap_l2;
  const TorusCurve m2 = TorusCurve::meridian();
  const TorusCurve l2 = TorusCurve::parallel();
  const TorusCurve m1 = alpha * l2 + beta * m2;
  if (intersection(m2, m1) != m2_cap_m1 || intersection(m1, l2) != m1_cap_l2) {
    throw std::logic_error("link_of_X: m1 does not reproduce its intersection numbers");
  }

  // m1 = n*(l2 + m2) - q*m2, so l2' = l2 + m2 is the parallel giving L(n, q).
  const TorusCurve l2_prime = l2 + m2;
  if (n * l2_prime - q * m2 != m1 || intersection(m2, l2_prime) != 1) {
    throw std::logic_error("link_of_X: reparametrization failed");
  }
  const TorusCurve m1_in_l2_prime(-q, n);

  const LensSpace lens = dehn_fill(m1_in_l2_prime);
  return LinkOfX{lens, CoveringData(lens.n(), lens.q(), 1, 1),
                 LinkTrace{m2_cap_m1, m1_cap_l2, alpha, beta, m1, l2_prime, m1_in_l2_prime, lens}};
}

bool is_normal_X(std::int64_t n, std::int64_t q) {
  require_x_parameters(n, q);
  return q == n - 1;
}

CoveringData smooth_discriminant_model(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidDegree, "generic degree must be >= 1");
  return CoveringData(1, 0, 1, n);
}

}  // namespace lensforge
