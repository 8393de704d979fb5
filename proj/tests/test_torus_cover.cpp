#include "doctest.h"

#include <random>

#include "lensforge/error.hpp"
#include "lensforge/torus_cover.hpp"
#include "oracles.hpp"

using namespace lensforge;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::InvalidInput;
}

CoveringMatrix matrix(std::int64_t a11, std::int64_t a12, std::int64_t a21, std::int64_t a22) {
  return CoveringMatrix({{{a11, a12}, {a21, a22}}});
}

}  // namespace

TEST_CASE("intersection pairing") {
  const auto m2 = TorusCurve::meridian();
  const auto l2 = TorusCurve::parallel();
  CHECK(intersection(m2, l2) == 1);
  CHECK(intersection(l2, m2) == -1);
  CHECK(intersection(TorusCurve(3, -7), TorusCurve(3, -7)) == 0);
  CHECK(intersection(m2, 5 * l2 - 2 * m2) == 5);
  CHECK(intersection(m2, 9 * l2 - 4 * m2) == 9);
}

TEST_CASE("intersection is bilinear and antisymmetric") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> coeff(-1000, 1000);
  auto curve = [&] { return TorusCurve(coeff(rng), coeff(rng)); };
  for (int i = 0; i < 500; ++i) {
    const auto x = curve(), y = curve(), z = curve();
    const std::int64_t k = coeff(rng);
    REQUIRE(intersection(x, y) == -intersection(y, x));
    REQUIRE(intersection(x, x) == 0);
    REQUIRE(intersection(x + y, z) == intersection(x, z) + intersection(y, z));
    REQUIRE(intersection(k * x, z) == k * intersection(x, z));
  }
}

TEST_CASE("covering_matrix examples") {
  CHECK(covering_matrix(CoveringData(5, 2, 3, 2)) == matrix(15, 6, 0, 2));
  CHECK(covering_matrix(CoveringData(5, 2, 1, 1)) == matrix(5, 2, 0, 1));
  CHECK(covering_matrix(CoveringData(1, 0, 4, 7)) == matrix(4, 0, 0, 7));
}

TEST_CASE("decompose_matrix examples and errors") {
  CHECK(decompose_matrix(matrix(15, 6, 0, 2)) == CoveringData(5, 2, 3, 2));
  CHECK(decompose_matrix(matrix(5, 2, 0, 1)) == CoveringData(5, 2, 1, 1));
  CHECK(decompose_matrix(matrix(4, 0, 0, 7)) == CoveringData(1, 0, 4, 7));

  CHECK(code_of([] { matrix(5, 2, 1, 1); }) == ErrorCode::MalformedMatrix);
  CHECK(code_of([] { matrix(0, 2, 0, 1); }) == ErrorCode::MalformedMatrix);
  CHECK(code_of([] { matrix(5, 2, 0, -1); }) == ErrorCode::MalformedMatrix);
  CHECK(code_of([] { decompose_matrix(matrix(5, 7, 0, 1)); }) == ErrorCode::MalformedMatrix);
  CHECK(code_of([] { decompose_matrix(matrix(6, -2, 0, 1)); }) == ErrorCode::MalformedMatrix);
}

TEST_CASE("CoveringData validation") {
  CHECK(code_of([] { CoveringData(0, 0, 1, 1); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { CoveringData(5, 5, 1, 1); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { CoveringData(5, 2, 0, 1); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { CoveringData(6, 2, 1, 1); }) == ErrorCode::NonManifoldInput);
  CHECK(code_of([] { CoveringData(4, 0, 1, 1); }) == ErrorCode::NonManifoldInput);
}

TEST_CASE("round trip and determinant over the grid") {
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t q = 0; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      for (std::int64_t a = 1; a <= 10; ++a) {
        for (std::int64_t b = 1; b <= 10; ++b) {
          const CoveringData d(n, q, a, b);
          const CoveringMatrix m = covering_matrix(d);
          REQUIRE(decompose_matrix(m) == d);
          REQUIRE(m.determinant() == generic_degree(d));
          REQUIRE(generic_degree(d) == a * b * n);
        }
      }
    }
  }
}

TEST_CASE("generic_degree examples") {
  CHECK(generic_degree(CoveringData(5, 2, 3, 2)) == 30);
  CHECK(generic_degree(CoveringData(1, 0, 1, 1)) == 1);
  CHECK(generic_degree(CoveringData(3, 2, 1, 1)) == 3);
}

TEST_CASE("swap_coordinates") {
  CHECK(swap_coordinates(CoveringData(5, 2, 1, 1)) == CoveringData(5, 3, 1, 1));
  CHECK(swap_coordinates(CoveringData(7, 2, 3, 4)) == CoveringData(7, 4, 4, 3));
  CHECK(code_of([] { swap_coordinates(CoveringData(1, 0, 2, 3)); }) == ErrorCode::Degenerate);

  for (const auto& [n, q] : oracle::coprime_pairs(20)) {
    for (std::int64_t a = 1; a <= 4; ++a) {
      for (std::int64_t b = 1; b <= 4; ++b) {
        const CoveringData d(n, q, a, b);
        const CoveringData s = swap_coordinates(d);
        REQUIRE(swap_coordinates(s) == d);
        REQUIRE(generic_degree(s) == generic_degree(d));
        REQUIRE(is_homeomorphic(d.lens(), s.lens()));
        REQUIRE((s.q() * q) % n == 1 % n);
      }
    }
  }
}

TEST_CASE("covering_equivalent examples") {
  CHECK(covering_equivalent(CoveringData(5, 2, 1, 1), CoveringData(5, 3, 1, 1)));
  CHECK_FALSE(covering_equivalent(CoveringData(5, 2, 1, 1), CoveringData(5, 2, 2, 1)));
  CHECK(covering_equivalent(CoveringData(7, 2, 3, 4), CoveringData(7, 2, 3, 4)));
  CHECK(covering_equivalent(CoveringData(1, 0, 2, 3), CoveringData(1, 0, 3, 2)));
  CHECK_FALSE(covering_equivalent(CoveringData(1, 0, 2, 3), CoveringData(1, 0, 2, 2)));
}

TEST_CASE("covering_equivalent is an equivalence relation with classes of size <= 2") {
  for (std::int64_t n = 1; n <= 20; ++n) {
    std::vector<CoveringData> all;
    for (std::int64_t q = 0; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      for (std::int64_t a = 1; a <= 3; ++a) {
        for (std::int64_t b = 1; b <= 3; ++b) all.emplace_back(n, q, a, b);
      }
    }
    for (const auto& x : all) {
      int class_size = 0;
      for (const auto& y : all) {
        const bool xy = covering_equivalent(x, y);
        REQUIRE(xy == covering_equivalent(y, x));
        if (xy) ++class_size;
        for (const auto& z : all) {
          if (xy && covering_equivalent(y, z)) REQUIRE(covering_equivalent(x, z));
        }
      }
      REQUIRE(class_size >= 1);
      REQUIRE(class_size <= 2);
    }
  }
}

TEST_CASE("link_of_X examples") {
  const LinkOfX link = link_of_X(5, 2);
  CHECK(link.lens == normalize_lens(5, 2));
  CHECK(link.cover == CoveringData(5, 2, 1, 1));
  CHECK(link.trace.m2_cap_m1 == 5);
  CHECK(link.trace.m1_cap_l2 == 3);
  CHECK(link.trace.alpha == 5);
  CHECK(link.trace.beta == 3);
  CHECK(link.trace.m1 == TorusCurve(3, 5));
  CHECK(link.trace.l2_prime == TorusCurve(1, 1));
  CHECK(link.trace.m1_in_l2_prime == TorusCurve(-2, 5));

  CHECK(link_of_X(3, 1).cover == CoveringData(3, 1, 1, 1));
  for (std::int64_t n = 2; n <= 12; ++n) {
    CHECK(link_of_X(n, n - 1).lens == normalize_lens(n, n - 1));
    CHECK(is_normal_X(n, n - 1));
  }
}

TEST_CASE("link_of_X agrees with dehn_fill of the raw meridian") {
  for (const auto& [n, q] : oracle::coprime_pairs(40)) {
    const LinkOfX link = link_of_X(n, q);
    REQUIRE(dehn_fill(link.trace.m1) == normalize_lens(n, q));
    REQUIRE(link.lens == normalize_lens(n, q));
  }
}

TEST_CASE("link_of_X and is_normal_X reject bad parameters") {
  CHECK(code_of([] { link_of_X(6, 4); }) == ErrorCode::NonManifoldInput);
  CHECK(code_of([] { link_of_X(5, 0); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { link_of_X(5, 5); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { is_normal_X(9, 3); }) == ErrorCode::NonManifoldInput);
}

TEST_CASE("is_normal_X") {
  CHECK(is_normal_X(5, 4));
  CHECK_FALSE(is_normal_X(5, 2));
  CHECK(is_normal_X(2, 1));
}

TEST_CASE("smooth_discriminant_model") {
  CHECK(smooth_discriminant_model(1) == CoveringData(1, 0, 1, 1));
  CHECK(smooth_discriminant_model(4) == CoveringData(1, 0, 1, 4));
  for (std::int64_t n = 1; n <= 10; ++n) {
    const CoveringData d = smooth_discriminant_model(n);
    CHECK(d.lens().is_sphere());
    CHECK(generic_degree(d) == n);
  }
  CHECK(code_of([] { smooth_discriminant_model(0); }) == ErrorCode::InvalidDegree);
}
