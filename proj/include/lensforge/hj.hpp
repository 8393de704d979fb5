#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lensforge/rational.hpp"

namespace lensforge {

// Hirzebruch-Jung expansion n/q = c1 - 1/(c2 - 1/(... - 1/ck)), all ci >= 2.
struct HJChain {
  std::int64_t n;
  std::int64_t q;
  std::vector<std::int64_t> coefficients;
};

// Negative-remainder Euclid. Throws InvalidInput unless n >= 2, 1 <= q < n and
// gcd(n, q) = 1.
HJChain hj_expand(std::int64_t n, std::int64_t q);

// Exact value of the descending continued fraction. Throws InvalidInput on an
// empty list or a coefficient below 2.
Rational hj_evaluate(std::span<const std::int64_t> coefficients);

// Reversed chain, which expands n / q' with q q' = 1 mod n.
HJChain hj_reverse_dual(const HJChain& chain);

// Linear chain of rational curves with self-intersections -ci.
struct ResolutionGraph {
  std::vector<std::int64_t> self_intersections;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  // graph { v0 [label="-3"]; v1 [label="-2"]; v0 -- v1; }
  std::string to_dot() const;
};

ResolutionGraph resolution_graph(const HJChain& chain);

// Determinant of the tridiagonal intersection matrix; equals (-1)^k n.
BigInt intersection_matrix_determinant(const ResolutionGraph& graph);

}  // namespace lensforge
