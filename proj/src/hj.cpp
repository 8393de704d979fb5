#include "lensforge/hj.hpp"

#include <numeric>
#include <stdexcept>

#include "lensforge/error.hpp"
#include "lensforge/lens.hpp"

namespace lensforge {

HJChain hj_expand(std::int64_t n, std::int64_t q) {
  if (n < 2 || q < 1 || q >= n || std::gcd(n, q) != 1) {
    throw Error(ErrorCode::InvalidInput, "hj_expand needs n >= 2, 1 <= q < n, gcd(n, q) = 1");
  }
  HJChain chain{n, q, {}};
  std::int64_t num = n, den = q;
  while (den > 0) {
    const std::int64_t c = (num + den - 1) / den;
    const std::int64_t next = c * den - num;
    // Denominators strictly decrease, which bounds the length by n.
    if (c < 2 || next < 0 || next >= den) throw std::logic_error("hj_expand: bad step");
    chain.coefficients.push_back(c);
    if (static_cast<std::int64_t>(chain.coefficients.size()) > n) {
      throw std::logic_error("hj_expand: chain longer than n");
    }
    num = den;
    den = next;
  }
  return chain;
}

Rational hj_evaluate(std::span<const std::int64_t> coefficients) {
  if (coefficients.empty()) throw Error(ErrorCode::InvalidInput, "empty chain");
  Rational tail = 0;
  bool last = true;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    if (*it < 2) throw Error(ErrorCode::InvalidInput, "chain coefficients must be >= 2");
    if (last) {
      tail = *it;
      last = false;
      continue;
    }
    // Every tail is > 1, so this never divides by zero.
    if (tail <= 1) throw std::logic_error("hj_evaluate: tail value <= 1");
    tail = Rational(*it) - Rational(1) / tail;
  }
  return tail;
}

HJChain hj_reverse_dual(const HJChain& chain) {
  HJChain dual{chain.n, 0, {chain.coefficients.rbegin(), chain.coefficients.rend()}};
  const Rational value = hj_evaluate(dual.coefficients);
  if (boost::multiprecision::numerator(value) != chain.n) {
    throw std::logic_error("hj_reverse_dual: reversed chain does not have numerator n");
  }
  dual.q = static_cast<std::int64_t>(boost::multiprecision::denominator(value));
  if (dual.q != mod_inverse(chain.q, chain.n)) {
    throw std::logic_error("hj_reverse_dual: q q' != 1 mod n");
  }
  return dual;
}

std::string ResolutionGraph::to_dot() const {
  std::string out = "graph {";
  for (std::size_t i = 0; i < self_intersections.size(); ++i) {
    out += " v" + std::to_string(i) + " [label=\"" + std::to_string(self_intersections[i]) + "\"];";
  }
  for (const auto& [from, to] : edges) {
    out += " v" + std::to_string(from) + " -- v" + std::to_string(to) + ";";
  }
  out += " }";
  return out;
}

ResolutionGraph resolution_graph(const HJChain& chain) {
  ResolutionGraph graph;
  for (std::size_t i = 0; i < chain.coefficients.size(); ++i) {
    graph.self_intersections.push_back(-chain.coefficients[i]);
    if (i > 0) graph.edges.emplace_back(i - 1, i);
  }
  return graph;
}

BigInt intersection_matrix_determinant(const ResolutionGraph& graph) {
  // Continuant recurrence for a tridiagonal matrix with unit off-diagonal.
  BigInt prev = 1, cur = 1;
  bool first = true;
  for (const auto d : graph.self_intersections) {
    if (first) {
      cur = d;
      first = false;
      continue;
    }
    const BigInt next = BigInt(d) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace lensforge
