#include "lensforge/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "lensforge/error.hpp"

namespace lensforge {

QuotientGerm::QuotientGerm(std::int64_t n, std::int64_t q) : n_(n), q_(q) {
  if (n < 2 || q < 1 || q >= n) {
    throw Error(ErrorCode::InvalidInput, "C_{n,q} needs n >= 2 and 1 <= q < n");
  }
  if (std::gcd(n, q) != 1) throw Error(ErrorCode::NonManifoldInput, "q is not prime to n");
}

ExactCoord::ExactCoord(Rational modulus, const Rational& phase)
    : modulus_(std::move(modulus)), phase_(reduce_phase(phase)) {
  if (modulus_ <= 0) throw Error(ErrorCode::InvalidInput, "modulus must be positive");
}

ExactCoord ExactCoord::operator*(const ExactCoord& o) const {
  return ExactCoord(modulus_ * o.modulus_, phase_ + o.phase_);
}

ExactCoord ExactCoord::pow(std::int64_t k) const {
  Rational mod = 1;
  const Rational base = k >= 0 ? modulus_ : Rational(1) / modulus_;
  for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) mod *= base;
  return ExactCoord(mod, phase_ * k);
}

ExactCoord ExactCoord::rotated(const Rational& turns) const {
  return ExactCoord(modulus_, phase_ + turns);
}

bool is_invariant(const QuotientGerm& g, const MonomialExponent& m) {
  return floor_mod(g.q() * m.e1 + m.e2, g.n()) == 0;
}

SemigroupBasis hilbert_basis(const QuotientGerm& g, std::int64_t bound) {
  if (bound < 2 * g.n()) {
    throw Error(ErrorCode::BoundTooSmall,
                "bound " + std::to_string(bound) + " < 2n = " + std::to_string(2 * g.n()));
  }
  std::vector<MonomialExponent> invariants;
  for (std::int64_t e1 = 0; e1 <= bound; ++e1) {
    for (std::int64_t e2 = 0; e1 + e2 <= bound; ++e2) {
      const MonomialExponent m{e1, e2};
      if ((e1 || e2) && is_invariant(g, m)) invariants.push_back(m);
    }
  }
  // v is decomposable iff some nonzero invariant u < v componentwise leaves
  // v - u nonzero; v - u is then invariant automatically.
  std::vector<MonomialExponent> generators;
  for (const auto& v : invariants) {
    const bool decomposable = std::any_of(invariants.begin(), invariants.end(), [&](const auto& u) {
      return u.e1 <= v.e1 && u.e2 <= v.e2 && u != v;
    });
    if (!decomposable) generators.push_back(v);
  }
  std::sort(generators.begin(), generators.end());
  return SemigroupBasis{g, std::move(generators)};
}

SemigroupBasis hilbert_basis(const QuotientGerm& g) { return hilbert_basis(g, 2 * g.n()); }

std::vector<MonomialExponent> nu_components(const QuotientGerm& g) {
  return {{g.n(), 0}, {0, g.n()}, {1, g.n() - g.q()}};
}

ExactPoint act(const QuotientGerm& g, std::int64_t k, const ExactPoint& p) {
  const Rational step(floor_mod(k, g.n()), g.n());
  return ExactPoint{p.z1.rotated(step * g.q()), p.z2.rotated(step)};
}

ExactCoord eval_monomial(const MonomialExponent& m, const ExactPoint& p) {
  return p.z1.pow(m.e1) * p.z2.pow(m.e2);
}

bool chain_identity_check(const QuotientGerm& g, const ExactPoint& p) {
  const auto nu = nu_components(g);
  // pi keeps the first two coordinates of nu.
  const ExactCoord expected_u = p.z1.pow(g.n());
  const ExactCoord expected_v = p.z2.pow(g.n());
  for (std::int64_t k = 0; k < g.n(); ++k) {
    const ExactPoint rep = act(g, k, p);
    if (eval_monomial(nu[0], rep) != expected_u) return false;
    if (eval_monomial(nu[1], rep) != expected_v) return false;
  }
  return true;
}

bool nu_orbit_invariance(const QuotientGerm& g, const ExactPoint& p) {
  const auto nu = nu_components(g);
  std::vector<ExactCoord> base;
  for (const auto& m : nu) base.push_back(eval_monomial(m, p));
  for (std::int64_t k = 0; k < g.n(); ++k) {
    const ExactPoint moved = act(g, k, p);
    for (std::size_t c = 0; c < nu.size(); ++c) {
      if (eval_monomial(nu[c], moved) != base[c]) return false;
    }
  }
  return true;
}

std::map<std::int64_t, std::int64_t> orbit_size_census(const QuotientGerm& g) {
  const std::int64_t n = g.n();
  std::vector<bool> seen(static_cast<std::size_t>(n * n), false);
  std::map<std::int64_t, std::int64_t> census;
  for (std::int64_t start = 0; start < n * n; ++start) {
    if (seen[start]) continue;
    std::int64_t size = 0;
    std::int64_t i = start / n, j = start % n;
    while (!seen[i * n + j]) {
      seen[i * n + j] = true;
      ++size;
      i = (i + g.q()) % n;
      j = (j + 1) % n;
    }
    ++census[size];
  }
  return census;
}

bool nu_separates_orbits(const QuotientGerm& g) {
  const std::int64_t n = g.n();
  const auto nu = nu_components(g);
  // Orbit label: smallest linear index reached from (i, j).
  auto orbit_label = [&](std::int64_t i, std::int64_t j) {
    std::int64_t best = i * n + j;
    for (std::int64_t k = 1; k < n; ++k) {
      best = std::min(best, floor_mod(i + g.q() * k, n) * n + floor_mod(j + k, n));
    }
    return best;
  };
  using Value = std::tuple<std::string, std::string, std::string>;
  std::map<Value, std::int64_t> label_of_value;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      const ExactPoint p{ExactCoord(1, Rational(i, n)), ExactCoord(1, Rational(j, n))};
      Value value;
      std::get<0>(value) = to_fraction_string(eval_monomial(nu[0], p).phase());
      std::get<1>(value) = to_fraction_string(eval_monomial(nu[1], p).phase());
      std::get<2>(value) = to_fraction_string(eval_monomial(nu[2], p).phase());
      const std::int64_t label = orbit_label(i, j);
      const auto [it, inserted] = label_of_value.emplace(value, label);
      if (!inserted && it->second != label) return false;
    }
  }
  return true;
}

NormalModel normal_model(const LensSpace& lens) {
  if (lens.is_s1_x_s2()) {
    throw Error(ErrorCode::NotApplicable, "S^1xS^2 is not the link of a normal surface germ");
  }
  if (lens.is_sphere()) return NormalModel{std::nullopt, covering_matrix(CoveringData(1, 0, 1, 1))};
  return NormalModel{QuotientGerm(lens.n(), lens.q()),
                     covering_matrix(CoveringData(lens.n(), lens.q(), 1, 1))};
}

}  // namespace lensforge
