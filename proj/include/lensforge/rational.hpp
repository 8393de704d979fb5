#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace lensforge {

// Arbitrary precision exact rationals. Monomial values such as (p/q)^n grow
// past 64 bits quickly, so everything exact goes through this type.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Reduces a rational phase (fraction of a full turn) into [0, 1).
Rational reduce_phase(const Rational& phase);

// Lowest-terms "p/q" string; integers are still written with "/1".
std::string to_fraction_string(const Rational& value);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

// Floor-style modulus: result is always in [0, m) for m > 0.
std::int64_t floor_mod(std::int64_t value, std::int64_t m);

}  // namespace lensforge
