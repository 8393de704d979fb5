#include "lensforge/rational.hpp"

#include <numeric>

namespace lensforge {

Rational reduce_phase(const Rational& phase) {
  const BigInt num = boost::multiprecision::numerator(phase);
  const BigInt den = boost::multiprecision::denominator(phase);
  BigInt rem = num % den;
  if (rem < 0) rem += den;
  return Rational(rem, den);
}

std::string to_fraction_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t floor_mod(std::int64_t value, std::int64_t m) {
  std::int64_t r = value % m;
  return r < 0 ? r + m : r;
}

}  // namespace lensforge
