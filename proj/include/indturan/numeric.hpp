#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace indturan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
  return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

// Deterministic generator for a (seed, stream) pair. Separate streams are
// used for independent stages so reordering one stage never perturbs another.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

// Uniform draw from [0, bound) for bound > 0, by rejection on 64-bit limbs.
BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng);

inline constexpr std::uint64_t kDefaultSeed = 20240601;

}  // namespace indturan
