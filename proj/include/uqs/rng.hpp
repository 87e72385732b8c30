#pragma once

#include <cstdint>
#include <random>

namespace uqs::rng {

/// Uniform double in [0, 1) built from the engine's raw bits. Sidesteps
/// std::uniform_real_distribution, whose output is implementation-defined;
/// reports must be byte-identical for a fixed seed.
inline double uniform01(std::mt19937_64& gen) {
  return double(gen() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * uniform01(gen);
}

/// Uniform integer in [0, n). Plain modulo; the bias is ~n/2^64.
inline std::uint64_t uniform_index(std::mt19937_64& gen, std::uint64_t n) {
  return gen() % n;
}

}  // namespace uqs::rng
