#pragma once

#include <cstdint>
#include <random>

namespace kcenter {

// Stateless mixer used to derive independent seed streams from one master
// seed. Trace generation and algorithm randomness draw from separate streams
// so the update sequence never depends on the algorithm's coin flips.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream));
}

// Uniform draw in [0, bound). std::uniform_int_distribution is
// implementation-defined, which would make generated traces differ between
// standard libraries; plain modulo keeps fixtures portable and the bias is
// irrelevant at our bounds.
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound) {
  return bound ? rng() % bound : 0;
}

// Uniform double in [0, 1) with 53 random bits.
inline double rng_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace kcenter
