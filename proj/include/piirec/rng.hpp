#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace piirec {

// Derives an independent child seed from a root seed and a label. Every
// randomized stage draws its seed through this, so stages are reproducible
// in isolation and insensitive to scheduling order.
uint64_t derive_seed(uint64_t root, std::string_view label);
uint64_t derive_seed(uint64_t root, std::string_view label, uint64_t index);

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace piirec
