#include "piirec/rng.hpp"

namespace piirec {
namespace {

constexpr uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr uint64_t kFnvPrime = 1099511628211ULL;

uint64_t fnv1a(std::string_view s, uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

// splitmix64 finalizer; decorrelates nearby inputs.
uint64_t mix(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

uint64_t derive_seed(uint64_t root, std::string_view label) {
  return mix(root ^ fnv1a(label, kFnvOffset));
}

uint64_t derive_seed(uint64_t root, std::string_view label, uint64_t index) {
  return mix(derive_seed(root, label) + 0x632BE59BD9B4E019ULL * (index + 1));
}

}  // namespace piirec
