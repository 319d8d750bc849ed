#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace contamkit {

// FNV-1a 64-bit over raw bytes. Stable across platforms and releases; used
// for seed derivation and content fingerprints, never for security.
uint64_t fnv1a64(std::string_view bytes);

// Child seed for a labelled sub-task: fnv1a64 of "<master>:<label>".
uint64_t derive_seed(uint64_t master, std::string_view label);

// Deterministic random source: std::mt19937_64 (bit-exact everywhere by
// the standard) plus explicit rejection sampling, because the standard
// distributions are implementation-defined.
class SplitRng {
 public:
  explicit SplitRng(uint64_t seed) : seed_(seed), engine_(seed) {}

  uint64_t seed() const { return seed_; }
  uint64_t next() { return engine_(); }

  // Unbiased draw in [0, bound); bound must be > 0.
  uint64_t below(uint64_t bound);

  // Uniform draw from [0, n) excluding `exclude`; n must be >= 2.
  std::size_t index_excluding(std::size_t n, std::size_t exclude);

  SplitRng split(std::string_view label) const {
    return SplitRng(derive_seed(seed_, label));
  }

  // Fisher-Yates, iterating from the back.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace contamkit
