#include "contamkit/rng.hpp"

#include <string>

namespace contamkit {

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t derive_seed(uint64_t master, std::string_view label) {
  std::string key = std::to_string(master);
  key.push_back(':');
  key.append(label);
  return fnv1a64(key);
}

uint64_t SplitRng::below(uint64_t bound) {
  // Reject draws from the biased tail of the 64-bit range.
  uint64_t limit = (~uint64_t{0}) - (~uint64_t{0}) % bound;
  uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::size_t SplitRng::index_excluding(std::size_t n, std::size_t exclude) {
  uint64_t r = below(n - 1);
  return r >= exclude ? static_cast<std::size_t>(r) + 1
                      : static_cast<std::size_t>(r);
}

}  // namespace contamkit
