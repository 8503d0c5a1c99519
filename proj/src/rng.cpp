#include "netvuln/rng.hpp"

#include <stdexcept>

namespace netvuln {

std::uint64_t derive_seed(std::uint64_t base, StreamPurpose purpose,
                          std::initializer_list<std::uint64_t> indices) {
  std::uint64_t h = mix64(base ^ mix64(static_cast<std::uint64_t>(purpose)));
  for (auto index : indices) h = mix64(h ^ mix64(index));
  return h;
}

std::uint64_t Rng::uniform_index(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_index: bound must be positive");
  // Rejection on the top of the range keeps the result unbiased.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

}  // namespace netvuln
