#include "edalab/rng.hpp"

namespace edalab {

std::uint64_t derive_seed(std::uint64_t master,
                          std::span<const std::uint64_t> indices) noexcept {
  std::uint64_t s = master;
  for (std::uint64_t idx : indices) {
    s = mix64((s + kGolden) ^ mix64(idx + kGolden));
  }
  return s;
}

}  // namespace edalab
