#include "autopsy/rng.hpp"

#include <stdexcept>

namespace autopsy {

Int Rng::below(const Int& bound) {
  if (bound < 1) {
    throw std::invalid_argument("rng bound must be positive");
  }
  if (bound == 1) return 0;
  const std::size_t k = bit_length(bound - 1);
  const std::size_t words = (k + 63) / 64;
  while (true) {
    Int v = 0;
    for (std::size_t i = 0; i < words; ++i) {
      v <<= 64;
      v |= next_u64();
    }
    v &= (Int(1) << k) - 1;
    if (v < bound) return v;
  }
}

Int Rng::between(const Int& lo, const Int& hi) {
  if (lo > hi) {
    throw std::invalid_argument("rng range is empty");
  }
  return lo + below(hi - lo + 1);
}

Bytes Rng::bytes(std::size_t n) {
  Bytes out;
  out.reserve(n);
  while (out.size() < n) {
    std::uint64_t w = next_u64();
    for (int i = 7; i >= 0 && out.size() < n; --i) {
      out.push_back(static_cast<std::uint8_t>(w >> (8 * i)));
    }
  }
  return out;
}

Bitstring Rng::bits(std::size_t nbits) {
  return Bitstring::from_bytes(bytes((nbits + 7) / 8), nbits);
}

}  // namespace autopsy
