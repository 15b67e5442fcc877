#pragma once

#include <cstdint>
#include <random>

#include "autopsy/bitstring.hpp"
#include "autopsy/ints.hpp"

namespace autopsy {

// Deterministic seeded PRNG. Every random value in a run flows from one of
// these; mt19937_64 output is fixed by the standard, so runs reproduce
// bit-identically across platforms. Ranged draws use rejection sampling
// instead of std::uniform_int_distribution, whose mapping is
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, bound), bound >= 1.
  Int below(const Int& bound);

  // Uniform in [lo, hi], inclusive, lo <= hi.
  Int between(const Int& lo, const Int& hi);

  Bytes bytes(std::size_t n);
  Bitstring bits(std::size_t nbits);

 private:
  std::mt19937_64 gen_;
};

}  // namespace autopsy
