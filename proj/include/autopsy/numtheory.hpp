#pragma once

#include <cstdint>
#include <optional>

#include "autopsy/ints.hpp"
#include "autopsy/rng.hpp"

namespace autopsy::numtheory {

// alpha*a + beta*b == g == gcd(a, b) >= 0. Coefficients are whatever pair
// the algorithm produces; only the identity is contractual.
struct BezoutResult {
  Int g;
  Int alpha;
  Int beta;
};

// Throws std::invalid_argument when both inputs are zero.
BezoutResult ext_gcd(const Int& a, const Int& b);

// Residue of a in [0, m).
Int mod_norm(const Int& a, const Int& m);

// Square-and-multiply base^e mod p, p >= 2, e >= 0.
Int mod_exp(const Int& base, const Int& e, const Int& p);

struct ModInverse {
  Int gcd;
  std::optional<Int> value;  // empty when gcd != 1
};

// m >= 2. Callers must handle the non-invertible case: the exponent modulus
// p-1 is even, so shared factors are common.
ModInverse mod_inverse(const Int& a, const Int& m);

// Miller-Rabin with `rounds` witnesses drawn from rng, after trial division
// by small primes. Error probability < 4^-rounds; the default meets 2^-80.
bool is_probable_prime(const Int& n, Rng& rng, int rounds = 40);

struct DhParams {
  Int p;          // safe prime, p = 2q + 1
  Int g;          // generator of the full multiplicative group mod p
  unsigned bits;  // size of p in bits

  Int q() const { return (p - 1) / 2; }
};

// Deterministic in seed. bits must lie in [8, 512].
DhParams gen_params(unsigned bits, std::uint64_t seed);

// Smallest x >= 0 with g^x == y (mod p), or nullopt. Guarded at p <= 2^20;
// larger moduli are refused with std::invalid_argument. This is the serial
// reference; kernels.hpp holds the OpenMP variant.
std::optional<Int> dlog_bruteforce(const Int& g, const Int& y, const Int& p);

constexpr std::uint64_t kDlogGuard = 1u << 20;

}  // namespace autopsy::numtheory
