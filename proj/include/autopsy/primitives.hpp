#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "autopsy/bitstring.hpp"
#include "autopsy/ints.hpp"

namespace autopsy::primitives {

// Raw SHA-256, the digest behind the modeled hash (also used for per-trial
// seed derivation in the harness).
std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data);

// Keystream-masked payload plus an integrity tag. Decryption under any key
// other than the encrypting one fails the tag check except with probability
// 2^-L.
struct CipherText {
  Bytes body;
  Bitstring tag;

  bool operator==(const CipherText&) const = default;
};

// Additive group Z_n standing in for a curve group: elements are residues
// 0..n-1 under addition mod n.
struct AdditiveGroupParams {
  Int n;
};

// 64-bit prime.
AdditiveGroupParams default_group();

// The modeled primitive set at a fixed output width L: hash, authenticated
// stream cipher, map-to-group hash, and the L-bit encoding of group elements
// that lets protocol algebra XOR them with hashes.
class Suite {
 public:
  explicit Suite(std::size_t hash_bits = 256);

  std::size_t hash_bits() const { return bits_; }

  // Counter-suffixed SHA-256 stream truncated to exactly L bits.
  Bitstring hash(std::span<const std::uint8_t> data) const;
  Bitstring hash(const Bitstring& data) const { return hash(data.bytes()); }

  CipherText encrypt(const Bitstring& key, std::span<const std::uint8_t> payload) const;
  // nullopt on tag mismatch: the protocols' "decrypt and check" steps detect
  // wrong keys through this.
  std::optional<Bytes> decrypt(const Bitstring& key, const CipherText& ct) const;

  Int map_to_group(std::span<const std::uint8_t> data, const AdditiveGroupParams& params) const;

  // Big-endian, zero-padded to L bits; decode rejects values >= p.
  Bitstring encode_element(const Int& x) const;
  Int decode_element(const Bitstring& b, const Int& p) const;

  // Identities and passwords entering XOR algebra are first right-aligned
  // into L bits.
  Bitstring pad_to_width(std::span<const std::uint8_t> data) const;

 private:
  std::size_t bits_;

  Bytes digest_stream(std::span<const std::uint8_t> data, std::size_t nbytes) const;
};

}  // namespace autopsy::primitives
