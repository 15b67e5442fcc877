#include "autopsy/primitives.hpp"

#include <stdexcept>

#include <openssl/evp.h>

#include "autopsy/wire.hpp"

namespace autopsy::primitives {

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data) {
  std::array<std::uint8_t, 32> out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != out.size()) {
    throw std::runtime_error("SHA-256 failed");
  }
  return out;
}

AdditiveGroupParams default_group() {
  return {Int("18446744073709551557")};  // largest 64-bit prime
}

Suite::Suite(std::size_t hash_bits) : bits_(hash_bits) {
  if (hash_bits == 0) throw std::invalid_argument("hash width must be positive");
}

Bytes Suite::digest_stream(std::span<const std::uint8_t> data, std::size_t nbytes) const {
  Bytes out;
  out.reserve(nbytes);
  std::uint32_t counter = 0;
  while (out.size() < nbytes) {
    const Bytes block = wire::cat(data, wire::be32(counter++));
    const auto digest = sha256(block);
    out.insert(out.end(), digest.begin(), digest.end());
  }
  out.resize(nbytes);
  return out;
}

Bitstring Suite::hash(std::span<const std::uint8_t> data) const {
  return Bitstring::from_bytes(digest_stream(data, (bits_ + 7) / 8), bits_);
}

CipherText Suite::encrypt(const Bitstring& key, std::span<const std::uint8_t> payload) const {
  Bytes body(payload.begin(), payload.end());
  std::uint32_t counter = 0;
  std::size_t pos = 0;
  while (pos < body.size()) {
    const Bitstring block = hash(wire::cat(key.bytes(), wire::be32(counter++)));
    for (std::uint8_t ks : block.bytes()) {
      if (pos >= body.size()) break;
      body[pos++] ^= ks;
    }
  }
  const Bitstring tag = hash(wire::cat(key.bytes(), body));
  return {std::move(body), tag};
}

std::optional<Bytes> Suite::decrypt(const Bitstring& key, const CipherText& ct) const {
  if (hash(wire::cat(key.bytes(), ct.body)) != ct.tag) {
    return std::nullopt;  // integrity failure
  }
  CipherText unmasked = encrypt(key, ct.body);  // keystream is its own inverse
  return std::move(unmasked.body);
}

Int Suite::map_to_group(std::span<const std::uint8_t> data,
                        const AdditiveGroupParams& params) const {
  return wire::int_from_bytes(hash(data).bytes()) % params.n;
}

Bitstring Suite::encode_element(const Int& x) const {
  if (x < 0) throw std::invalid_argument("encode_element: negative value");
  if (bit_length(x) > bits_) {
    throw std::invalid_argument("encode_element: value does not fit the hash width");
  }
  return Bitstring::from_bytes(wire::int_to_bytes(x), bits_);
}

Int Suite::decode_element(const Bitstring& b, const Int& p) const {
  const Int x = wire::int_from_bytes(b.bytes());
  if (x >= p) throw std::invalid_argument("decode_element: value out of range");
  return x;
}

Bitstring Suite::pad_to_width(std::span<const std::uint8_t> data) const {
  return Bitstring::from_bytes(data, bits_);
}

}  // namespace autopsy::primitives
