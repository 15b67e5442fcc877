#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "autopsy/ints.hpp"

namespace autopsy::wire {

Bytes be32(std::uint32_t v);
Bytes be64(std::uint64_t v);
std::uint64_t read_be64(std::span<const std::uint8_t> data);  // first 8 bytes

// Minimal big-endian encoding; 0 encodes as the empty string.
Bytes int_to_bytes(const Int& x);
Int int_from_bytes(std::span<const std::uint8_t> data);

// Length-prefixed concatenation: each field is preceded by its 32-bit
// big-endian byte length. decode returns nullopt on truncated or trailing
// input.
Bytes encode_fields(const std::vector<Bytes>& fields);
std::optional<std::vector<Bytes>> decode_fields(std::span<const std::uint8_t> data);

Bytes cat(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

std::string hex(std::span<const std::uint8_t> data);
Bytes from_string(std::string_view s);

}  // namespace autopsy::wire
