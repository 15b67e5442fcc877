#include "autopsy/wire.hpp"

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace autopsy::wire {

Bytes be32(std::uint32_t v) {
  return {static_cast<std::uint8_t>(v >> 24), static_cast<std::uint8_t>(v >> 16),
          static_cast<std::uint8_t>(v >> 8), static_cast<std::uint8_t>(v)};
}

Bytes be64(std::uint64_t v) {
  Bytes out(8);
  for (int i = 0; i < 8; ++i) {
    out[i] = static_cast<std::uint8_t>(v >> (8 * (7 - i)));
  }
  return out;
}

std::uint64_t read_be64(std::span<const std::uint8_t> data) {
  if (data.size() < 8) throw std::invalid_argument("read_be64: short input");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | data[i];
  return v;
}

Bytes int_to_bytes(const Int& x) {
  Bytes out;
  boost::multiprecision::export_bits(x, std::back_inserter(out), 8);
  if (x == 0) out.clear();  // export_bits emits a single 0 byte
  return out;
}

Int int_from_bytes(std::span<const std::uint8_t> data) {
  Int x = 0;
  for (std::uint8_t b : data) {
    x <<= 8;
    x |= b;
  }
  return x;
}

Bytes encode_fields(const std::vector<Bytes>& fields) {
  Bytes out;
  for (const Bytes& f : fields) {
    Bytes len = be32(static_cast<std::uint32_t>(f.size()));
    out.insert(out.end(), len.begin(), len.end());
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

std::optional<std::vector<Bytes>> decode_fields(std::span<const std::uint8_t> data) {
  std::vector<Bytes> fields;
  std::size_t pos = 0;
  while (pos < data.size()) {
    if (data.size() - pos < 4) return std::nullopt;
    std::uint32_t len = 0;
    for (int i = 0; i < 4; ++i) len = (len << 8) | data[pos + i];
    pos += 4;
    if (data.size() - pos < len) return std::nullopt;
    fields.emplace_back(data.begin() + pos, data.begin() + pos + len);
    pos += len;
  }
  return fields;
}

Bytes cat(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  Bytes out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string hex(std::span<const std::uint8_t> data) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  s.reserve(data.size() * 2);
  for (std::uint8_t v : data) {
    s.push_back(digits[v >> 4]);
    s.push_back(digits[v & 0xf]);
  }
  return s;
}

Bytes from_string(std::string_view s) {
  return Bytes(s.begin(), s.end());
}

}  // namespace autopsy::wire
