#include "autopsy/bitstring.hpp"

#include <algorithm>
#include <stdexcept>

namespace autopsy {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";
}

Bitstring Bitstring::zeros(std::size_t bits) {
  Bitstring b;
  b.bits_ = bits;
  b.bytes_.assign((bits + 7) / 8, 0);
  return b;
}

Bitstring Bitstring::ones(std::size_t bits) {
  Bitstring b;
  b.bits_ = bits;
  b.bytes_.assign((bits + 7) / 8, 0xff);
  b.mask_top();
  return b;
}

Bitstring Bitstring::from_bytes(std::span<const std::uint8_t> data, std::size_t bits) {
  Bitstring b = zeros(bits);
  const std::size_t n = b.bytes_.size();
  if (data.size() >= n) {
    std::copy(data.end() - n, data.end(), b.bytes_.begin());
  } else {
    std::copy(data.begin(), data.end(), b.bytes_.begin() + (n - data.size()));
  }
  b.mask_top();
  return b;
}

bool Bitstring::is_zero() const {
  return std::all_of(bytes_.begin(), bytes_.end(), [](std::uint8_t v) { return v == 0; });
}

Bitstring Bitstring::operator^(const Bitstring& other) const {
  if (bits_ != other.bits_) {
    throw std::invalid_argument("bitstring width mismatch in xor");
  }
  Bitstring out = *this;
  for (std::size_t i = 0; i < bytes_.size(); ++i) {
    out.bytes_[i] ^= other.bytes_[i];
  }
  return out;
}

std::string Bitstring::hex() const {
  std::string s;
  s.reserve(bytes_.size() * 2);
  for (std::uint8_t v : bytes_) {
    s.push_back(kHexDigits[v >> 4]);
    s.push_back(kHexDigits[v & 0xf]);
  }
  return s;
}

void Bitstring::mask_top() {
  const std::size_t extra = bytes_.size() * 8 - bits_;
  if (extra > 0 && !bytes_.empty()) {
    bytes_[0] &= static_cast<std::uint8_t>(0xff >> extra);
  }
}

}  // namespace autopsy
