#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "autopsy/ints.hpp"

namespace autopsy {

// Fixed-width string of exactly `bits()` bits, stored big-endian with the
// unused high bits of the leading byte held at zero. All XOR operands must
// agree on the width.
class Bitstring {
 public:
  Bitstring() = default;

  static Bitstring zeros(std::size_t bits);
  static Bitstring ones(std::size_t bits);

  // Right-aligns `data` into a width of `bits`: shorter inputs are padded
  // with leading zero bits, longer inputs keep their trailing (low-order)
  // bytes.
  static Bitstring from_bytes(std::span<const std::uint8_t> data, std::size_t bits);

  std::size_t bits() const { return bits_; }
  const Bytes& bytes() const { return bytes_; }
  bool is_zero() const;

  Bitstring operator^(const Bitstring& other) const;  // width mismatch -> std::invalid_argument
  bool operator==(const Bitstring& other) const = default;

  std::string hex() const;  // lowercase, ceil(bits/8)*2 digits

 private:
  std::size_t bits_ = 0;
  Bytes bytes_;

  void mask_top();
};

}  // namespace autopsy
