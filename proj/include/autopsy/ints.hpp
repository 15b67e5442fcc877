#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace autopsy {

using Int = boost::multiprecision::cpp_int;
using Bytes = std::vector<std::uint8_t>;

// Number of bits in the binary representation of |x|; 0 for x == 0.
inline std::size_t bit_length(const Int& x) {
  if (x == 0) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(x)) + 1;
}

}  // namespace autopsy
