#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <omp.h>

namespace autopsy::kernels {

enum class Exec { serial, parallel };

// Smallest x in [0, p-2] with g^x == y (mod p), scanning by incremental
// multiplication. Values must fit the u64 fast path (p <= 2^20 in practice).
std::optional<std::uint64_t> dlog_scan_serial(std::uint64_t g, std::uint64_t y, std::uint64_t p);
std::optional<std::uint64_t> dlog_scan_parallel(std::uint64_t g, std::uint64_t y, std::uint64_t p);
std::optional<std::uint64_t> dlog_scan(std::uint64_t g, std::uint64_t y, std::uint64_t p, Exec exec);

// Number of pairs (k, x) in [0, m)^2 with a*k + b*x == v (mod m), by
// enumeration over k.
std::uint64_t congruence_count_serial(std::uint64_t a, std::uint64_t b, std::uint64_t v, std::uint64_t m);
std::uint64_t congruence_count_parallel(std::uint64_t a, std::uint64_t b, std::uint64_t v, std::uint64_t m);
std::uint64_t congruence_count(std::uint64_t a, std::uint64_t b, std::uint64_t v, std::uint64_t m, Exec exec);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m);

// Applies fn to every index in [0, n); results land at their index, so the
// output is identical for both execution modes. fn must be safe to call from
// multiple threads and must not throw.
template <typename F>
auto map_indexed(std::uint64_t n, Exec exec, F&& fn)
    -> std::vector<decltype(fn(std::uint64_t{}))> {
  std::vector<decltype(fn(std::uint64_t{}))> out(n);
  if (exec == Exec::serial) {
    for (std::uint64_t i = 0; i < n; ++i) out[i] = fn(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      out[static_cast<std::uint64_t>(i)] = fn(static_cast<std::uint64_t>(i));
    }
  }
  return out;
}

}  // namespace autopsy::kernels
