#include "autopsy/kernels.hpp"

#include <limits>
#include <numeric>

namespace autopsy::kernels {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  std::uint64_t b = base % m;
  while (e > 0) {
    if (e & 1) acc = mulmod(acc, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return acc;
}

std::optional<std::uint64_t> dlog_scan_serial(std::uint64_t g, std::uint64_t y, std::uint64_t p) {
  g %= p;
  y %= p;
  std::uint64_t acc = 1 % p;
  for (std::uint64_t x = 0; x + 1 < p; ++x) {
    if (acc == y) return x;
    acc = mulmod(acc, g, p);
  }
  return std::nullopt;
}

std::optional<std::uint64_t> dlog_scan_parallel(std::uint64_t g, std::uint64_t y, std::uint64_t p) {
  g %= p;
  y %= p;
  const std::uint64_t total = p - 1;  // candidate exponents [0, total)
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t best = kNone;
#pragma omp parallel
  {
    const auto t = static_cast<std::uint64_t>(omp_get_thread_num());
    const auto nt = static_cast<std::uint64_t>(omp_get_num_threads());
    const std::uint64_t lo = total / nt * t + std::min(t, total % nt);
    const std::uint64_t hi = lo + total / nt + (t < total % nt ? 1 : 0);
    std::uint64_t local = kNone;
    if (lo < hi) {
      std::uint64_t acc = powmod(g, lo, p);
      for (std::uint64_t x = lo; x < hi; ++x) {
        if (acc == y) {
          local = x;  // first hit in the chunk is the chunk minimum
          break;
        }
        acc = mulmod(acc, g, p);
      }
    }
#pragma omp critical
    {
      if (local < best) best = local;
    }
  }
  if (best == kNone) return std::nullopt;
  return best;
}

std::optional<std::uint64_t> dlog_scan(std::uint64_t g, std::uint64_t y, std::uint64_t p,
                                       Exec exec) {
  return exec == Exec::serial ? dlog_scan_serial(g, y, p) : dlog_scan_parallel(g, y, p);
}

namespace {

// Fixing k leaves b*x == v - a*k (mod m), which has d = gcd(b, m) solutions
// in [0, m) when d divides the right side, else none.
inline std::uint64_t solutions_for_k(std::uint64_t a, std::uint64_t d, std::uint64_t v,
                                     std::uint64_t m, std::uint64_t k) {
  const std::uint64_t rhs = (v + m - mulmod(a, k, m)) % m;
  return rhs % d == 0 ? d : 0;
}

}  // namespace

std::uint64_t congruence_count_serial(std::uint64_t a, std::uint64_t b, std::uint64_t v,
                                      std::uint64_t m) {
  a %= m;
  b %= m;
  v %= m;
  const std::uint64_t d = std::gcd(b, m);  // gcd(0, m) == m
  std::uint64_t count = 0;
  for (std::uint64_t k = 0; k < m; ++k) {
    count += solutions_for_k(a, d, v, m, k);
  }
  return count;
}

std::uint64_t congruence_count_parallel(std::uint64_t a, std::uint64_t b, std::uint64_t v,
                                        std::uint64_t m) {
  a %= m;
  b %= m;
  v %= m;
  const std::uint64_t d = std::gcd(b, m);
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(m); ++k) {
    count += solutions_for_k(a, d, v, m, static_cast<std::uint64_t>(k));
  }
  return count;
}

std::uint64_t congruence_count(std::uint64_t a, std::uint64_t b, std::uint64_t v, std::uint64_t m,
                               Exec exec) {
  return exec == Exec::serial ? congruence_count_serial(a, b, v, m)
                              : congruence_count_parallel(a, b, v, m);
}

}  // namespace autopsy::kernels
