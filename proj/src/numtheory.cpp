#include "autopsy/numtheory.hpp"

#include <stdexcept>

#include "autopsy/kernels.hpp"

namespace autopsy::numtheory {

namespace {

constexpr int kSmallPrimes[] = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,
    59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131,
    137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223,
    227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311};

// One Miller-Rabin round for witness a; n odd, n > 3.
bool miller_rabin_round(const Int& n, const Int& a) {
  const Int n1 = n - 1;
  Int d = n1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Int x = mod_exp(a, d, n);
  if (x == 1 || x == n1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n1) return true;
  }
  return false;
}

}  // namespace

BezoutResult ext_gcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0) {
    throw std::invalid_argument("ext_gcd(0, 0) is undefined");
  }
  Int r0 = boost::multiprecision::abs(a), r1 = boost::multiprecision::abs(b);
  Int s0 = 1, s1 = 0;
  Int t0 = 0, t1 = 1;
  while (r1 != 0) {
    const Int qt = r0 / r1;
    Int r2 = r0 - qt * r1;
    r0 = r1;
    r1 = r2;
    Int s2 = s0 - qt * s1;
    s0 = s1;
    s1 = s2;
    Int t2 = t0 - qt * t1;
    t0 = t1;
    t1 = t2;
  }
  if (a < 0) s0 = -s0;
  if (b < 0) t0 = -t0;
  return {r0, s0, t0};
}

Int mod_norm(const Int& a, const Int& m) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Int mod_exp(const Int& base, const Int& e, const Int& p) {
  if (p < 2) throw std::invalid_argument("mod_exp modulus must be >= 2");
  if (e < 0) throw std::invalid_argument("mod_exp exponent must be non-negative");
  Int b = mod_norm(base, p);
  Int acc = 1 % p;
  Int exp = e;
  while (exp > 0) {
    if ((exp & 1) != 0) acc = acc * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return acc;
}

ModInverse mod_inverse(const Int& a, const Int& m) {
  if (m < 2) throw std::invalid_argument("mod_inverse modulus must be >= 2");
  const Int an = mod_norm(a, m);
  auto bez = ext_gcd(an, m);
  if (bez.g != 1) return {bez.g, std::nullopt};
  return {bez.g, mod_norm(bez.alpha, m)};
}

bool is_probable_prime(const Int& n, Rng& rng, int rounds) {
  if (n < 2) return false;
  for (int q : kSmallPrimes) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  for (int i = 0; i < rounds; ++i) {
    const Int a = rng.between(2, n - 2);
    if (!miller_rabin_round(n, a)) return false;
  }
  return true;
}

DhParams gen_params(unsigned bits, std::uint64_t seed) {
  if (bits < 8 || bits > 512) {
    throw std::invalid_argument("gen_params: bits must lie in [8, 512]");
  }
  Rng rng(seed);
  const Int qlo = Int(1) << (bits - 2);

  // Safe prime p = 2q + 1: cheap two-round screen on both halves first,
  // full-strength confirmation after.
  Int p, q;
  while (true) {
    q = qlo + rng.below(qlo);
    q |= 1;
    if (!is_probable_prime(q, rng, 2)) continue;
    p = 2 * q + 1;
    if (!is_probable_prime(p, rng, 2)) continue;
    if (is_probable_prime(q, rng, 40) && is_probable_prime(p, rng, 40)) break;
  }

  // p-1 = 2q, so g generates the full group iff g^2 != 1 and g^q != 1.
  Int g;
  while (true) {
    g = rng.between(2, p - 2);
    if (mod_exp(g, 2, p) != 1 && mod_exp(g, q, p) != 1) break;
  }
  return {p, g, bits};
}

std::optional<Int> dlog_bruteforce(const Int& g, const Int& y, const Int& p) {
  if (p < 2) throw std::invalid_argument("dlog modulus must be >= 2");
  if (p > kDlogGuard) {
    throw std::invalid_argument("dlog_bruteforce refused: modulus above 2^20 guard");
  }
  const auto pu = static_cast<std::uint64_t>(p);
  const auto gu = static_cast<std::uint64_t>(mod_norm(g, p));
  const auto yu = static_cast<std::uint64_t>(mod_norm(y, p));
  auto x = kernels::dlog_scan_serial(gu, yu, pu);
  if (!x) return std::nullopt;
  return Int(*x);
}

}  // namespace autopsy::numtheory
