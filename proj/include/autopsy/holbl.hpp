#pragma once

#include <cstdint>
#include <span>

#include "autopsy/ints.hpp"
#include "autopsy/kernels.hpp"
#include "autopsy/numtheory.hpp"
#include "autopsy/primitives.hpp"
#include "autopsy/rng.hpp"

// Identity-based key agreement over an ElGamal group. The KGC holds x_s with
// public y_s = g^x_s and extracts per-user keys
//   variant 1: v = I*k + x_s*u (mod p-1),  I = hash_to_exponent(id)
//   variant 2: v = k + x_s*H(id, u) (mod p-1)
// with public u = g^k. Key agreement combines (u, t, id) pairs into
// g^((v_a+r_a)(v_b+r_b)).
//
// The insider recovery procedures split the key equation with the extended
// Euclidean algorithm and nominate candidates for x_s and k. The candidates
// always satisfy the key congruence, but one congruence in two unknowns does
// not pin the true pair down, so nothing here asserts recovery: verdicts are
// computed from public-value predicates and cross-checked against a
// brute-force oracle at small parameters.
namespace autopsy::holbl {

enum class Variant { v1 = 1, v2 = 2 };

struct KgcPublic {
  numtheory::DhParams params;
  Int y_s;
};

struct HolblKgc {
  numtheory::DhParams params;
  Int x_s;
  Int y_s;

  KgcPublic pub() const { return {params, y_s}; }
};

struct HolblUserKeys {
  Bytes id;
  Int u;  // public key g^k
  Int v;  // private key
  Variant variant;
};

// extract() hands the user only (u, v); the KGC nonce k rides along solely
// as ground truth for the oracle cross-checks.
struct Extraction {
  HolblUserKeys user;
  Int kgc_nonce;
};

struct PeerPublic {
  Bytes id;
  Int u;
  Int t;  // ephemeral g^r
};

// Intermediates of the first-stage recovery, kept so every verdict is
// auditable.
struct RecoveryTrace {
  Variant variant;
  Int q;      // gcd(I, u) (1 for variant 2)
  Int w;      // I/q
  Int z;      // u/q (H(id,u) for variant 2)
  Int alpha;
  Int beta;   // alpha*w + beta*z == 1 when applicable
  Int j;      // v/q when divisible
  Int candidate_x;
  Int candidate_k;
  bool applicable;
};

struct RecoveryVerdict {
  bool x_matches;  // g^candidate_x == y_s
  bool k_matches;  // g^candidate_k == u
};

struct KeyOracle {
  Int true_x;
  Int true_k;
  std::uint64_t candidate_count;  // congruence solutions over [0, p-2]^2
};

struct SecondStageTrace {
  Int q;  // gcd(I_i, u_i)
  Int w;
  Int z;
  Int gamma;
  Int epsilon;
  Int j;  // x_candidate / epsilon (mod p-1) when defined
  Int candidate_v;
  bool applicable;
};

struct ImpersonationResult {
  bool keys_match;
  Int attacker_key;
  Int peer_key;
};

// Digest reduced mod p-1, re-hashed with an appended counter while the
// residue is 0; output lies in [1, p-2].
Int hash_to_exponent(const primitives::Suite& suite, std::span<const std::uint8_t> data,
                     const Int& p);

// H(id, u) for variant 2: hash_to_exponent over the length-prefixed pair.
Int pair_hash(const primitives::Suite& suite, const Bytes& id, const Int& u, const Int& p);

HolblKgc setup(const numtheory::DhParams& params, Rng& rng);

Extraction extract(const primitives::Suite& suite, const HolblKgc& kgc, const Bytes& id,
                   Variant variant, Rng& rng);

// Session key as computed by `own` against the peer's public triple.
Int agree(const primitives::Suite& suite, const HolblUserKeys& own, const Int& own_ephemeral,
          const PeerPublic& peer, const KgcPublic& kgc);

RecoveryTrace insider_recover(const primitives::Suite& suite, const HolblUserKeys& own,
                              const KgcPublic& kgc);

// Public-value predicates only; requires an applicable trace.
RecoveryVerdict verify_recovery(const RecoveryTrace& trace, const KgcPublic& kgc, const Int& own_u);

// Ground truth at p <= 2^16: discrete logs of y_s and u, plus the number of
// (k, x) pairs solving the key congruence.
KeyOracle bruteforce_key_oracle(const primitives::Suite& suite, const KgcPublic& kgc,
                                const HolblUserKeys& own,
                                kernels::Exec exec = kernels::Exec::serial);

constexpr std::uint64_t kOracleGuard = 1u << 16;

// The literal second-stage procedure for deriving another user's private
// key from an x_s candidate; inapplicable when the modular division by
// epsilon is undefined.
SecondStageTrace derive_other_user_key(const primitives::Suite& suite, const Int& x_candidate,
                                       const Bytes& target_id, const Int& target_u,
                                       const KgcPublic& kgc);

// Runs the agreement as the target using candidate_v against an honest peer
// holding valid keys; reports whether both ends derive the same key.
ImpersonationResult impersonate(const primitives::Suite& suite, const Int& candidate_v,
                                const Bytes& target_id, const Int& target_u,
                                const HolblUserKeys& honest_peer, const KgcPublic& kgc, Rng& rng);

}  // namespace autopsy::holbl
