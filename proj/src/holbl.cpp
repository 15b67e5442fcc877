#include "autopsy/holbl.hpp"

#include <stdexcept>

#include "autopsy/wire.hpp"

namespace autopsy::holbl {

using numtheory::ext_gcd;
using numtheory::mod_exp;
using numtheory::mod_norm;

Int hash_to_exponent(const primitives::Suite& suite, std::span<const std::uint8_t> data,
                     const Int& p) {
  const Int m = p - 1;
  Int e = wire::int_from_bytes(suite.hash(data).bytes()) % m;
  std::uint32_t counter = 1;
  while (e == 0) {
    const Bytes salted = wire::cat(data, wire::be32(counter++));
    e = wire::int_from_bytes(suite.hash(salted).bytes()) % m;
  }
  return e;
}

Int pair_hash(const primitives::Suite& suite, const Bytes& id, const Int& u, const Int& p) {
  return hash_to_exponent(suite, wire::encode_fields({id, wire::int_to_bytes(u)}), p);
}

HolblKgc setup(const numtheory::DhParams& params, Rng& rng) {
  const Int x_s = rng.between(1, params.p - 2);
  return {params, x_s, mod_exp(params.g, x_s, params.p)};
}

Extraction extract(const primitives::Suite& suite, const HolblKgc& kgc, const Bytes& id,
                   Variant variant, Rng& rng) {
  const Int& p = kgc.params.p;
  const Int k = rng.between(1, p - 2);
  const Int u = mod_exp(kgc.params.g, k, p);
  Int v;
  if (variant == Variant::v1) {
    const Int i_mult = hash_to_exponent(suite, id, p);
    v = mod_norm(i_mult * k + kgc.x_s * u, p - 1);
  } else {
    const Int h = pair_hash(suite, id, u, p);
    v = mod_norm(k + kgc.x_s * h, p - 1);
  }
  return {HolblUserKeys{id, u, v, variant}, k};
}

Int agree(const primitives::Suite& suite, const HolblUserKeys& own, const Int& own_ephemeral,
          const PeerPublic& peer, const KgcPublic& kgc) {
  const Int& p = kgc.params.p;
  Int base;
  if (own.variant == Variant::v1) {
    const Int i_peer = hash_to_exponent(suite, peer.id, p);
    base = mod_exp(peer.u, i_peer, p) * mod_exp(kgc.y_s, peer.u, p) % p * peer.t % p;
  } else {
    const Int h_peer = pair_hash(suite, peer.id, peer.u, p);
    base = peer.u * mod_exp(kgc.y_s, h_peer, p) % p * peer.t % p;
  }
  return mod_exp(base, mod_norm(own.v + own_ephemeral, p - 1), p);
}

RecoveryTrace insider_recover(const primitives::Suite& suite, const HolblUserKeys& own,
                              const KgcPublic& kgc) {
  const Int& p = kgc.params.p;
  const Int m = p - 1;
  RecoveryTrace trace{};
  trace.variant = own.variant;

  if (own.variant == Variant::v1) {
    const Int i_self = hash_to_exponent(suite, own.id, p);
    trace.q = boost::multiprecision::gcd(i_self, own.u);
    trace.w = i_self / trace.q;
    trace.z = own.u / trace.q;
    const auto bez = ext_gcd(trace.w, trace.z);
    trace.alpha = bez.alpha;
    trace.beta = bez.beta;
    if (own.v % trace.q != 0) {
      trace.applicable = false;  // the procedure needs j = v/q to be integral
      return trace;
    }
    trace.j = own.v / trace.q;
    trace.candidate_k = mod_norm(trace.alpha * trace.j, m);
    trace.candidate_x = mod_norm(trace.beta * trace.j, m);
    trace.applicable = true;
  } else {
    const Int h = pair_hash(suite, own.id, own.u, p);
    trace.q = 1;
    trace.w = 1;
    trace.z = h;
    const auto bez = ext_gcd(1, h);  // gcd(1, h) = 1 always
    trace.alpha = bez.alpha;
    trace.beta = bez.beta;
    trace.j = own.v;
    trace.candidate_k = mod_norm(trace.alpha * own.v, m);
    trace.candidate_x = mod_norm(trace.beta * own.v, m);
    trace.applicable = true;
  }
  return trace;
}

RecoveryVerdict verify_recovery(const RecoveryTrace& trace, const KgcPublic& kgc,
                                const Int& own_u) {
  if (!trace.applicable) {
    throw std::invalid_argument("verify_recovery: trace is not applicable");
  }
  const Int& p = kgc.params.p;
  return {mod_exp(kgc.params.g, trace.candidate_x, p) == kgc.y_s,
          mod_exp(kgc.params.g, trace.candidate_k, p) == own_u};
}

KeyOracle bruteforce_key_oracle(const primitives::Suite& suite, const KgcPublic& kgc,
                                const HolblUserKeys& own, kernels::Exec exec) {
  const Int& p = kgc.params.p;
  if (p > kOracleGuard) {
    throw std::invalid_argument("bruteforce_key_oracle refused: modulus above 2^16 guard");
  }
  const auto pu = static_cast<std::uint64_t>(p);
  const auto gu = static_cast<std::uint64_t>(kgc.params.g);

  const auto true_x = kernels::dlog_scan(gu, static_cast<std::uint64_t>(kgc.y_s), pu, exec);
  const auto true_k = kernels::dlog_scan(gu, static_cast<std::uint64_t>(own.u), pu, exec);
  if (!true_x || !true_k) {
    throw std::logic_error("full-order generator must cover y_s and u");
  }

  const std::uint64_t m = pu - 1;
  std::uint64_t a, b;
  if (own.variant == Variant::v1) {
    a = static_cast<std::uint64_t>(hash_to_exponent(suite, own.id, p));
    b = static_cast<std::uint64_t>(own.u);
  } else {
    a = 1;
    b = static_cast<std::uint64_t>(pair_hash(suite, own.id, own.u, p));
  }
  const std::uint64_t count =
      kernels::congruence_count(a, b, static_cast<std::uint64_t>(own.v), m, exec);
  return {Int(*true_x), Int(*true_k), count};
}

SecondStageTrace derive_other_user_key(const primitives::Suite& suite, const Int& x_candidate,
                                       const Bytes& target_id, const Int& target_u,
                                       const KgcPublic& kgc) {
  const Int& p = kgc.params.p;
  const Int m = p - 1;
  SecondStageTrace trace{};
  const Int i_target = hash_to_exponent(suite, target_id, p);
  trace.q = boost::multiprecision::gcd(i_target, target_u);
  trace.w = i_target / trace.q;
  trace.z = target_u / trace.q;
  const auto bez = ext_gcd(trace.w, trace.z);
  trace.gamma = bez.alpha;
  trace.epsilon = bez.beta;

  // j_i = x_candidate / epsilon, taken as modular division; undefined when
  // epsilon shares a factor with p-1.
  const auto inv = numtheory::mod_inverse(mod_norm(trace.epsilon, m), m);
  if (!inv.value) {
    trace.applicable = false;
    return trace;
  }
  trace.j = mod_norm(x_candidate * *inv.value, m);
  trace.candidate_v = mod_norm(trace.j * trace.q, m);
  trace.applicable = true;
  return trace;
}

ImpersonationResult impersonate(const primitives::Suite& suite, const Int& candidate_v,
                                const Bytes& target_id, const Int& target_u,
                                const HolblUserKeys& honest_peer, const KgcPublic& kgc, Rng& rng) {
  const Int& p = kgc.params.p;
  const Int r_attacker = rng.between(1, p - 2);
  const Int t_attacker = mod_exp(kgc.params.g, r_attacker, p);
  const Int r_peer = rng.between(1, p - 2);
  const Int t_peer = mod_exp(kgc.params.g, r_peer, p);

  const HolblUserKeys masquerade{target_id, target_u, candidate_v, honest_peer.variant};
  const Int attacker_key =
      agree(suite, masquerade, r_attacker, {honest_peer.id, honest_peer.u, t_peer}, kgc);
  const Int peer_key =
      agree(suite, honest_peer, r_peer, {target_id, target_u, t_attacker}, kgc);
  return {attacker_key == peer_key, attacker_key, peer_key};
}

}  // namespace autopsy::holbl
