#include "autopsy/bindu.hpp"

#include <stdexcept>

#include "autopsy/wire.hpp"

namespace autopsy::bindu {

using numtheory::mod_exp;
using primitives::CipherText;
using primitives::Suite;

namespace {

Bitstring hashed_id_secret(const Suite& suite, const Bytes& id, const Bitstring& s) {
  return suite.hash(suite.pad_to_width(id) ^ s);  // H(id XOR s)
}

std::int64_t read_stamp(const Bytes& field) {
  if (field.size() != 8) throw std::invalid_argument("bad timestamp field");
  return static_cast<std::int64_t>(wire::read_be64(field));
}

Bytes stamp_bytes(std::int64_t t) {
  return wire::be64(static_cast<std::uint64_t>(t));
}

// Both login paths share everything past M: pick x, form U and R from M and
// the card's i value, and seal (r, id, t) under R.
std::pair<BinduLoginRequest, BinduClientState> build_login(const Suite& suite, const Bitstring& m_masked,
                                                           const Bitstring& i_value, const Bytes& id,
                                                           const numtheory::DhParams& params,
                                                           const netsim::Clock& clock, Rng& rng) {
  const Int x = rng.between(1, params.p - 2);
  const Int r = mod_exp(params.g, x, params.p);
  const Bitstring r_bits = suite.encode_element(r);
  const Bitstring u = m_masked ^ r_bits;
  const Bitstring r_key = i_value ^ r_bits;
  const std::int64_t t = clock.now;
  const Bytes payload =
      wire::encode_fields({wire::int_to_bytes(r), id, stamp_bytes(t)});
  BinduLoginRequest req{u, t, suite.encrypt(r_key, payload)};
  BinduClientState state{x, r, r_bits, r_key};
  return {std::move(req), std::move(state)};
}

}  // namespace

BinduCard register_user(const Suite& suite, const Bytes& id, const Bytes& pw,
                        const BinduServer& server) {
  const Bitstring hid = hashed_id_secret(suite, id, server.s);
  return {hid ^ suite.hash(server.s) ^ suite.hash(pw), hid ^ server.s};
}

std::pair<BinduLoginRequest, BinduClientState> login_request(const Suite& suite,
                                                             const BinduCard& card,
                                                             const Bytes& id, const Bytes& pw,
                                                             const numtheory::DhParams& params,
                                                             const netsim::Clock& clock, Rng& rng) {
  const Bitstring m_masked = card.m ^ suite.hash(pw);  // M = m XOR H(pw)
  return build_login(suite, m_masked, card.i, id, params, clock, rng);
}

std::pair<BinduLoginRequest, BinduClientState> insider_forge_login(
    const Suite& suite, const BinduCard& victim_card, const BinduCard& own_card,
    const Bytes& own_pw, const Bytes& victim_id, const numtheory::DhParams& params,
    const netsim::Clock& clock, Rng& rng) {
  // V = m_e XOR i_e XOR H(pw_e) = H(s) XOR s
  const Bitstring v = own_card.m ^ own_card.i ^ suite.hash(own_pw);
  const Bitstring m_masked = victim_card.i ^ v;  // = m_c XOR H(pw_c), no pw_c needed
  return build_login(suite, m_masked, victim_card.i, victim_id, params, clock, rng);
}

Expected<LoginAccept> server_verify_login(const Suite& suite, const BinduLoginRequest& req,
                                          const BinduServer& server, const netsim::Clock& clock,
                                          Rng& rng) {
  // R = U XOR H(s) XOR s
  const Bitstring r_key = req.u ^ suite.hash(server.s) ^ server.s;

  const auto plain = suite.decrypt(r_key, req.ct1);
  if (!plain) return Reject::bad_key;
  const auto fields = wire::decode_fields(*plain);
  if (!fields || fields->size() != 3 || (*fields)[2].size() != 8) return Reject::bad_key;
  const Int r_i = wire::int_from_bytes((*fields)[0]);
  const Bytes& id = (*fields)[1];
  const std::int64_t t = read_stamp((*fields)[2]);

  if (clock.now - t >= server.delta_t) return Reject::stale;

  if (r_i <= 0 || r_i >= server.params.p) return Reject::forged;
  const Bitstring expected =
      hashed_id_secret(suite, id, server.s) ^ server.s ^ suite.encode_element(r_i);
  if (r_key != expected) return Reject::forged;

  const Int y = rng.between(1, server.params.p - 2);
  const Int r_s = mod_exp(server.params.g, y, server.params.p);
  const Int shared = mod_exp(r_i, y, server.params.p);  // g^(xy)
  const Bitstring k_us = suite.hash(suite.encode_element(shared));

  const std::int64_t t_s = clock.now;
  const Int r_plus_1 = (r_i + 1) % server.params.p;
  const Bytes payload = wire::encode_fields(
      {wire::int_to_bytes(r_s), wire::int_to_bytes(r_plus_1), stamp_bytes(t_s)});
  BinduChallenge challenge{t_s, suite.encrypt(r_key, payload)};
  BinduServerSession session{r_i, y, r_s, r_key, k_us};
  return LoginAccept{std::move(challenge), std::move(session)};
}

Expected<ChallengeAccept> client_verify_challenge(const Suite& suite,
                                                  const BinduClientState& state,
                                                  const BinduChallenge& challenge,
                                                  const numtheory::DhParams& params,
                                                  const netsim::Clock& clock) {
  if (!clock.fresh(challenge.t_s)) return Reject::stale;

  const auto plain = suite.decrypt(state.r_key, challenge.ct2);
  if (!plain) return Reject::bad_key;
  const auto fields = wire::decode_fields(*plain);
  if (!fields || fields->size() != 3) return Reject::bad_key;
  const Int r_s = wire::int_from_bytes((*fields)[0]);
  const Int echoed = wire::int_from_bytes((*fields)[1]);

  if (echoed != (state.r + 1) % params.p) return Reject::server_unauthenticated;

  const Int shared = mod_exp(r_s, state.x, params.p);  // g^(xy)
  const Bitstring k_us = suite.hash(suite.encode_element(shared));
  const Int r_s_plus_1 = (r_s + 1) % params.p;
  const Bytes payload = wire::encode_fields({wire::int_to_bytes(r_s_plus_1)});
  return ChallengeAccept{BinduProof{suite.encrypt(k_us, payload)}, k_us};
}

bool server_verify_proof(const Suite& suite, const BinduServerSession& session,
                         const BinduProof& proof, const numtheory::DhParams& params) {
  const auto plain = suite.decrypt(session.k_us, proof.ct3);
  if (!plain) return false;
  const auto fields = wire::decode_fields(*plain);
  if (!fields || fields->size() != 1) return false;
  return wire::int_from_bytes((*fields)[0]) == (session.r_s + 1) % params.p;
}

netsim::Fields to_fields(const BinduLoginRequest& req) {
  return {{"u", req.u.bytes()},
          {"t", stamp_bytes(req.t)},
          {"ct1.body", req.ct1.body},
          {"ct1.tag", req.ct1.tag.bytes()}};
}

netsim::Fields to_fields(const BinduChallenge& ch) {
  return {{"t_s", stamp_bytes(ch.t_s)},
          {"ct2.body", ch.ct2.body},
          {"ct2.tag", ch.ct2.tag.bytes()}};
}

netsim::Fields to_fields(const BinduProof& proof) {
  return {{"ct3.body", proof.ct3.body}, {"ct3.tag", proof.ct3.tag.bytes()}};
}

namespace {

const Bytes& field_named(const netsim::Fields& f, std::string_view name) {
  for (const auto& [k, v] : f) {
    if (k == name) return v;
  }
  throw std::invalid_argument("missing message field");
}

}  // namespace

BinduLoginRequest login_request_from_fields(const netsim::Fields& f, std::size_t hash_bits) {
  return {Bitstring::from_bytes(field_named(f, "u"), hash_bits), read_stamp(field_named(f, "t")),
          CipherText{field_named(f, "ct1.body"),
                     Bitstring::from_bytes(field_named(f, "ct1.tag"), hash_bits)}};
}

BinduChallenge challenge_from_fields(const netsim::Fields& f, std::size_t hash_bits) {
  return {read_stamp(field_named(f, "t_s")),
          CipherText{field_named(f, "ct2.body"),
                     Bitstring::from_bytes(field_named(f, "ct2.tag"), hash_bits)}};
}

BinduProof proof_from_fields(const netsim::Fields& f, std::size_t hash_bits) {
  return {CipherText{field_named(f, "ct3.body"),
                     Bitstring::from_bytes(field_named(f, "ct3.tag"), hash_bits)}};
}

}  // namespace autopsy::bindu
