#pragma once

#include <cstdint>
#include <utility>

#include "autopsy/bitstring.hpp"
#include "autopsy/ints.hpp"
#include "autopsy/netsim.hpp"
#include "autopsy/numtheory.hpp"
#include "autopsy/primitives.hpp"
#include "autopsy/result.hpp"
#include "autopsy/rng.hpp"

// Smart-card password authentication with a Diffie-Hellman session key:
// registration hands the card m = H(id XOR s) XOR H(s) XOR H(pw) and
// i = H(id XOR s) XOR s, login proves knowledge of (card, pw) through the
// derived cipher key R, and a three-message exchange authenticates both
// sides. The insider forgery builds a valid login for a victim's lost card
// from any other registered card plus its own password.
namespace autopsy::bindu {

struct BinduServer {
  Bitstring s;  // server secret; must never appear in a transcript
  numtheory::DhParams params;
  std::int64_t delta_t = 2;
};

struct BinduCard {
  Bitstring m;
  Bitstring i;
};

struct BinduLoginRequest {
  Bitstring u;
  std::int64_t t;
  primitives::CipherText ct1;  // E_R[r, id, t]
};

struct BinduClientState {
  Int x;             // client exponent
  Int r;             // g^x
  Bitstring r_bits;  // encode(r)
  Bitstring r_key;   // R, the login cipher key
};

struct BinduChallenge {
  std::int64_t t_s;
  primitives::CipherText ct2;  // E_R[r_s, r+1, t_s]
};

struct BinduServerSession {
  Int r_i;           // client element recovered from ct1
  Int y;             // server exponent
  Int r_s;           // g^y
  Bitstring r_key;   // R as derived by the server
  Bitstring k_us;    // session cipher key, H(encode(g^(xy)))
};

struct BinduProof {
  primitives::CipherText ct3;  // E_k[r_s+1]
};

struct LoginAccept {
  BinduChallenge challenge;
  BinduServerSession session;
};

struct ChallengeAccept {
  BinduProof proof;
  Bitstring k_us;
};

BinduCard register_user(const primitives::Suite& suite, const Bytes& id, const Bytes& pw,
                        const BinduServer& server);

std::pair<BinduLoginRequest, BinduClientState> login_request(const primitives::Suite& suite,
                                                             const BinduCard& card,
                                                             const Bytes& id, const Bytes& pw,
                                                             const numtheory::DhParams& params,
                                                             const netsim::Clock& clock, Rng& rng);

// Derives R from U and the server secret, decrypts, checks freshness on the
// authenticated timestamp, and compares R against the registration relation
// before answering with a challenge.
Expected<LoginAccept> server_verify_login(const primitives::Suite& suite,
                                          const BinduLoginRequest& req, const BinduServer& server,
                                          const netsim::Clock& clock, Rng& rng);

Expected<ChallengeAccept> client_verify_challenge(const primitives::Suite& suite,
                                                  const BinduClientState& state,
                                                  const BinduChallenge& challenge,
                                                  const numtheory::DhParams& params,
                                                  const netsim::Clock& clock);

bool server_verify_proof(const primitives::Suite& suite, const BinduServerSession& session,
                         const BinduProof& proof, const numtheory::DhParams& params);

// The lost-card forgery: V = m_e XOR i_e XOR H(pw_e) equals H(s) XOR s for
// every registered card, which turns the victim's i value into a login the
// server accepts. Takes no victim password.
std::pair<BinduLoginRequest, BinduClientState> insider_forge_login(
    const primitives::Suite& suite, const BinduCard& victim_card, const BinduCard& own_card,
    const Bytes& own_pw, const Bytes& victim_id, const numtheory::DhParams& params,
    const netsim::Clock& clock, Rng& rng);

// Wire forms for the simulated channel.
netsim::Fields to_fields(const BinduLoginRequest& req);
netsim::Fields to_fields(const BinduChallenge& ch);
netsim::Fields to_fields(const BinduProof& proof);
BinduLoginRequest login_request_from_fields(const netsim::Fields& f, std::size_t hash_bits);
BinduChallenge challenge_from_fields(const netsim::Fields& f, std::size_t hash_bits);
BinduProof proof_from_fields(const netsim::Fields& f, std::size_t hash_bits);

}  // namespace autopsy::bindu
