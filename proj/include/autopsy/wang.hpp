#pragma once

#include "autopsy/bitstring.hpp"
#include "autopsy/ints.hpp"
#include "autopsy/primitives.hpp"

// XOR variant of the same password-change weakness: the card stores
// n = H(pw) XOR H(x_s) and the change phase replaces it with
// n XOR H(old) XOR H(new) without any validation at all.
namespace autopsy::wang {

struct WangServer {
  Bitstring x_s;  // server secret; never serialized into transcripts
};

struct WangCard {
  Bitstring n;
};

WangCard register_user(const primitives::Suite& suite, const Bytes& pw, const WangServer& server);

WangCard change_password(const primitives::Suite& suite, const WangCard& card, const Bytes& old_pw,
                         const Bytes& new_pw);

// Minimal oracle: n XOR H(pw) == H(x_s).
bool auth_check(const primitives::Suite& suite, const WangCard& card, const Bytes& pw,
                const WangServer& server);

WangCard dos_attack(const primitives::Suite& suite, const WangCard& card, const Bytes& pw_prime,
                    const Bytes& pw_double_prime);

}  // namespace autopsy::wang
