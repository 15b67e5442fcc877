#pragma once

#include "autopsy/ints.hpp"
#include "autopsy/primitives.hpp"
#include "autopsy/result.hpp"

// Password change over an additive group: the card stores
// reg = s*h(id) + h(pw) in Z_n and updates it to reg - h(old) + h(new)
// after checking the entered identity only. Because the old password is
// never validated, anyone holding the card can shift reg by
// h(pw'') - h(pw') and lock the real password out.
namespace autopsy::goriparthi {

struct GoriServer {
  Int s;  // scalar secret, 1 <= s <= n-1
  primitives::AdditiveGroupParams params;
};

struct GoriCard {
  Bytes id;
  Int reg;
};

GoriCard register_user(const primitives::Suite& suite, const Bytes& id, const Bytes& pw,
                       const GoriServer& server);

// Checks entered_id against the card, then swaps the password hashes into
// reg without ever validating entered_old_pw.
Expected<GoriCard> change_password(const primitives::Suite& suite, const GoriCard& card,
                                   const Bytes& entered_id, const Bytes& entered_old_pw,
                                   const Bytes& new_pw,
                                   const primitives::AdditiveGroupParams& params);

// Minimal server-side check of the registration relation:
// reg - h(pw) == s*h(id).
bool auth_check(const primitives::Suite& suite, const GoriCard& card, const Bytes& pw,
                const GoriServer& server);

// Runs the change phase with two attacker-chosen passwords; needs the card
// and its id, nothing else.
GoriCard dos_attack(const primitives::Suite& suite, const GoriCard& card, const Bytes& pw_prime,
                    const Bytes& pw_double_prime, const primitives::AdditiveGroupParams& params);

}  // namespace autopsy::goriparthi
