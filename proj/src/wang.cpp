#include "autopsy/wang.hpp"

namespace autopsy::wang {

WangCard register_user(const primitives::Suite& suite, const Bytes& pw, const WangServer& server) {
  return {suite.hash(pw) ^ suite.hash(server.x_s)};
}

WangCard change_password(const primitives::Suite& suite, const WangCard& card, const Bytes& old_pw,
                         const Bytes& new_pw) {
  // No validation of old_pw: the described flow has none.
  return {card.n ^ suite.hash(old_pw) ^ suite.hash(new_pw)};
}

bool auth_check(const primitives::Suite& suite, const WangCard& card, const Bytes& pw,
                const WangServer& server) {
  return (card.n ^ suite.hash(pw)) == suite.hash(server.x_s);
}

WangCard dos_attack(const primitives::Suite& suite, const WangCard& card, const Bytes& pw_prime,
                    const Bytes& pw_double_prime) {
  return change_password(suite, card, pw_prime, pw_double_prime);
}

}  // namespace autopsy::wang
