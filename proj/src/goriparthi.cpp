#include "autopsy/goriparthi.hpp"

#include "autopsy/numtheory.hpp"

namespace autopsy::goriparthi {

using numtheory::mod_norm;

GoriCard register_user(const primitives::Suite& suite, const Bytes& id, const Bytes& pw,
                       const GoriServer& server) {
  const Int& n = server.params.n;
  const Int reg =
      mod_norm(server.s * suite.map_to_group(id, server.params) + suite.map_to_group(pw, server.params), n);
  return {id, reg};
}

Expected<GoriCard> change_password(const primitives::Suite& suite, const GoriCard& card,
                                   const Bytes& entered_id, const Bytes& entered_old_pw,
                                   const Bytes& new_pw,
                                   const primitives::AdditiveGroupParams& params) {
  if (entered_id != card.id) return Reject::id_mismatch;
  // The entered old password is taken at face value.
  const Int reg = mod_norm(
      card.reg - suite.map_to_group(entered_old_pw, params) + suite.map_to_group(new_pw, params),
      params.n);
  return GoriCard{card.id, reg};
}

bool auth_check(const primitives::Suite& suite, const GoriCard& card, const Bytes& pw,
                const GoriServer& server) {
  const Int& n = server.params.n;
  const Int lhs = mod_norm(card.reg - suite.map_to_group(pw, server.params), n);
  const Int rhs = mod_norm(server.s * suite.map_to_group(card.id, server.params), n);
  return lhs == rhs;
}

GoriCard dos_attack(const primitives::Suite& suite, const GoriCard& card, const Bytes& pw_prime,
                    const Bytes& pw_double_prime, const primitives::AdditiveGroupParams& params) {
  return change_password(suite, card, card.id, pw_prime, pw_double_prime, params).value();
}

}  // namespace autopsy::goriparthi
