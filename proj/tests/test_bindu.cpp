#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "autopsy/bindu.hpp"
#include "autopsy/wire.hpp"

using namespace autopsy;
using namespace autopsy::bindu;

namespace {

struct Fixture {
  primitives::Suite suite{256};
  numtheory::DhParams params = numtheory::gen_params(16, 5);
  BinduServer server;
  netsim::Clock clock;

  explicit Fixture(std::uint64_t seed = 0xb1d0) : rng(seed) {
    server = BinduServer{rng.bits(256), params, 2};
  }

  Rng rng;
};

Bytes b(std::string_view s) { return wire::from_string(s); }

}  // namespace

TEST_CASE("registration satisfies the card relations") {
  Fixture fx;
  for (int i = 0; i < 50; ++i) {
    const Bytes id = fx.rng.bytes(1 + i % 12);
    const Bytes pw = fx.rng.bytes(1 + (i * 7) % 15);
    const BinduCard card = register_user(fx.suite, id, pw, fx.server);
    // m XOR H(pw) XOR H(s) == i XOR s
    CHECK((card.m ^ fx.suite.hash(pw) ^ fx.suite.hash(fx.server.s)) ==
          (card.i ^ fx.server.s));
    // m XOR i XOR H(pw) == H(s) XOR s
    CHECK((card.m ^ card.i ^ fx.suite.hash(pw)) ==
          (fx.suite.hash(fx.server.s) ^ fx.server.s));
  }
}

TEST_CASE("toy registration matches a step-by-step recomputation") {
  primitives::Suite suite(256);
  auto params = numtheory::gen_params(8, 7);
  Rng rng(7);
  const BinduServer server{rng.bits(256), params, 2};
  const Bytes id = b("carol"), pw = b("hunter2");
  const BinduCard card = register_user(suite, id, pw, server);

  const Bitstring padded_id = suite.pad_to_width(id);
  const Bitstring hid = suite.hash(padded_id ^ server.s);
  CHECK(card.m == (hid ^ suite.hash(server.s) ^ suite.hash(pw)));
  CHECK(card.i == (hid ^ server.s));
}

TEST_CASE("login request exposes the XOR cancellation structure") {
  Fixture fx;
  const Bytes id = b("alice"), pw = b("pw-alice");
  const BinduCard card = register_user(fx.suite, id, pw, fx.server);
  auto [req, state] = login_request(fx.suite, card, id, pw, fx.params, fx.clock, fx.rng);

  const Bitstring m_masked = card.m ^ fx.suite.hash(pw);
  CHECK((req.u ^ m_masked) == state.r_bits);   // U XOR M = encode(r)
  CHECK((state.r_key ^ card.i) == state.r_bits);  // R XOR i = encode(r)
  CHECK(state.r == numtheory::mod_exp(fx.params.g, state.x, fx.params.p));
}

TEST_CASE("honest three-message run authenticates and agrees on the key") {
  Fixture fx;
  const Bytes id = b("alice"), pw = b("pw-alice");
  const BinduCard card = register_user(fx.suite, id, pw, fx.server);

  auto [req, state] = login_request(fx.suite, card, id, pw, fx.params, fx.clock, fx.rng);
  fx.clock.advance(1);
  auto login = server_verify_login(fx.suite, req, fx.server, fx.clock, fx.rng);
  REQUIRE(login.ok());

  fx.clock.advance(1);
  auto reply = client_verify_challenge(fx.suite, state, login.value().challenge, fx.params, fx.clock);
  REQUIRE(reply.ok());
  CHECK(reply.value().k_us == login.value().session.k_us);

  CHECK(server_verify_proof(fx.suite, login.value().session, reply.value().proof, fx.params));
}

TEST_CASE("stale login request is rejected") {
  Fixture fx;
  const Bytes id = b("alice"), pw = b("pw");
  const BinduCard card = register_user(fx.suite, id, pw, fx.server);
  auto [req, state] = login_request(fx.suite, card, id, pw, fx.params, fx.clock, fx.rng);
  fx.clock.advance(fx.server.delta_t);  // age == delta_t is already stale
  auto login = server_verify_login(fx.suite, req, fx.server, fx.clock, fx.rng);
  REQUIRE(!login.ok());
  CHECK(login.reject() == Reject::stale);
}

TEST_CASE("flipping any bit of U is rejected") {
  Fixture fx;
  const Bytes id = b("alice"), pw = b("pw");
  const BinduCard card = register_user(fx.suite, id, pw, fx.server);
  int rejects = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto [req, state] = login_request(fx.suite, card, id, pw, fx.params, fx.clock, fx.rng);
    Bytes raw(32, 0);
    raw[static_cast<std::size_t>(fx.rng.next_u64() % 32)] =
        static_cast<std::uint8_t>(1u << (fx.rng.next_u64() % 8));
    req.u = req.u ^ Bitstring::from_bytes(raw, 256);
    auto login = server_verify_login(fx.suite, req, fx.server, fx.clock, fx.rng);
    if (!login.ok() &&
        (login.reject() == Reject::bad_key || login.reject() == Reject::forged)) {
      ++rejects;
    }
  }
  CHECK(rejects == 1000);
}

TEST_CASE("challenge with the wrong increment fails server authentication") {
  Fixture fx;
  const Bytes id = b("alice"), pw = b("pw");
  const BinduCard card = register_user(fx.suite, id, pw, fx.server);
  auto [req, state] = login_request(fx.suite, card, id, pw, fx.params, fx.clock, fx.rng);
  fx.clock.advance(1);
  auto login = server_verify_login(fx.suite, req, fx.server, fx.clock, fx.rng);
  REQUIRE(login.ok());

  // Rebuild the challenge with r+2 in place of r+1.
  const auto& session = login.value().session;
  const Int wrong = (session.r_i + 2) % fx.params.p;
  const Bytes payload = wire::encode_fields({wire::int_to_bytes(session.r_s),
                                             wire::int_to_bytes(wrong),
                                             wire::be64(static_cast<std::uint64_t>(fx.clock.now))});
  BinduChallenge forged{fx.clock.now, fx.suite.encrypt(session.r_key, payload)};
  auto reply = client_verify_challenge(fx.suite, state, forged, fx.params, fx.clock);
  REQUIRE(!reply.ok());
  CHECK(reply.reject() == Reject::server_unauthenticated);

  // Re-encrypted under a wrong key -> bad_key.
  BinduChallenge wrong_key{fx.clock.now, fx.suite.encrypt(fx.rng.bits(256), payload)};
  auto reply2 = client_verify_challenge(fx.suite, state, wrong_key, fx.params, fx.clock);
  REQUIRE(!reply2.ok());
  CHECK(reply2.reject() == Reject::bad_key);

  // Stale challenge -> stale, checked before decryption.
  BinduChallenge stale{fx.clock.now - fx.clock.delta_t, fx.suite.encrypt(session.r_key, payload)};
  auto reply3 = client_verify_challenge(fx.suite, state, stale, fx.params, fx.clock);
  REQUIRE(!reply3.ok());
  CHECK(reply3.reject() == Reject::stale);
}

TEST_CASE("proof under a random key or from an old session is rejected") {
  Fixture fx;
  const Bytes id = b("alice"), pw = b("pw");
  const BinduCard card = register_user(fx.suite, id, pw, fx.server);

  auto run_session = [&](BinduServerSession& session_out) {
    auto [req, state] = login_request(fx.suite, card, id, pw, fx.params, fx.clock, fx.rng);
    auto login = server_verify_login(fx.suite, req, fx.server, fx.clock, fx.rng);
    REQUIRE(login.ok());
    auto reply = client_verify_challenge(fx.suite, state, login.value().challenge, fx.params, fx.clock);
    REQUIRE(reply.ok());
    session_out = login.value().session;
    return reply.value().proof;
  };

  BinduServerSession s1, s2;
  const BinduProof p1 = run_session(s1);
  const BinduProof p2 = run_session(s2);

  CHECK(server_verify_proof(fx.suite, s2, p2, fx.params));
  // Replay of the first session's proof against the second session fails:
  // different r_s and different session key.
  CHECK(!server_verify_proof(fx.suite, s2, p1, fx.params));

  BinduProof garbage{fx.suite.encrypt(fx.rng.bits(256), wire::encode_fields({Bytes{1}}))};
  CHECK(!server_verify_proof(fx.suite, s1, garbage, fx.params));
}

TEST_CASE("the R-derivation identity holds for honest and forged requests") {
  primitives::Suite suite(256);
  Rng rng(0xb1d1);
  for (unsigned bits : {10u, 16u, 24u}) {
    auto params = numtheory::gen_params(bits, rng.next_u64());
    for (int i = 0; i < 300; ++i) {
      const BinduServer server{rng.bits(256), params, 2};
      netsim::Clock clock;
      const Bytes id = rng.bytes(1 + i % 10), pw = rng.bytes(1 + i % 7);
      const BinduCard card = register_user(suite, id, pw, server);

      auto [req, state] = login_request(suite, card, id, pw, params, clock, rng);
      CHECK((req.u ^ suite.hash(server.s) ^ server.s) == (card.i ^ state.r_bits));

      const Bytes eid = rng.bytes(3), epw = rng.bytes(4);
      const BinduCard own = register_user(suite, eid, epw, server);
      auto [freq, fstate] =
          insider_forge_login(suite, card, own, epw, id, params, clock, rng);
      CHECK((freq.u ^ suite.hash(server.s) ^ server.s) == (card.i ^ fstate.r_bits));
    }
  }
}

TEST_CASE("insider forgery logs in as the victim and completes the handshake") {
  Fixture fx;
  const Bytes victim_id = b("carol"), victim_pw = b("secret-carol");
  const Bytes own_id = b("eve"), own_pw = b("pw-eve");
  const BinduCard victim_card = register_user(fx.suite, victim_id, victim_pw, fx.server);
  const BinduCard own_card = register_user(fx.suite, own_id, own_pw, fx.server);

  // V = H(s) XOR s regardless of who computed it.
  const Bitstring v = own_card.m ^ own_card.i ^ fx.suite.hash(own_pw);
  CHECK(v == (fx.suite.hash(fx.server.s) ^ fx.server.s));

  auto [req, state] = insider_forge_login(fx.suite, victim_card, own_card, own_pw, victim_id,
                                          fx.params, fx.clock, fx.rng);
  fx.clock.advance(1);
  auto login = server_verify_login(fx.suite, req, fx.server, fx.clock, fx.rng);
  REQUIRE(login.ok());

  auto reply = client_verify_challenge(fx.suite, state, login.value().challenge, fx.params, fx.clock);
  REQUIRE(reply.ok());
  CHECK(server_verify_proof(fx.suite, login.value().session, reply.value().proof, fx.params));
}

TEST_CASE("card-only guessing does not authenticate") {
  // Holding the victim's card without any registered identity of one's own,
  // an attacker who perturbs the card values at random never passes
  // verification; acceptance is not vacuous.
  Fixture fx;
  const Bytes victim_id = b("carol"), victim_pw = b("secret");
  const BinduCard victim_card = register_user(fx.suite, victim_id, victim_pw, fx.server);
  int accepts = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    BinduCard guess = victim_card;
    guess.m = guess.m ^ fx.rng.bits(256);  // stands in for the unknown H(pw) mask
    auto [req, state] =
        login_request(fx.suite, guess, victim_id, fx.rng.bytes(8), fx.params, fx.clock, fx.rng);
    auto login = server_verify_login(fx.suite, req, fx.server, fx.clock, fx.rng);
    if (login.ok()) ++accepts;
  }
  CHECK(accepts == 0);
}

TEST_CASE("wire forms round-trip through channel fields") {
  Fixture fx;
  const Bytes id = b("alice"), pw = b("pw");
  const BinduCard card = register_user(fx.suite, id, pw, fx.server);
  auto [req, state] = login_request(fx.suite, card, id, pw, fx.params, fx.clock, fx.rng);

  const BinduLoginRequest back = login_request_from_fields(to_fields(req), 256);
  CHECK(back.u == req.u);
  CHECK(back.t == req.t);
  CHECK(back.ct1 == req.ct1);
}
