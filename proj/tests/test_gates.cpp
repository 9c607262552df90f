#include <doctest.h>

#include <array>

#include "optchan/errors.hpp"
#include "optchan/gates.hpp"
#include "optchan/gates_json.hpp"

using namespace optchan::gates;

namespace {

RegisterState basis(const std::string& label) {
  return RegisterState::basis(BasisConfig::from_label(label));
}

std::string sole_label(const RegisterState& state) {
  REQUIRE(state.amplitudes().size() == 1);
  return state.amplitudes().begin()->first.label();
}

}  // namespace

TEST_SUITE("gates") {

TEST_CASE("basis labels round-trip") {
  for (const char* label : {"g0.g0", "g1.e0", "e2.g3", "e0.e0"}) {
    CHECK(BasisConfig::from_label(label).label() == label);
  }
  CHECK_THROWS_AS(BasisConfig::from_label("g1e0"), std::invalid_argument);
  CHECK_THROWS_AS(BasisConfig::from_label("x1.g0"), std::invalid_argument);
  CHECK_THROWS_AS(BasisConfig::from_label("g.e0"), std::invalid_argument);
}

TEST_CASE("register states must be normalized and within the cap") {
  RegisterState::Map map{{BasisConfig::from_label("g1.g0"), 0.5}};
  CHECK_THROWS_AS(RegisterState(std::move(map)), std::domain_error);
  CHECK_THROWS_AS(basis("g4.g0"), optchan::PhotonCapError);
}

TEST_CASE("exchange swaps photon numbers only") {
  CHECK(sole_label(exchange(basis("g1.e0"))) == "g0.e1");
  CHECK(sole_label(exchange(basis("e2.g0"))) == "e0.g2");
  CHECK(sole_label(exchange(basis("g1.g1"))) == "g1.g1");
}

TEST_CASE("inversion acts per node with a (g,0) fixed point") {
  CHECK(sole_label(pi_op(basis("g0.g0"))) == "g0.g0");
  CHECK(sole_label(pi_op(basis("g1.e1"))) == "e0.g2");
  CHECK(sole_label(pi_op(basis("g2.g0"), PiTarget::node1)) == "e1.g0");
  CHECK(sole_label(pi_op(basis("g2.g0"), PiTarget::node2)) == "g2.g0");
}

TEST_CASE("inversion past the photon cap names the failing step") {
  CHECK_THROWS_AS(pi_op(basis("e3.g0")), optchan::PhotonCapError);
  const ProtocolScript script{Step::Exchange, Step::PiBoth};
  try {
    run_protocol(script, basis("e0.g3"));
    FAIL("expected PhotonCapError");
  } catch (const optchan::PhotonCapError& error) {
    CHECK(std::string(error.what()).find("step 2") != std::string::npos);
  }
}

TEST_CASE("swap protocol trace for one tabulated input") {
  const auto protocols = builtin_protocols();
  const auto run = run_protocol(protocols.at("swap"), basis("g1.e0"), true);
  const std::array<const char*, 5> expected{"g0.e1", "g0.g2", "g2.g0", "e1.g0",
                                            "e0.g1"};
  REQUIRE(run.trace.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(sole_label(run.trace[i]) == expected[i]);
}

TEST_CASE("protocol truth tables on the computational encoding") {
  const auto protocols = builtin_protocols();
  for (int q1 : {0, 1}) {
    for (int q2 : {0, 1}) {
      const auto swapped =
          run_protocol(protocols.at("swap"), computational_encode(q1, q2));
      CHECK(computational_decode(swapped.final_state) ==
            std::make_optional(std::make_pair(q2, q1)));
      const auto controlled =
          run_protocol(protocols.at("cnot"), computational_encode(q1, q2));
      CHECK(computational_decode(controlled.final_state) ==
            std::make_optional(std::make_pair(q1, q2 ^ q1)));
    }
  }
}

TEST_CASE("decode rejects states outside the computational subspace") {
  CHECK(computational_decode(basis("g2.g0")) == std::nullopt);
  CHECK(computational_decode(basis("e0.g1")) == std::make_optional(std::make_pair(0, 1)));
}

TEST_CASE("superpositions stay normalized through a protocol") {
  const double r = std::sqrt(0.5);
  RegisterState::Map map{{BasisConfig::from_label("g1.g1"), r},
                         {BasisConfig::from_label("e0.e0"), {0.0, r}}};
  const RegisterState input(std::move(map));
  const auto protocols = builtin_protocols();
  const auto run = run_protocol(protocols.at("cnot"), input);
  CHECK(run.final_state.norm_squared() == doctest::Approx(1.0).epsilon(1e-13));
  // cnot maps (1,1) -> (1,0) and fixes (0,0)
  CHECK(std::abs(run.final_state.amplitude(BasisConfig::from_label("g1.e0")) - r) <
        1e-13);
  CHECK(std::abs(run.final_state.amplitude(BasisConfig::from_label("e0.e0")) -
                 RegisterState::Amplitude{0.0, r}) < 1e-13);
}

TEST_CASE("state JSON round-trips") {
  const double r = std::sqrt(0.5);
  RegisterState::Map map{{BasisConfig::from_label("g1.e0"), r},
                         {BasisConfig::from_label("e0.g1"), {0.0, -r}}};
  const RegisterState state(std::move(map));
  const auto restored = state_from_json(state_to_json(state));
  CHECK(restored == state);
  CHECK_THROWS_AS(state_from_json("[1, 2]"), std::invalid_argument);
}

TEST_CASE("protocol scripts parse from JSON step names") {
  const auto script = script_from_json(R"(["exchange", "pi", "pi1", "pi2"])");
  REQUIRE(script.size() == 4);
  CHECK(script[0] == Step::Exchange);
  CHECK(script[1] == Step::PiBoth);
  CHECK(script[2] == Step::Pi1);
  CHECK(script[3] == Step::Pi2);
  CHECK_THROWS_AS(script_from_json(R"(["hadamard"])"), std::invalid_argument);
  CHECK(step_from_name(step_name(Step::Pi2)) == Step::Pi2);
}

}
