#include "optchan/gates.hpp"

#include <cmath>
#include <stdexcept>

#include "optchan/errors.hpp"

namespace optchan::gates {

namespace {

constexpr double pruning_tolerance = 1e-15;
constexpr double normalization_tolerance = 1e-12;

NodeState invert(const NodeState& node, int photon_cap) {
  if (node.atom == Atom::g) {
    if (node.photons == 0) return node;  // fixed point
    return {Atom::e, node.photons - 1};
  }
  if (node.photons + 1 > photon_cap)
    throw PhotonCapError("pi: photon number would exceed cap " +
                         std::to_string(photon_cap));
  return {Atom::g, node.photons + 1};
}

}  // namespace

std::string BasisConfig::label() const {
  auto part = [](const NodeState& node) {
    return std::string(1, node.atom == Atom::g ? 'g' : 'e') +
           std::to_string(node.photons);
  };
  return part(node1) + "." + part(node2);
}

BasisConfig BasisConfig::from_label(const std::string& label) {
  const auto dot = label.find('.');
  if (dot == std::string::npos)
    throw std::invalid_argument("basis label missing '.': " + label);
  auto parse_part = [&](const std::string& part) -> NodeState {
    if (part.size() < 2 || (part[0] != 'g' && part[0] != 'e'))
      throw std::invalid_argument("bad basis label part: " + part);
    const int photons = std::stoi(part.substr(1));
    if (photons < 0) throw std::invalid_argument("negative photon count: " + part);
    return {part[0] == 'g' ? Atom::g : Atom::e, photons};
  };
  return {parse_part(label.substr(0, dot)), parse_part(label.substr(dot + 1))};
}

RegisterState::RegisterState(Map amplitudes, int photon_cap)
    : photon_cap_(photon_cap) {
  for (auto& [config, amp] : amplitudes) {
    if (config.node1.photons > photon_cap || config.node2.photons > photon_cap)
      throw PhotonCapError("register state: photon number exceeds cap");
    if (std::abs(amp) > pruning_tolerance) amplitudes_.emplace(config, amp);
  }
  const double n2 = norm_squared();
  if (std::abs(n2 - 1.0) > normalization_tolerance)
    throw std::domain_error("register state: norm^2 = " + std::to_string(n2) +
                            " is not 1");
}

RegisterState RegisterState::basis(const BasisConfig& config, int photon_cap) {
  return RegisterState(Map{{config, 1.0}}, photon_cap);
}

double RegisterState::norm_squared() const {
  double sum = 0.0;
  for (const auto& [config, amp] : amplitudes_) sum += std::norm(amp);
  return sum;
}

RegisterState::Amplitude RegisterState::amplitude(const BasisConfig& config) const {
  const auto it = amplitudes_.find(config);
  return it == amplitudes_.end() ? Amplitude{0.0} : it->second;
}

std::string step_name(Step step) {
  switch (step) {
    case Step::Exchange: return "exchange";
    case Step::PiBoth: return "pi";
    case Step::Pi1: return "pi1";
    case Step::Pi2: return "pi2";
  }
  throw std::logic_error("unreachable");
}

Step step_from_name(const std::string& name) {
  if (name == "exchange") return Step::Exchange;
  if (name == "pi") return Step::PiBoth;
  if (name == "pi1") return Step::Pi1;
  if (name == "pi2") return Step::Pi2;
  throw std::invalid_argument("unknown protocol step: " + name);
}

RegisterState exchange(const RegisterState& state) {
  RegisterState::Map out;
  for (const auto& [config, amp] : state.amplitudes()) {
    BasisConfig swapped = config;
    std::swap(swapped.node1.photons, swapped.node2.photons);
    out[swapped] += amp;
  }
  return RegisterState(std::move(out), state.photon_cap());
}

RegisterState pi_op(const RegisterState& state, PiTarget target) {
  RegisterState::Map out;
  for (const auto& [config, amp] : state.amplitudes()) {
    BasisConfig next = config;
    if (target == PiTarget::both || target == PiTarget::node1)
      next.node1 = invert(next.node1, state.photon_cap());
    if (target == PiTarget::both || target == PiTarget::node2)
      next.node2 = invert(next.node2, state.photon_cap());
    out[next] += amp;
  }
  return RegisterState(std::move(out), state.photon_cap());
}

ProtocolRun run_protocol(const ProtocolScript& script, const RegisterState& input,
                         bool trace) {
  if (script.empty()) throw std::invalid_argument("protocol script is empty");
  ProtocolRun run;
  run.final_state = input;
  for (std::size_t i = 0; i < script.size(); ++i) {
    try {
      switch (script[i]) {
        case Step::Exchange: run.final_state = exchange(run.final_state); break;
        case Step::PiBoth: run.final_state = pi_op(run.final_state, PiTarget::both); break;
        case Step::Pi1: run.final_state = pi_op(run.final_state, PiTarget::node1); break;
        case Step::Pi2: run.final_state = pi_op(run.final_state, PiTarget::node2); break;
      }
    } catch (const PhotonCapError& err) {
      throw PhotonCapError("step " + std::to_string(i + 1) + " (" +
                           step_name(script[i]) + "): " + err.what());
    }
    if (trace) run.trace.push_back(run.final_state);
  }
  return run;
}

std::map<std::string, ProtocolScript> builtin_protocols() {
  const ProtocolScript swap_script{Step::Exchange, Step::PiBoth, Step::Exchange,
                                   Step::PiBoth, Step::Exchange};
  const ProtocolScript cnot_script{
      Step::Exchange, Step::PiBoth, Step::Exchange, Step::Pi1,
      Step::Exchange, Step::Pi2,    Step::Exchange, Step::Pi1,
      Step::Exchange, Step::Pi2,    Step::Exchange, Step::Pi1,
      Step::Exchange, Step::Pi2,    Step::PiBoth,   Step::Exchange};
  return {{"swap", swap_script}, {"cnot", cnot_script}};
}

RegisterState computational_encode(int q1, int q2) {
  auto logical = [](int q) -> NodeState {
    if (q == 0) return {Atom::e, 0};
    if (q == 1) return {Atom::g, 1};
    throw std::invalid_argument("logical qubit value must be 0 or 1");
  };
  return RegisterState::basis({logical(q1), logical(q2)});
}

std::optional<std::pair<int, int>> computational_decode(const RegisterState& state) {
  constexpr double tolerance = 1e-10;
  auto logical_of = [](const NodeState& node) -> int {
    if (node == NodeState{Atom::e, 0}) return 0;
    if (node == NodeState{Atom::g, 1}) return 1;
    return -1;
  };
  std::optional<std::pair<int, int>> found;
  for (const auto& [config, amp] : state.amplitudes()) {
    const int q1 = logical_of(config.node1);
    const int q2 = logical_of(config.node2);
    if (q1 < 0 || q2 < 0) {
      if (std::abs(amp) > tolerance) return std::nullopt;
      continue;
    }
    if (std::abs(amp) <= tolerance) continue;
    // A single dominant computational configuration decodes; a genuine
    // superposition of several has no classical bit pair.
    if (std::norm(amp) < 1.0 - tolerance) return std::nullopt;
    found = {q1, q2};
  }
  return found;
}

}  // namespace optchan::gates
