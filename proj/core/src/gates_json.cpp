#include "optchan/gates_json.hpp"

#include <json.hpp>

namespace optchan::gates {

namespace {

nlohmann::ordered_json state_to_json_object(const RegisterState& state) {
  nlohmann::ordered_json object = nlohmann::ordered_json::object();
  for (const auto& [config, amp] : state.amplitudes())
    object[config.label()] = {amp.real(), amp.imag()};
  return object;
}

}  // namespace

std::string state_to_json(const RegisterState& state) {
  return state_to_json_object(state).dump(2);
}

RegisterState state_from_json(const std::string& json_text, int photon_cap) {
  const auto parsed = nlohmann::json::parse(json_text);
  if (!parsed.is_object())
    throw std::invalid_argument("state file: expected a JSON object");
  RegisterState::Map amplitudes;
  for (const auto& [label, value] : parsed.items()) {
    if (!value.is_array() || value.size() != 2)
      throw std::invalid_argument("state file: amplitude for " + label +
                                  " must be a [re, im] pair");
    amplitudes[BasisConfig::from_label(label)] = {value[0].get<double>(),
                                                  value[1].get<double>()};
  }
  return RegisterState(std::move(amplitudes), photon_cap);
}

std::string trace_to_json(const ProtocolRun& run) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& state : run.trace) array.push_back(state_to_json_object(state));
  return array.dump(2);
}

ProtocolScript script_from_json(const std::string& json_text) {
  const auto parsed = nlohmann::json::parse(json_text);
  if (!parsed.is_array())
    throw std::invalid_argument("protocol file: expected a JSON array of step names");
  ProtocolScript script;
  for (const auto& entry : parsed) script.push_back(step_from_name(entry.get<std::string>()));
  return script;
}

}  // namespace optchan::gates
