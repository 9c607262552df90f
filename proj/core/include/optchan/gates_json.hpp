#pragma once

#include <string>

#include "optchan/gates.hpp"

namespace optchan::gates {

// State files are JSON objects mapping basis labels ("g1.e0") to [re, im]
// amplitude pairs. Traces are arrays of such objects in step order.
std::string state_to_json(const RegisterState& state);
RegisterState state_from_json(const std::string& json_text,
                              int photon_cap = default_photon_cap);

std::string trace_to_json(const ProtocolRun& run);

// Protocol files are JSON arrays of step names
// ("exchange", "pi", "pi1", "pi2").
ProtocolScript script_from_json(const std::string& json_text);

}  // namespace optchan::gates
