#pragma once

#include <json.hpp>

#include "cdc/gate.hpp"
#include "cdc/model.hpp"

namespace cdc {

/// SystemParams <-> JSON document with exactly the field names of the
/// struct. Complex couplings serialize as [re, im]; plain numbers are
/// accepted on input as purely real couplings.
nlohmann::json to_json(const SystemParams& p);
SystemParams system_params_from_json(const nlohmann::json& j);

/// Resolves a params document: either a full SystemParams object or
/// {"case": "I".."VII", "g": magnitude}. Returns the validated parameters
/// and the operating drive frequency.
struct ResolvedParams {
  ValidatedParams params;
  double omega_l = 0.0;
};
ResolvedParams resolve_params(const nlohmann::json& j);

nlohmann::json to_json(const GateMatrix& m);
nlohmann::json to_json(const TruthTable& table);
nlohmann::json to_json(const ConditionalAmplitudes& amps);

} // namespace cdc
