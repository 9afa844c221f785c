#pragma once

#include "qcontrol/controllability.hpp"
#include "qcontrol/network.hpp"

#include <json.hpp>

#include <string>

namespace qcontrol {

// ---------------------------------------------------------------------------
// Network document format (schema_version 1):
//
// {
//   "nodes":   [{"id": 1, "dim": 2}, ...],
//   "edges":   [{"a": 1, "b": 2,
//                "coupling": {"kind": "heisenberg", "c": 1.0, "delta": 1.0}}],
//   "fields":  [{"node": 1, "b": [1.0, 0.7, 0.3]}],        // optional
//   "control": [1]                                          // optional
// }
//
// Coupling kinds: heisenberg {c, delta} | xx {c} | ising {c} |
// aklt {c, A, B} | custom {matrix} with matrix a row-major array of
// [re, im] pairs. Unknown keys are rejected everywhere so that typos and
// fields from future schema versions fail loudly.
// ---------------------------------------------------------------------------

/// Parses and validates a network document; throws std::invalid_argument with
/// the offending field path on any syntax or schema violation.
Network parse_network(const std::string& text);

Network network_from_json(const nlohmann::json& j);
nlohmann::json network_to_json(const Network& net);

// Machine-readable report bodies; parse(render(report)) == report.
nlohmann::json to_json(const InfectionOutcome& outcome);
InfectionOutcome infection_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PropagationReport& report);
PropagationReport propagation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EdgePropagation& report);
EdgePropagation edge_propagation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DirectCheck& report);
DirectCheck direct_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SufficientCheck& report);
SufficientCheck sufficient_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ControllabilityReport& report);
ControllabilityReport report_from_json(const nlohmann::json& j);

std::string to_string(DirectVerdict v);
std::string to_string(SufficientVerdict v);
std::string to_string(Representation r);

}  // namespace qcontrol
