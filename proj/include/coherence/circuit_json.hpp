#pragma once

#include <filesystem>

#include <json.hpp>

#include "coherence/circuit.hpp"

namespace coherence {

// Circuit document:
//   {"num_qubits": 4,
//    "gates": [{"kind": "CCX", "controls": [0, 1], "polarities": ["positive", "negated"],
//               "targets": [2], "angle": 0.0}, ...],
//    "roles": {"0": "statement", "3": "flag"}}
nlohmann::json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& doc);

Circuit load_circuit(const std::filesystem::path& path);

}  // namespace coherence
