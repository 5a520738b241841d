#include "coherence/circuit_json.hpp"

#include <fstream>

#include "coherence/errors.hpp"

namespace coherence {

using nlohmann::json;

json circuit_to_json(const Circuit& circuit) {
  json gates = json::array();
  for (const auto& g : circuit.gates()) {
    json pols = json::array();
    for (auto p : g.polarities) pols.push_back(p == Polarity::positive ? "positive" : "negated");
    gates.push_back({{"kind", std::string(to_string(g.kind))},
                     {"controls", g.controls},
                     {"polarities", pols},
                     {"targets", g.targets},
                     {"angle", g.angle}});
  }
  json roles = json::object();
  for (const auto& [q, role] : circuit.roles()) roles[std::to_string(q)] = std::string(to_string(role));
  return {{"num_qubits", circuit.num_qubits()}, {"gates", gates}, {"roles", roles}};
}

Circuit circuit_from_json(const json& doc) {
  try {
    Circuit c(doc.at("num_qubits").get<int>());
    for (const auto& jg : doc.at("gates")) {
      Gate g;
      g.kind = parse_gate_kind(jg.at("kind").get<std::string>());
      g.controls = jg.value("controls", std::vector<int>{});
      g.targets = jg.at("targets").get<std::vector<int>>();
      g.angle = jg.value("angle", 0.0);
      if (jg.contains("polarities")) {
        for (const auto& p : jg.at("polarities")) {
          const auto s = p.get<std::string>();
          if (s == "positive") {
            g.polarities.push_back(Polarity::positive);
          } else if (s == "negated") {
            g.polarities.push_back(Polarity::negated);
          } else {
            throw std::invalid_argument("unknown polarity '" + s + "'");
          }
        }
      } else {
        g.polarities.assign(g.controls.size(), Polarity::positive);
      }
      c.add(std::move(g));
    }
    if (doc.contains("roles")) {
      for (const auto& [key, value] : doc.at("roles").items()) {
        c.set_role(std::stoi(key), parse_role(value.get<std::string>()));
      }
    }
    return c;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed circuit document: ") + e.what());
  }
}

Circuit load_circuit(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open circuit file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string(), 0, e.what());
  }
  return circuit_from_json(doc);
}

}  // namespace coherence
