// Copyright 2026 The qclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON forms of reports and circuits.

#include <string>

#include "json.hpp"
#include "qclone/circuit.hpp"
#include "qclone/identities.hpp"
#include "qclone/protocol.hpp"

namespace qclone {

inline constexpr const char* kToolName = "qclone";
inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// `include_timings` is off by default so identical runs serialize to
/// identical bytes; timings_ms is then an empty object.
inline Json to_json(const ProtocolReport& r, bool include_timings = false) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["d"] = r.d;
  j["n"] = r.n;
  j["target_party"] = r.target_party;
  j["seed"] = r.seed;
  j["decryption_path"] = r.path == DecryptionPath::Dense ? "dense" : "circuit";
  j["marginals"] = r.marginals;
  j["decryption_fidelity"] = r.decryption_fidelity;
  j["closed_form_overlap"] = r.closed_form_overlap;
  Json residuals = Json::array();
  for (const auto& b : r.bell_residuals) {
    residuals.push_back({{"pair", b.pair}, {"fidelity", b.fidelity}});
  }
  j["bell_residuals"] = residuals;
  j["tolerances"] = {{"marginal_max_dev", r.tolerance}, {"fidelity_deficit", r.tolerance}};
  j["passed"] = r.passed();
  Json timings = Json::object();
  if (include_timings) {
    for (const auto& [stage, ms] : r.timings_ms) timings[stage] = ms;
  }
  j["timings_ms"] = timings;
  return j;
}

inline Json to_json(const IdentityReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"max_deviation", c.max_deviation},
                      {"cases", c.cases},
                      {"passed", c.passed}});
  }
  return {{"d", r.d}, {"tolerance", r.tolerance}, {"passed", r.all_passed()}, {"checks", checks}};
}

inline Json to_json(const GateOp& op, const Register& reg) {
  Json params = Json::object();
  switch (op.kind) {
    case GateKind::ShiftX:
    case GateKind::PhaseZ:
    case GateKind::ControlledPower: params["power"] = op.power; break;
    case GateKind::DiagonalPhase:
    case GateKind::ScalarPhase: params["phases"] = op.phases; break;
    default: break;
  }
  auto labels = [&](const std::vector<std::size_t>& wires) {
    Json out = Json::array();
    for (auto w : wires) out.push_back(reg.wires()[w]);
    return out;
  };
  return {{"kind", std::string(to_string(op.kind))},
          {"params", params},
          {"targets", labels(op.targets)},
          {"controls", labels(op.controls)},
          {"control_levels", op.control_levels}};
}

inline Json to_json(const Circuit& c) {
  Json gates = Json::array();
  for (const auto& op : c.ops()) gates.push_back(to_json(op, c.reg()));
  return {{"d", c.d()}, {"wires", c.reg().wires()}, {"gates", gates}};
}

inline Circuit circuit_from_json(const Json& j) {
  try {
    Register reg(j.at("d").get<int>(), j.at("wires").get<WireList>());
    Circuit c(reg);
    auto indices = [&](const Json& labels) {
      std::vector<std::size_t> out;
      for (const auto& l : labels) out.push_back(reg.index_of(l.get<std::string>()));
      return out;
    };
    for (const auto& g : j.at("gates")) {
      GateOp op;
      op.kind = gate_kind_from_string(g.at("kind").get<std::string>());
      const auto& params = g.at("params");
      if (params.contains("power")) op.power = params["power"].get<int>();
      if (params.contains("phases")) op.phases = params["phases"].get<std::vector<double>>();
      op.targets = indices(g.at("targets"));
      op.controls = indices(g.at("controls"));
      op.control_levels = g.at("control_levels").get<std::vector<int>>();
      c.add(std::move(op));
    }
    return c;
  } catch (const Json::exception& e) {
    throw ParameterError(std::string("malformed circuit JSON: ") + e.what());
  }
}

}  // namespace qclone
