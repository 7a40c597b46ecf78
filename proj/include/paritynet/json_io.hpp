// Copyright 2026 The paritynet Authors
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

// JSON encodings used by the command-line tool. Real numbers are written with
// 12 significant digits so identical runs produce identical bytes.

#include <json.hpp>

#include "paritynet/circuit.hpp"
#include "paritynet/graphstate.hpp"

namespace paritynet::io {

using nlohmann::json;

/// Rounds to 12 significant digits (and maps -0 to 0).
double round12(double value);

json to_json(const QubitRegister& reg);
QubitRegister register_from_json(const json& j);

/// {"register": [...], "amplitudes": [[re, im], ...]}
json to_json(const PureState& state);
/// Accepts the format above; "register" may be omitted (labels q0, q1, ...).
/// Inputs within 1e-6 of unit norm are renormalized, anything else throws.
PureState state_from_json(const json& j);

json to_json(const Outcomes& outcomes);

/// {"register": [...], "steps": [{"op": "H", "q": "k1"}, ...]}
json to_json(const Circuit& circuit);
Circuit circuit_from_json(const json& j);

/// {"n": 4, "edges": [[0, 1], [2, 3]]}
json to_json(const Graph& graph);
Graph graph_from_json(const json& j);

}  // namespace paritynet::io
