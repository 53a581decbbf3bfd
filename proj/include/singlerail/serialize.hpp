// Copyright 2026 The singlerail Authors
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

#include <string>

#include <json.hpp>

#include "singlerail/fock.hpp"
#include "singlerail/measurement.hpp"
#include "singlerail/protocols.hpp"

namespace singlerail {

using Json = nlohmann::ordered_json;

// {"modes": [...], "amplitudes": [{"occupations": [...], "re": .., "im": ..},
// ...]} with the amplitude records sorted lexicographically by occupation
// vector.
Json state_to_json(const PureState& state);

Json event_to_json(const DetectionEvent& event);

Json teleport_record_to_json(const TeleportRecord& record);

Json bell_counts_to_json(const BellCounts& counts);

std::string bell_outcome_kind_name(BellOutcomeKind kind);

}  // namespace singlerail
