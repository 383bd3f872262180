// Copyright 2026 The rsd Authors
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

#include "rsd/core/scene.hpp"

#include <set>
#include <string>

#include "rsd/error.hpp"

namespace rsd::core {

const Participant* SceneSnapshot::find(VehicleId id) const {
  for (const auto& p : participants) {
    if (p.id == id) {
      return &p;
    }
  }
  return nullptr;
}

const Participant& SceneSnapshot::at(VehicleId id) const {
  const Participant* p = find(id);
  if (p == nullptr) {
    throw Error(ErrorKind::kLookup,
                "vehicle " + std::to_string(id) + " not in scene");
  }
  return *p;
}

void validate_scene(const SceneSnapshot& scene) {
  std::set<VehicleId> seen;
  for (const auto& p : scene.participants) {
    if (!seen.insert(p.id).second) {
      throw Error(ErrorKind::kData, "duplicate vehicle id " +
                                        std::to_string(p.id) + " in scene");
    }
  }
}

}  // namespace rsd::core
