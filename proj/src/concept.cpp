// Copyright 2026 The corrplan Authors.
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

#include "corrplan/concept.h"

#include <stdexcept>

namespace corrplan {

std::string ConceptName(Concept concept_kind) {
  switch (concept_kind) {
    case Concept::kNash:
      return "nash";
    case Concept::kNfce:
      return "nfce";
    case Concept::kNfcce:
      return "nfcce";
    case Concept::kEfce:
      return "efce";
    case Concept::kEfcce:
      return "efcce";
    case Concept::kAfce:
      return "afce";
    case Concept::kAfcce:
      return "afcce";
  }
  return "?";
}

Concept ConceptFromName(const std::string& name) {
  if (name == "nash") return Concept::kNash;
  if (name == "nfce") return Concept::kNfce;
  if (name == "nfcce") return Concept::kNfcce;
  if (name == "efce") return Concept::kEfce;
  if (name == "efcce") return Concept::kEfcce;
  if (name == "afce") return Concept::kAfce;
  if (name == "afcce") return Concept::kAfcce;
  throw std::invalid_argument("unknown equilibrium concept '" + name + "'");
}

bool HasLinearSystem(Concept concept_kind) {
  switch (concept_kind) {
    case Concept::kEfce:
    case Concept::kEfcce:
    case Concept::kNfcce:
    case Concept::kAfce:
    case Concept::kAfcce:
      return true;
    default:
      return false;
  }
}

}  // namespace corrplan
