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

#ifndef CORRPLAN_CONCEPT_H_
#define CORRPLAN_CONCEPT_H_

#include <string>

namespace corrplan {

// The seven equilibrium concepts handled by the library.
enum class Concept { kNash, kNfce, kNfcce, kEfce, kEfcce, kAfce, kAfcce };

std::string ConceptName(Concept concept_kind);
Concept ConceptFromName(const std::string& name);  // throws on unknown name

// True for the five concepts with a polynomial relevant-history family and
// a linear constraint system: EFCE, EFCCE, NFCCE, AFCE, AFCCE.
bool HasLinearSystem(Concept concept_kind);

}  // namespace corrplan

#endif  // CORRPLAN_CONCEPT_H_
