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

#ifndef CORRPLAN_ERRORS_H_
#define CORRPLAN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace corrplan {

// Malformed or invalid input documents (game, plan, formula files).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An exact computation was refused because its size exceeds a configured cap.
class ScaleError : public std::runtime_error {
 public:
  explicit ScaleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace corrplan

#endif  // CORRPLAN_ERRORS_H_
