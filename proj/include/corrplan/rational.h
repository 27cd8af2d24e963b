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

#ifndef CORRPLAN_RATIONAL_H_
#define CORRPLAN_RATIONAL_H_

#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace corrplan {

// All numeric values in the library are exact rationals. No floating point
// is used anywhere in the core.
using Rational = boost::multiprecision::mpq_rational;

// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
// input (empty string, zero denominator, trailing garbage).
Rational ParseRational(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string FormatRational(const Rational& value);

std::string FormatRationalVector(const std::vector<Rational>& values);

}  // namespace corrplan

#endif  // CORRPLAN_RATIONAL_H_
