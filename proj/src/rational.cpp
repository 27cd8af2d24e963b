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

#include "corrplan/rational.h"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace corrplan {
namespace {

bool IsInteger(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!IsInteger(text)) {
      throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    return Rational(boost::multiprecision::mpz_int(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!IsInteger(num) || !IsInteger(den)) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  boost::multiprecision::mpz_int d(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + text + "'");
  }
  return Rational(boost::multiprecision::mpz_int(num), d);
}

std::string FormatRational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string FormatRationalVector(const std::vector<Rational>& values) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ", ";
    out << FormatRational(values[i]);
  }
  out << ")";
  return out.str();
}

}  // namespace corrplan
