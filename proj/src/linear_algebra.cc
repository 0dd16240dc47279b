// Copyright 2026 The Authors.
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

#include "splitmat/linear_algebra.h"

#include <cctype>

#include "splitmat/errors.h"

namespace splitmat {

std::string RationalToString(const Rational& q) {
  Rational canonical = q;
  canonical.canonicalize();
  return canonical.get_str();
}

Rational ParseRational(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }
  if (text.empty()) throw FormatError("empty number");
  const std::size_t dot = text.find('.');
  try {
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      const std::size_t decimals = text.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+") {
        throw FormatError("bad number '" + raw + "'");
      }
      if (digits.front() == '+') digits.erase(0, 1);
      Rational q(mpz_class(digits, 10), 1);
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, decimals);
      q /= scale;
      q.canonicalize();
      return q;
    }
    if (text.front() == '+') text.erase(0, 1);
    Rational q(text, 10);
    if (q.get_den() == 0) throw FormatError("zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw FormatError("bad number '" + raw + "'");
  }
}

}  // namespace splitmat
