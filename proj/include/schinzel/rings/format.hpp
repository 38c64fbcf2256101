// Copyright 2026 The Schinzel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace schinzel::format {

/// "c*mono" with the unit coefficients folded and compound coefficients
/// (anything containing a space) parenthesized.
inline std::string term(const std::string& coeff, const std::string& mono) {
  if (mono.empty()) return coeff;
  if (coeff == "1") return mono;
  if (coeff == "-1") return "-" + mono;
  if (coeff.find(' ') != std::string::npos) return "(" + coeff + ")*" + mono;
  return coeff + "*" + mono;
}

/// Joins terms with " + ", folding a leading '-' into " - ".
inline std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (!terms[i].empty() && terms[i][0] == '-') {
      out += " - " + terms[i].substr(1);
    } else {
      out += " + " + terms[i];
    }
  }
  return out;
}

inline std::string power(const std::string& var, std::size_t e) {
  if (e == 0) return "";
  return e == 1 ? var : var + "^" + std::to_string(e);
}

}  // namespace schinzel::format
