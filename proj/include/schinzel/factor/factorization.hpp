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

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "schinzel/multipoly.hpp"

namespace schinzel {

/// unit * prod(factor^multiplicity). `unit` is the scalar part of the input
/// (its content together with the sign or leading-coefficient unit); every
/// factor is nonconstant, primitive and canonical-unit normalized.
template <class R>
struct Factorization {
  R ring;
  std::size_t nvars = 0;
  typename R::Element unit;
  std::vector<std::pair<MultiPoly<R>, unsigned>> factors;
  std::vector<std::string> trace;

  std::size_t factor_count() const {
    std::size_t n = 0;
    for (const auto& [f, m] : factors) n += m;
    return n;
  }
};

template <class R>
MultiPoly<R> recompose(const Factorization<R>& fac) {
  auto r = MultiPoly<R>::constant(fac.ring, fac.nvars, fac.unit);
  for (const auto& [f, m] : fac.factors) r *= pow(f, m);
  return r;
}

/// Sorts factors by (total degree, canonical term order) and merges equal
/// entries.
template <class R>
void canonicalize_factors(std::vector<std::pair<MultiPoly<R>, unsigned>>& factors) {
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    if (!(a.first == b.first)) return canonical_less(a.first, b.first);
    return a.second < b.second;
  });
  std::vector<std::pair<MultiPoly<R>, unsigned>> merged;
  for (auto& entry : factors) {
    if (!merged.empty() && merged.back().first == entry.first) {
      merged.back().second += entry.second;
    } else {
      merged.push_back(std::move(entry));
    }
  }
  factors = std::move(merged);
}

}  // namespace schinzel
