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

#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "schinzel/io/parse.hpp"
#include "schinzel/multipoly.hpp"
#include "schinzel/rings.hpp"

namespace testing_helpers {

using namespace schinzel;

template <class R>
typename R::Element random_element(const R& ring, std::mt19937_64& rng, long bound = 3) {
  if constexpr (std::is_same_v<R, Integers>) {
    return mpz_class(static_cast<long>(rng() % (2 * bound + 1)) - bound);
  } else if constexpr (std::is_same_v<R, Rationals>) {
    mpq_class q(static_cast<long>(rng() % (2 * bound + 1)) - bound, static_cast<long>(rng() % 3) + 1);
    q.canonicalize();
    return q;
  } else if constexpr (is_poly_ring_v<R>) {
    typename R::Element a(rng() % 3);
    for (auto& c : a) c = random_element(ring.base(), rng, bound);
    upoly::trim(ring.base(), a);
    return a;
  } else {
    return ring.random(rng);
  }
}

template <class R>
MultiPoly<R> random_poly(const R& ring, std::size_t nvars, std::size_t max_deg, std::size_t terms,
                         std::mt19937_64& rng) {
  MultiPoly<R> f(ring, nvars);
  for (std::size_t k = 0; k < terms; ++k) {
    Monomial m(nvars);
    for (auto& e : m) e = static_cast<Exponent>(rng() % (max_deg + 1));
    f.add_term(m, random_element(ring, rng));
  }
  return f;
}

template <class R>
MultiPoly<R> P(const R& ring, const std::string& text, const VarSet& vars) {
  return parse_poly(text, ring, vars);
}

}  // namespace testing_helpers
