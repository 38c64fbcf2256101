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

// Per-coordinate value lists for witness enumeration, ordered by level so
// that small candidates come first. Levels: |c| over Z and Q (balanced
// spiral 0, 1, -1, 2, -2, ...), a single level over finite fields, and
// max(deg_u + 1, base level) over k[u].

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <type_traits>
#include <string>
#include <vector>

#include "schinzel/errors.hpp"
#include "schinzel/rings/integers.hpp"
#include "schinzel/rings/poly_ring.hpp"
#include "schinzel/search/problem.hpp"

namespace schinzel {

inline constexpr std::size_t kMaxCoordinateValues = std::size_t{1} << 20;

namespace search_detail {

inline std::vector<std::pair<long, unsigned>> spiral(long bound) {
  std::vector<std::pair<long, unsigned>> out{{0, 0}};
  for (long v = 1; v <= bound; ++v) {
    out.emplace_back(v, static_cast<unsigned>(v));
    out.emplace_back(-v, static_cast<unsigned>(v));
  }
  return out;
}

}  // namespace search_detail

inline CoordinateSpace<Integers> coordinate_space(const Integers&, const SearchConstraints& c) {
  CoordinateSpace<Integers> s;
  for (auto [v, l] : search_detail::spiral(c.coeff_bound)) {
    s.values.emplace_back(v);
    s.levels.push_back(l);
  }
  return s;
}

inline CoordinateSpace<Rationals> coordinate_space(const Rationals&, const SearchConstraints& c) {
  CoordinateSpace<Rationals> s;
  for (auto [v, l] : search_detail::spiral(c.coeff_bound)) {
    s.values.emplace_back(v);
    s.levels.push_back(l);
  }
  return s;
}

template <class F>
  requires F::is_finite
CoordinateSpace<F> coordinate_space(const F& field, const SearchConstraints&) {
  if (field.size() > kMaxCoordinateValues) {
    throw DomainError("field " + field.name() + " is too large to enumerate coefficients");
  }
  CoordinateSpace<F> s;
  for (std::uint64_t i = 0; i < field.size(); ++i) {
    s.values.push_back(field.element_at(i));
    s.levels.push_back(0);
  }
  return s;
}

/// u-degree bound used for k[u] coefficients: the requested bound, raised to
/// the deg_u target when one is set (delta in char 0, p*delta in char p).
template <class F>
unsigned u_degree_box(const PolyRing<F>& ring, const SearchConstraints& c) {
  unsigned d = c.deg_u;
  if (c.deg_u_target) {
    const auto p = ring.characteristic();
    const unsigned target = p == 0 ? *c.deg_u_target : static_cast<unsigned>(p) * *c.deg_u_target;
    d = std::max(d, target);
  }
  return d;
}

template <class F>
CoordinateSpace<PolyRing<F>> coordinate_space(const PolyRing<F>& ring, const SearchConstraints& c) {
  const auto base = coordinate_space(ring.base(), c);
  const unsigned du = u_degree_box(ring, c);
  std::size_t total = 1;
  for (unsigned i = 0; i <= du; ++i) {
    if (total > kMaxCoordinateValues / base.size()) {
      throw DomainError("k[u] coefficient box is too large to enumerate");
    }
    total *= base.size();
  }
  struct Entry {
    upoly::Poly<F> value;
    unsigned level;
  };
  std::vector<Entry> entries;
  entries.reserve(total);
  std::vector<std::size_t> digits(du + 1, 0);
  for (std::size_t n = 0; n < total; ++n) {
    upoly::Poly<F> a(du + 1);
    unsigned level = 0;
    for (unsigned i = 0; i <= du; ++i) {
      a[i] = base.values[digits[i]];
      level = std::max(level, base.levels[digits[i]]);
    }
    upoly::trim(ring.base(), a);
    if (!a.empty()) level = std::max<unsigned>(level, static_cast<unsigned>(a.size()));
    entries.push_back({std::move(a), level});
    for (auto& d : digits) {
      if (++d < base.size()) break;
      d = 0;
    }
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.level < b.level; });
  CoordinateSpace<PolyRing<F>> s;
  for (auto& e : entries) {
    s.values.push_back(std::move(e.value));
    s.levels.push_back(e.level);
  }
  return s;
}

/// The problem's coordinate override when set, else the ring default.
template <class R>
CoordinateSpace<R> resolve_space(const SchinzelProblem<R>& prob) {
  if (prob.space) return *prob.space;
  return coordinate_space(prob.ring, prob.constraints);
}

}  // namespace schinzel
