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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schinzel/errors.hpp"
#include "schinzel/rings/format.hpp"
#include "schinzel/rings/upoly.hpp"

namespace schinzel {

/// k[u] for a field k. Canonical associates are monic in u.
template <class F>
class PolyRing {
 public:
  static_assert(F::is_field, "PolyRing needs a field of coefficients");
  using Base = F;
  using Element = upoly::Poly<F>;
  static constexpr bool is_field = false;
  static constexpr bool is_finite = false;

  explicit PolyRing(F base) : base_(std::move(base)) {}

  const F& base() const { return base_; }

  Element zero() const { return {}; }
  Element one() const { return {base_.one()}; }
  Element from_int(long v) const { return upoly::constant(base_, base_.from_int(v)); }
  Element from_base(const typename F::Element& c) const { return upoly::constant(base_, c); }
  Element variable() const { return upoly::x_power(base_, 1); }

  bool is_zero(const Element& a) const { return a.empty(); }
  Element add(const Element& a, const Element& b) const { return upoly::add(base_, a, b); }
  Element sub(const Element& a, const Element& b) const { return upoly::sub(base_, a, b); }
  Element neg(const Element& a) const { return upoly::neg(base_, a); }
  Element mul(const Element& a, const Element& b) const { return upoly::mul(base_, a, b); }

  std::optional<Element> divide(const Element& a, const Element& b) const {
    if (b.empty()) return std::nullopt;
    auto [q, r] = upoly::divmod(base_, a, b);
    if (!r.empty()) return std::nullopt;
    return q;
  }

  bool is_unit(const Element& a) const { return a.size() == 1; }
  Element unit_part(const Element& a) const { return a.empty() ? one() : Element{a.back()}; }
  Element inverse(const Element& unit) const {
    if (unit.size() != 1) throw DomainError("not a unit in " + name());
    return {base_.inverse(unit[0])};
  }

  Element gcd(const Element& a, const Element& b) const { return upoly::gcd(base_, a, b); }

  /// Degree in u; nullopt for zero.
  std::optional<std::size_t> degree(const Element& a) const {
    if (a.empty()) return std::nullopt;
    return a.size() - 1;
  }

  std::uint64_t characteristic() const { return base_.characteristic(); }
  std::string name() const { return base_.name() + "[u]"; }

  std::string to_string(const Element& a) const {
    std::vector<std::string> terms;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (base_.is_zero(a[i])) continue;
      terms.push_back(format::term(base_.to_string(a[i]), format::power("u", i)));
    }
    return format::join_terms(terms);
  }

  bool less(const Element& a, const Element& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] == b[i]) continue;
      return base_.less(a[i], b[i]);
    }
    return false;
  }

  bool operator==(const PolyRing& other) const { return base_ == other.base_; }

 private:
  F base_;
};

}  // namespace schinzel
