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

// Ring descriptors, element-level services and the textual ring spec used
// by the command line ("Z", "Q", "GF(p)", "GF(p^k)", "GF(p)[u]", ...).

#include <cstdint>
#include <regex>
#include <string>
#include <utility>

#include "schinzel/errors.hpp"
#include "schinzel/factor/kronecker.hpp"
#include "schinzel/factor/multivariate.hpp"
#include "schinzel/factor/univariate_ff.hpp"
#include "schinzel/rings/extension_field.hpp"
#include "schinzel/rings/integers.hpp"
#include "schinzel/rings/poly_ring.hpp"
#include "schinzel/rings/prime_field.hpp"

namespace schinzel {

/// Canonical-unit-normalized gcd; gcd(0, 0) = 0.
template <class R>
typename R::Element ring_gcd(const R& ring, const typename R::Element& a,
                             const typename R::Element& b) {
  auto g = ring.gcd(a, b);
  if (ring.is_zero(g)) return g;
  return ring.mul(g, ring.inverse(ring.unit_part(g)));
}

template <class R>
bool ring_is_unit(const R& ring, const typename R::Element& a) {
  return ring.is_unit(a);
}

inline ElementFactorization<Integers> ring_factor(const Integers&, const mpz_class& a) {
  return factor_integer(a);
}

template <class F>
  requires F::is_field
ElementFactorization<F> ring_factor(const F& field, const typename F::Element& a) {
  if (field.is_zero(a)) throw DomainError("cannot factor zero");
  return {a, {}};
}

template <class F>
ElementFactorization<PolyRing<F>> ring_factor(const PolyRing<F>& ring,
                                              const upoly::Poly<F>& a) {
  if (a.empty()) throw DomainError("cannot factor zero");
  ElementFactorization<PolyRing<F>> out;
  out.unit = ring.from_base(a.back());
  if constexpr (F::is_finite) {
    for (auto& [h, m] : factor_univariate_ff(ring.base(), a).factors) {
      out.factors.emplace_back(std::move(h), m);
    }
  } else {
    for (auto& [h, m] : factor(from_dense(ring.base(), a)).factors) {
      out.factors.emplace_back(to_dense(h), m);
    }
  }
  return out;
}

/// Parsed form of a ring string.
struct RingSpec {
  enum class Kind { Integers, Rationals, PrimeField, ExtensionField, PolyRing };
  Kind kind = Kind::Integers;
  Kind base = Kind::Rationals;  // coefficient field of a PolyRing
  std::uint64_t p = 0;
  unsigned k = 1;

  static RingSpec parse(const std::string& text) {
    std::string s;
    for (char c : text) {
      if (c != ' ') s += c;
    }
    RingSpec spec;
    std::string field = s;
    const bool poly = s.size() > 3 && s.compare(s.size() - 3, 3, "[u]") == 0;
    if (poly) field = s.substr(0, s.size() - 3);
    static const std::regex gf(R"(GF\((\d+)(?:\^(\d+))?\))");
    std::smatch m;
    Kind kind;
    if (field == "Z" && !poly) {
      kind = Kind::Integers;
    } else if (field == "Q") {
      kind = Kind::Rationals;
    } else if (std::regex_match(field, m, gf)) {
      spec.p = std::stoull(m[1].str());
      spec.k = m[2].matched ? static_cast<unsigned>(std::stoul(m[2].str())) : 1;
      if (spec.k == 0) throw ParseError("extension degree must be positive", 0);
      if (!m[2].matched) split_prime_power(spec);
      kind = spec.k == 1 ? Kind::PrimeField : Kind::ExtensionField;
      (void)PrimeField(spec.p);  // validates p
    } else {
      throw ParseError("unknown ring '" + text + "'", 0);
    }
    if (poly) {
      spec.kind = Kind::PolyRing;
      spec.base = kind;
    } else {
      spec.kind = kind;
    }
    return spec;
  }

  /// GF(q) with q = p^k, k >= 2, means GF(p^k).
  static void split_prime_power(RingSpec& spec) {
    for (std::uint64_t d = 2; d * d <= spec.p; ++d) {
      if (spec.p % d != 0) continue;
      std::uint64_t q = spec.p;
      unsigned k = 0;
      while (q % d == 0) {
        q /= d;
        ++k;
      }
      if (q == 1) {
        spec.p = d;
        spec.k = k;
      }
      return;
    }
  }

  std::string to_string() const {
    auto field_name = [&](Kind kd) -> std::string {
      switch (kd) {
        case Kind::Integers: return "Z";
        case Kind::Rationals: return "Q";
        case Kind::PrimeField: return "GF(" + std::to_string(p) + ")";
        case Kind::ExtensionField:
          return "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
        case Kind::PolyRing: break;
      }
      return "?";
    };
    if (kind == Kind::PolyRing) return field_name(base) + "[u]";
    return field_name(kind);
  }

  std::uint64_t characteristic() const {
    const Kind kd = kind == Kind::PolyRing ? base : kind;
    return (kd == Kind::PrimeField || kd == Kind::ExtensionField) ? p : 0;
  }

  bool is_finite() const { return kind == Kind::PrimeField || kind == Kind::ExtensionField; }
  bool is_field() const { return kind != Kind::Integers && kind != Kind::PolyRing; }
};

/// Calls fn with the concrete ring descriptor named by spec.
template <class Fn>
decltype(auto) visit_ring(const RingSpec& spec, Fn&& fn) {
  using Kind = RingSpec::Kind;
  switch (spec.kind) {
    case Kind::Integers: return fn(Integers{});
    case Kind::Rationals: return fn(Rationals{});
    case Kind::PrimeField: return fn(PrimeField(spec.p));
    case Kind::ExtensionField: return fn(ExtensionField(spec.p, spec.k));
    case Kind::PolyRing:
      switch (spec.base) {
        case Kind::Rationals: return fn(PolyRing<Rationals>(Rationals{}));
        case Kind::PrimeField: return fn(PolyRing<PrimeField>(PrimeField(spec.p)));
        case Kind::ExtensionField:
          return fn(PolyRing<ExtensionField>(ExtensionField(spec.p, spec.k)));
        default: break;
      }
      break;
  }
  throw DomainError("unsupported ring " + spec.to_string());
}

}  // namespace schinzel
