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

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "schinzel/errors.hpp"

namespace schinzel {

/// Z/pZ for a prime p < 2^31. Elements are residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint64_t;
  static constexpr bool is_field = true;
  static constexpr bool is_finite = true;
  static constexpr std::uint64_t kMaxPrime = (1ull << 31) - 1;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p > kMaxPrime) {
      throw DomainError("prime field modulus out of range: " + std::to_string(p));
    }
    if (mpz_probab_prime_p(mpz_class(static_cast<unsigned long>(p)).get_mpz_t(), 30) == 0) {
      throw DomainError("GF(" + std::to_string(p) + "): modulus is not prime");
    }
  }

  std::uint64_t prime() const { return p_; }
  unsigned degree() const { return 1; }
  std::uint64_t size() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Element>(r < 0 ? r + static_cast<long>(p_) : r);
  }
  Element from_integer(const mpz_class& v) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
    return r.get_ui();
  }

  bool is_zero(Element a) const { return a == 0; }
  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const { return (a * b) % p_; }

  Element pow(Element a, std::uint64_t e) const {
    Element r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Element inverse(Element a) const {
    if (a == 0) throw DomainError("inverse of zero in GF(" + std::to_string(p_) + ")");
    return pow(a, p_ - 2);
  }

  std::optional<Element> divide(Element a, Element b) const {
    if (b == 0) return std::nullopt;
    return mul(a, inverse(b));
  }

  bool is_unit(Element a) const { return a != 0; }
  Element unit_part(Element a) const { return a == 0 ? 1 : a; }
  Element gcd(Element a, Element b) const { return (a == 0 && b == 0) ? 0 : 1; }

  /// Frobenius is the identity on the prime field.
  Element pth_root(Element a) const { return a; }

  Element element_at(std::uint64_t index) const { return index % p_; }
  std::uint64_t index_of(Element a) const { return a; }
  template <class Rng>
  Element random(Rng& rng) const {
    return rng() % p_;
  }

  std::uint64_t characteristic() const { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  std::string to_string(Element a) const { return std::to_string(a); }
  bool less(Element a, Element b) const { return a < b; }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

}  // namespace schinzel
