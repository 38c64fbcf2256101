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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schinzel/errors.hpp"
#include "schinzel/factor/univariate_ff.hpp"
#include "schinzel/rings/prime_field.hpp"
#include "schinzel/rings/upoly.hpp"

namespace schinzel {

/// F_q = F_p[t]/(m) with m monic irreducible of degree k >= 2. Elements are
/// residue polynomials in t of degree < k, stored low coefficient first.
class ExtensionField {
 public:
  using Element = upoly::Poly<PrimeField>;
  static constexpr bool is_field = true;
  static constexpr bool is_finite = true;

  /// Uses the lexicographically smallest monic irreducible of degree k,
  /// comparing coefficient vectors from the constant term upwards.
  ExtensionField(std::uint64_t p, unsigned k) : base_(p) {
    if (k < 2) throw DomainError("extension degree must be at least 2");
    modulus_ = std::make_shared<const Element>(default_modulus(base_, k));
    init_size();
  }

  ExtensionField(std::uint64_t p, Element modulus) : base_(p) {
    upoly::trim(base_, modulus);
    if (modulus.size() < 3) throw DomainError("extension modulus must have degree >= 2");
    modulus = upoly::monic(base_, modulus);
    if (!is_irreducible_univariate_ff(base_, modulus)) {
      throw DomainError("extension modulus is not irreducible");
    }
    modulus_ = std::make_shared<const Element>(std::move(modulus));
    init_size();
  }

  static Element default_modulus(const PrimeField& base, unsigned k) {
    const std::uint64_t p = base.prime();
    Element m(k + 1, 0);
    m[k] = 1;
    // Odometer with the constant term as the most significant digit.
    std::vector<std::uint64_t> digits(k, 0);
    for (;;) {
      for (unsigned i = 0; i < k; ++i) m[i] = digits[i];
      if (m[0] != 0 && is_irreducible_univariate_ff(base, m)) return m;
      unsigned pos = k;
      while (pos-- > 0) {
        if (++digits[pos] < p) break;
        digits[pos] = 0;
        if (pos == 0) throw DomainError("no irreducible polynomial found");
      }
    }
  }

  const PrimeField& base() const { return base_; }
  const Element& modulus() const { return *modulus_; }
  std::uint64_t prime() const { return base_.prime(); }
  unsigned degree() const { return static_cast<unsigned>(modulus_->size() - 1); }
  std::uint64_t size() const { return size_; }

  Element zero() const { return {}; }
  Element one() const { return {1}; }
  Element generator() const { return reduce({0, 1}); }
  Element from_int(long v) const { return upoly::constant(base_, base_.from_int(v)); }
  Element from_integer(const mpz_class& v) const {
    return upoly::constant(base_, base_.from_integer(v));
  }
  Element from_prime_field(std::uint64_t v) const { return upoly::constant(base_, v % prime()); }

  bool is_zero(const Element& a) const { return a.empty(); }
  Element add(const Element& a, const Element& b) const { return upoly::add(base_, a, b); }
  Element sub(const Element& a, const Element& b) const { return upoly::sub(base_, a, b); }
  Element neg(const Element& a) const { return upoly::neg(base_, a); }
  Element mul(const Element& a, const Element& b) const {
    return upoly::rem(base_, upoly::mul(base_, a, b), *modulus_);
  }

  Element pow(const Element& a, const mpz_class& e) const {
    return upoly::powmod(base_, a, e, *modulus_);
  }

  Element inverse(const Element& a) const {
    if (a.empty()) throw DomainError("inverse of zero in " + name());
    auto [g, s, t] = upoly::xgcd(base_, a, *modulus_);
    (void)t;
    return s;
  }

  std::optional<Element> divide(const Element& a, const Element& b) const {
    if (b.empty()) return std::nullopt;
    return mul(a, inverse(b));
  }

  bool is_unit(const Element& a) const { return !a.empty(); }
  Element unit_part(const Element& a) const { return a.empty() ? one() : a; }
  Element gcd(const Element& a, const Element& b) const {
    return (a.empty() && b.empty()) ? zero() : one();
  }

  /// a^(q/p), the inverse of Frobenius.
  Element pth_root(const Element& a) const {
    return pow(a, mpz_class(static_cast<unsigned long>(size_ / prime())));
  }

  Element element_at(std::uint64_t index) const {
    Element r(degree(), 0);
    for (auto& c : r) {
      c = index % prime();
      index /= prime();
    }
    upoly::trim(base_, r);
    return r;
  }

  std::uint64_t index_of(const Element& a) const {
    std::uint64_t idx = 0;
    for (std::size_t i = a.size(); i-- > 0;) idx = idx * prime() + a[i];
    return idx;
  }

  template <class Rng>
  Element random(Rng& rng) const {
    return element_at(rng() % size_);
  }

  std::uint64_t characteristic() const { return prime(); }

  std::string name() const {
    return "GF(" + std::to_string(prime()) + "^" + std::to_string(degree()) + ")";
  }

  /// Polynomial in t, descending powers, e.g. "t^2 + 1".
  std::string to_string(const Element& a) const {
    if (a.empty()) return "0";
    std::string out;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] == 0) continue;
      if (!out.empty()) out += " + ";
      std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
      if (mono.empty()) {
        out += std::to_string(a[i]);
      } else if (a[i] == 1) {
        out += mono;
      } else {
        out += std::to_string(a[i]) + "*" + mono;
      }
    }
    return out;
  }

  bool less(const Element& a, const Element& b) const { return index_of(a) < index_of(b); }

  bool operator==(const ExtensionField& other) const {
    return base_ == other.base_ && *modulus_ == *other.modulus_;
  }

 private:
  Element reduce(const Element& a) const { return upoly::rem(base_, a, *modulus_); }

  void init_size() {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), base_.prime(), degree());
    if (q > mpz_class("4611686018427387904")) throw DomainError("field too large");
    size_ = q.get_ui();
  }

  PrimeField base_;
  std::shared_ptr<const Element> modulus_;
  std::uint64_t size_ = 0;
};

}  // namespace schinzel
