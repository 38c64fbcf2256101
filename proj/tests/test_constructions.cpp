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

#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "schinzel/constructions/crt.hpp"
#include "schinzel/constructions/goldbach.hpp"
#include "schinzel/constructions/spectrum.hpp"
#include "schinzel/factor/brute_force.hpp"

using namespace schinzel;
using testing_helpers::P;

namespace {

const VarSet xv({"x"});
const VarSet x1({"x1"});
const VarSet x12({"x1", "x2"});
const VarSet xy({"x", "y"});

template <class F>
bool congruent(const MultiPoly<F>& a, const MultiPoly<F>& b, const MultiPoly<F>& m) {
  return divide_exact(a - b, m).has_value();
}

}  // namespace

TEST(Crt, TwoLinearModuli) {
  Rationals Q;
  const auto U = poly_crt<Rationals>({{P(Q, "1", x1), P(Q, "x1", x1)}, {P(Q, "2", x1), P(Q, "x1 + 1", x1)}}, x1);
  EXPECT_EQ(U, P(Q, "-x1 + 1", x1));
  EXPECT_TRUE(congruent(U, P(Q, "1", x1), P(Q, "x1", x1)));
  EXPECT_TRUE(congruent(U, P(Q, "2", x1), P(Q, "x1 + 1", x1)));
}

TEST(Crt, SingleModulusReducesTheTarget) {
  Rationals Q;
  const auto target = P(Q, "x1^3 + 2*x1 + 7", x1);
  const auto m = P(Q, "x1^2 + 1", x1);
  const auto U = poly_crt<Rationals>({{target, m}}, x1);
  EXPECT_EQ(U, divide_with_remainder(target, m).second);
}

TEST(Crt, ZeroTargetsGiveZero) {
  PrimeField F5(5);
  const auto U = poly_crt<PrimeField>({{P(F5, "0", x12), P(F5, "x1", x12)}, {P(F5, "0", x12), P(F5, "x1 + 1", x12)}}, x12);
  EXPECT_TRUE(U.is_zero());
}

TEST(Crt, RandomResiduesOverPrimeField) {
  PrimeField F7(7);
  std::mt19937_64 rng(4);
  for (int k = 0; k < 40; ++k) {
    // Moduli x1 - a for distinct a are pairwise comaximal.
    std::vector<std::pair<MultiPoly<PrimeField>, MultiPoly<PrimeField>>> residues;
    for (unsigned a = 0; a < 3; ++a) {
      residues.emplace_back(testing_helpers::random_poly(F7, 2, 2, 3, rng),
                            P(F7, "x1 - " + std::to_string(a + 2 * (k % 2)), x12));
    }
    const auto U = poly_crt(residues, x12);
    for (const auto& [target, m] : residues) EXPECT_TRUE(congruent(U, target, m));
  }
}

TEST(Crt, MultivariateComaximalModuli) {
  Rationals Q;
  const auto a = P(Q, "x1*x2 + 1", x12), b = P(Q, "x1", x12);
  const auto st = bezout(a, b, bezout_degree_cap(a, b));
  ASSERT_TRUE(st.has_value());
  EXPECT_EQ(st->first * a + st->second * b, P(Q, "1", x12));
  const auto U = poly_crt<Rationals>({{P(Q, "x2", x12), a}, {P(Q, "3", x12), b}}, x12);
  EXPECT_TRUE(congruent(U, P(Q, "x2", x12), a));
  EXPECT_TRUE(congruent(U, P(Q, "3", x12), b));
}

TEST(Crt, NonCoprimeModuliReportTheGcd) {
  Rationals Q;
  try {
    poly_crt<Rationals>({{P(Q, "1", x1), P(Q, "x1^2 - 1", x1)}, {P(Q, "0", x1), P(Q, "x1 + 1", x1)}}, x1);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("x1 + 1"), std::string::npos) << e.what();
  }
  // Coprime but not comaximal: (x1, x2) is a proper ideal.
  EXPECT_THROW(poly_crt<Rationals>({{P(Q, "1", x12), P(Q, "x1", x12)}, {P(Q, "0", x12), P(Q, "x2", x12)}}, x12),
               DomainError);
}

TEST(Goldbach, ClosedFormExample) {
  Integers Z;
  const auto r = goldbach_decompose(P(Z, "3*x + 5", xv));
  ASSERT_EQ(r.status, SearchStatus::Found);
  EXPECT_EQ(r.method, "closed-form");
  EXPECT_EQ(r.table_case, "q1 != 1");
  EXPECT_EQ(*r.F, P(Z, "x + 4", xv));
  EXPECT_EQ(*r.G, P(Z, "2*x + 1", xv));
}

TEST(Goldbach, HundredRandomClosedForms) {
  Integers Z;
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 100; ++k) {
    long q1 = 0;
    while (q1 == 0) q1 = static_cast<long>(rng() % 41) - 20;
    if (k % 10 == 0) q1 = 1;  // make sure the second row is exercised
    const long q0 = static_cast<long>(rng() % 41) - 20;
    MultiPoly<Integers> Q(Z, 1);
    Q.add_term({1}, mpz_class(q1));
    Q.add_term({0}, mpz_class(q0));
    const auto r = goldbach_decompose(Q);
    ASSERT_EQ(r.status, SearchStatus::Found);
    // Table rows computed here directly from q0, q1.
    std::vector<long> F, G;
    std::string row;
    if (q1 != 1) {
      row = "q1 != 1";
      F = {q0 - 1, 1};
      G = {1, q1 - 1};
    } else {
      row = "q1 != -1";
      F = {q0 - 1, -1};
      G = {1, q1 + 1};
    }
    EXPECT_EQ(r.table_case, row);
    auto poly = [&](const std::vector<long>& c) {
      MultiPoly<Integers> f(Z, 1);
      f.add_term({0}, mpz_class(c[0]));
      f.add_term({1}, mpz_class(c[1]));
      return f;
    };
    EXPECT_EQ(*r.F, poly(F));
    EXPECT_EQ(*r.G, poly(G));
    EXPECT_EQ(*r.F + *r.G, Q);
    EXPECT_TRUE(oracle::z_irreducible_deg_le3(F));
    EXPECT_TRUE(oracle::z_irreducible_deg_le3(G));
    EXPECT_TRUE(verify_goldbach(Q, *r.F, *r.G, false).ok());
  }
}

TEST(Goldbach, ThirdRowInCharacteristicTwo) {
  // Over F_4 and F_2[u], 1 = -1 and the table needs r outside {0, 1}.
  ExtensionField F4(2, 2);
  const auto Q = P(F4, "x + t", xv);
  const auto r = goldbach_decompose(Q);
  ASSERT_EQ(r.status, SearchStatus::Found);
  EXPECT_EQ(r.table_case, "q1 = 1 = -1");
  EXPECT_TRUE(verify_goldbach(Q, *r.F, *r.G, false).ok());
  PolyRing<PrimeField> ku(PrimeField(2));
  const auto Qu = P(ku, "x + u + 1", xv);
  const auto ru = goldbach_decompose(Qu);
  ASSERT_EQ(ru.status, SearchStatus::Found);
  EXPECT_EQ(ru.table_case, "q1 = 1 = -1");
  EXPECT_TRUE(verify_goldbach(Qu, *ru.F, *ru.G, false).ok());
}

TEST(Goldbach, BinomialSearchOverIntegers) {
  Integers Z;
  for (const char* q : {"x^2 + 1", "x^3 - x", "2*x^2 + 3*x + 1"}) {
    const auto Q = P(Z, q, xv);
    const auto r = goldbach_decompose(Q);
    ASSERT_EQ(r.status, SearchStatus::Found) << q;
    EXPECT_EQ(r.method, "binomial-search");
    const auto c = verify_goldbach(Q, *r.F, *r.G, false);
    EXPECT_TRUE(c.ok()) << q;
    EXPECT_TRUE(c.binomial) << q;
  }
  const auto Q2 = P(Z, "x*y + x + y^2", xy);
  const auto r2 = goldbach_decompose(Q2);
  ASSERT_EQ(r2.status, SearchStatus::Found);
  EXPECT_TRUE(verify_goldbach(Q2, *r2.F, *r2.G, false).ok());
}

TEST(Goldbach, FailsOverF2ForXSquaredPlusX) {
  PrimeField F2(2);
  const auto r = goldbach_decompose(P(F2, "x^2 + x", xv));
  EXPECT_EQ(r.status, SearchStatus::ExhaustedNone);
  EXPECT_FALSE(r.F.has_value());
  // Independent census: x^2 + x = F + G with deg F <= 2 means F and G both
  // come from the 7 nonzero polynomials of degree <= 2; none works.
  const oracle::Box b{2, 2, 0};
  const auto red = oracle::reducible_set(b);
  auto irreducible_idx = [&](std::uint64_t i) { return i != 0 && b.total_degree(b.decode(i)) > 0 && !red.count(i); };
  const std::uint64_t q = b.encode({0, 1, 1});
  for (std::uint64_t f = 1; f < b.count(); ++f) {
    const auto g = f ^ q;  // subtraction over F_2 is xor on coefficient bits
    EXPECT_FALSE(irreducible_idx(f) && irreducible_idx(g));
  }
}

TEST(Goldbach, RelaxedOverF2TwoVariables) {
  PrimeField F2(2);
  const auto Q = P(F2, "x^2 + x", xy);
  GoldbachOptions opt;
  opt.relaxed_degx = true;
  const auto r = goldbach_decompose(Q, opt);
  ASSERT_EQ(r.status, SearchStatus::Found);
  const auto c = verify_goldbach(Q, *r.F, *r.G, true);
  EXPECT_TRUE(c.identity);
  EXPECT_TRUE(c.F_irreducible);
  EXPECT_TRUE(c.G_irreducible);
  EXPECT_TRUE(c.degree_clause);
  EXPECT_TRUE(brute_force_irreducible(*r.F));
  EXPECT_TRUE(brute_force_irreducible(*r.G));
  EXPECT_THROW(goldbach_decompose(P(F2, "x^2 + x", xv), opt), DomainError);
}

TEST(Goldbach, OtherFiniteFields) {
  PrimeField F3(3);
  const auto Q = P(F3, "x^2 + x", xv);
  const auto r = goldbach_decompose(Q);
  ASSERT_EQ(r.status, SearchStatus::Found);
  EXPECT_TRUE(verify_goldbach(Q, *r.F, *r.G, false).ok());
}

TEST(Spectrum, RationalPipeline) {
  Rationals Q;
  SpectrumSpec<Rationals> spec{Q, x12, {mpq_class(0), mpq_class(1)}, mpq_class(2), P(Q, "1", x12),
                               {P(Q, "x1", x12), P(Q, "x1 + 1", x12)}, {4, 4}, false};
  SearchConstraints c;
  c.strategy = Strategy::Random;
  const auto res = spectrum_construct(spec, c);
  ASSERT_EQ(res.status, SearchStatus::Found);
  const auto& U = *res.U;
  // Independent division checks of the three conclusions.
  EXPECT_TRUE(divide_exact(U, P(Q, "x1", x12)).has_value());
  EXPECT_TRUE(divide_exact(U - P(Q, "1", x12), P(Q, "x1 + 1", x12)).has_value());
  EXPECT_TRUE(irreducible(U - P(Q, "2", x12)));
  EXPECT_EQ(*degree_in(U, 0), 4u);
  EXPECT_EQ(*degree_in(U, 1), 4u);
  const auto chk = verify_spectrum(spec, U);
  EXPECT_TRUE(chk.ok());
  ASSERT_EQ(chk.reducible.size(), 2u);
  EXPECT_TRUE(chk.reducible[0].has_value() && *chk.reducible[0]);
  EXPECT_TRUE(chk.reducible[1].has_value() && *chk.reducible[1]);
  EXPECT_EQ(U, res.U0 + *res.M * P(Q, "x1^2 + x1", x12));
}

TEST(Spectrum, EmptySetReducesToOneIrreducibility) {
  PrimeField F3(3);
  SpectrumSpec<PrimeField> spec{F3, x12, {}, 1, P(F3, "x2 + 1", x12), {}, {2, 2}, false};
  const auto res = spectrum_construct(spec, SearchConstraints{});
  ASSERT_EQ(res.status, SearchStatus::Found);
  EXPECT_TRUE(irreducible(*res.U - P(F3, "x2 + 1", x12)));
  EXPECT_TRUE(verify_spectrum(spec, *res.U).ok());
}

TEST(Spectrum, ExtensionFieldA0) {
  ExtensionField F8(2, 3);
  SpectrumSpec<ExtensionField> spec{F8, x12, {F8.zero(), F8.one()}, F8.generator(), P(F8, "1", x12),
                                    {P(F8, "x1", x12), P(F8, "x1 + 1", x12)}, {3, 2}, true};
  SearchConstraints c;
  c.strategy = Strategy::Random;
  const auto res = spectrum_construct(spec, c);
  ASSERT_EQ(res.status, SearchStatus::Found);
  EXPECT_TRUE(verify_spectrum(spec, *res.U).ok());
  // M lies over F_2.
  for (const auto& [m, v] : res.M->terms()) EXPECT_LE(v.size(), 1u);
}

TEST(Spectrum, HypothesisViolations) {
  Rationals Q;
  auto base = [&] {
    return SpectrumSpec<Rationals>{Q, x12, {mpq_class(0), mpq_class(1)}, mpq_class(2), P(Q, "1", x12),
                                   {P(Q, "x1", x12), P(Q, "x1 + 1", x12)}, {4, 4}, false};
  };
  auto s1 = base();
  s1.a0 = 1;  // a0 in S
  EXPECT_THROW(spectrum_construct(s1, {}), DomainError);
  auto s2 = base();
  s2.w[1] = P(Q, "x1^2", x12);  // not comaximal with x1
  EXPECT_THROW(spectrum_construct(s2, {}), DomainError);
  auto s3 = base();
  s3.degrees = {1, 4};  // d_1 must exceed deg_x1(W) = 2
  EXPECT_THROW(spectrum_construct(s3, {}), DomainError);
  auto s4 = base();
  s4.V = P(Q, "x1", x12);  // V shares a factor with w_1
  EXPECT_THROW(spectrum_construct(s4, {}), DomainError);
}
