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

#include "helpers.hpp"
#include "oracles.hpp"
#include "schinzel/factor/brute_force.hpp"
#include "schinzel/search/engine.hpp"

using namespace schinzel;
using testing_helpers::P;

namespace {

template <class R>
SchinzelProblem<R> problem(const R& ring, const std::vector<std::string>& xs,
                           const std::vector<std::string>& ys, const std::vector<std::string>& polys,
                           std::vector<std::size_t> deg, SearchConstraints c = {}) {
  VarSet xv(xs), yv(ys);
  const auto all = xv.concat(yv);
  std::vector<MultiPoly<R>> ps;
  for (const auto& s : polys) ps.push_back(P(ring, s, all));
  return make_problem(ring, xv, yv, ps, std::move(deg), c);
}

template <class R>
void expect_sound(const SchinzelProblem<R>& prob, const SearchReport<R>& rep) {
  for (const auto& w : rep.witnesses) {
    EXPECT_TRUE(w.verified);
    EXPECT_TRUE(verify_witness(prob, w.M));
    for (const auto& img : w.images) EXPECT_TRUE(irreducible(img));
  }
}

std::vector<long> dense(const MultiPoly<Integers>& f) {
  std::vector<long> c(*total_degree(f) + 1, 0);
  for (const auto& [m, v] : f.terms()) c[m[0]] = v.get_si();
  return c;
}

}  // namespace

TEST(Search, TwinPrimeAnalog) {
  SearchConstraints c;
  c.coeff_bound = 5;
  const auto prob = problem(Integers{}, {"x"}, {"y"}, {"y", "y + 2"}, {2}, c);
  const auto rep = schinzel_search(prob);
  ASSERT_EQ(rep.status, SearchStatus::Found);
  expect_sound(prob, rep);
  // The rational-root oracle confirms each witness and its shift by 2.
  for (const auto& w : rep.witnesses) {
    auto c0 = dense(w.M[0]);
    if (c0.size() > 4) continue;
    EXPECT_TRUE(oracle::z_irreducible_deg_le3(c0));
    c0[0] += 2;
    EXPECT_TRUE(oracle::z_irreducible_deg_le3(c0));
  }
  EXPECT_TRUE(verify_witness(prob, {P(Integers{}, "x^2 + x + 1", VarSet({"x"}))}));
}

TEST(Search, SwanObstructionIsExhaustivelyEmpty) {
  const auto prob = problem(PrimeField(2), {"x"}, {"y"}, {"y^8 + x^3"}, {8});
  const auto rep = schinzel_search(prob);
  EXPECT_EQ(rep.status, SearchStatus::ExhaustedNone);
  EXPECT_TRUE(rep.complete);
  EXPECT_EQ(rep.tested, 512u);
  EXPECT_TRUE(rep.witnesses.empty());
}

TEST(Search, CapelliInstanceOverIntegers) {
  SearchConstraints c;
  c.coeff_bound = 3;
  c.max_witnesses = 5;
  const auto prob = problem(Integers{}, {"x"}, {"y"}, {"y^2 + x"}, {3}, c);
  const auto rep = schinzel_search(prob);
  ASSERT_EQ(rep.status, SearchStatus::Found);
  EXPECT_EQ(rep.witnesses.size(), 5u);
  expect_sound(prob, rep);
}

TEST(Search, MultipleYVariables) {
  const auto prob = problem(Integers{}, {"x"}, {"y1", "y2"}, {"y1*y2 + 1"}, {1});
  const VarSet xv({"x"});
  EXPECT_TRUE(verify_witness(prob, {P(Integers{}, "x", xv), P(Integers{}, "x", xv)}));
  EXPECT_FALSE(verify_witness(prob, {P(Integers{}, "x - 1", xv), P(Integers{}, "x + 1", xv)}));
  SearchConstraints c;
  c.max_witnesses = 3;
  const auto p2 = problem(Integers{}, {"x"}, {"y1", "y2"}, {"y1*y2 + 1"}, {1}, c);
  const auto rep = schinzel_search(p2);
  ASSERT_EQ(rep.status, SearchStatus::Found);
  expect_sound(p2, rep);
}

TEST(Search, SumOverF3MatchesDirectCheck) {
  const PrimeField F3(3);
  const auto prob = problem(F3, {"x"}, {"y1", "y2"}, {"y1 + y2"}, {1});
  const auto rep = schinzel_search(prob);
  ASSERT_TRUE(rep.complete);
  // 9^2 candidate pairs; a pair is a witness iff M1 + M2 has degree exactly 1.
  EXPECT_EQ(rep.tested, 81u);
  std::uint64_t expected = 0;
  for (unsigned a1 = 0; a1 < 3; ++a1)
    for (unsigned a2 = 0; a2 < 3; ++a2) expected += ((a1 + a2) % 3 != 0) ? 9 : 0;
  EXPECT_EQ(rep.hits, expected);
  const VarSet xv({"x"});
  EXPECT_TRUE(verify_witness(prob, {P(F3, "x", xv), P(F3, "1", xv)}));
}

TEST(Search, SingleYAgreesWithMultiPath) {
  // The same problem written with y and with y1 gives the same report.
  const auto a = problem(PrimeField(2), {"x"}, {"y"}, {"y^2 + x*y + 1"}, {2});
  const auto b = problem(PrimeField(2), {"x"}, {"y1"}, {"y1^2 + x*y1 + 1"}, {2});
  const auto ra = schinzel_search(a), rb = schinzel_search(b);
  EXPECT_EQ(ra.hits, rb.hits);
  EXPECT_EQ(ra.tested, rb.tested);
  ASSERT_EQ(ra.witnesses.size(), rb.witnesses.size());
  for (std::size_t i = 0; i < ra.witnesses.size(); ++i) EXPECT_EQ(ra.witnesses[i].M, rb.witnesses[i].M);
}

TEST(Search, DirichletInstanceAgreesWithBruteForce) {
  const PrimeField F2(2);
  const auto prob = problem(F2, {"x1", "x2"}, {"y"}, {"x1 + x2*y", "y"}, {2, 2});
  const auto rep = schinzel_search(prob);
  ASSERT_EQ(rep.status, SearchStatus::Found);
  EXPECT_TRUE(rep.complete);
  EXPECT_EQ(rep.tested, 512u);
  for (const auto& w : rep.witnesses) {
    EXPECT_TRUE(brute_force_irreducible(w.M[0]));
    EXPECT_TRUE(brute_force_irreducible(w.images[0]));
  }
}

TEST(Search, ExhaustiveAccountingIdentity) {
  const auto prob = problem(PrimeField(3), {"x"}, {"y"}, {"y^2 + x"}, {2});
  const auto rep = schinzel_search(prob, false);
  ASSERT_TRUE(rep.complete);
  std::uint64_t rejected = 0;
  for (const auto& [k, v] : rep.rejected) rejected += v;
  EXPECT_EQ(rep.hits + rejected, rep.tested);
  EXPECT_EQ(mpz_class(rep.tested), rep.box_size);
  EXPECT_EQ(rep.tested, 27u);
  EXPECT_GT(rep.hits, 0u);
}

TEST(Search, ExactDegreeFlag) {
  SearchConstraints c;
  c.exact_degree = {true};
  const auto prob = problem(PrimeField(2), {"x"}, {"y"}, {"y + x"}, {3}, c);
  const auto rep = schinzel_search(prob);
  for (const auto& w : rep.witnesses) EXPECT_EQ(*degree_in(w.M[0], 0), 3u);
  EXPECT_GT(rep.hits, 0u);
}

TEST(Search, BudgetExhaustion) {
  SearchConstraints c;
  c.budget = 10;
  const auto prob = problem(PrimeField(2), {"x"}, {"y"}, {"y^8 + x^3"}, {8}, c);
  const auto rep = schinzel_search(prob);
  EXPECT_EQ(rep.status, SearchStatus::BudgetExhausted);
  EXPECT_EQ(rep.tested, 10u);
  EXPECT_FALSE(rep.complete);
  EXPECT_EQ(exit_code(rep.status), 3);
}

TEST(Search, RandomStrategyIsSeedDeterministic) {
  SearchConstraints c;
  c.strategy = Strategy::Random;
  c.seed = 77;
  c.budget = 300;
  c.coeff_bound = 5;
  const auto prob = problem(Integers{}, {"x"}, {"y"}, {"y", "y + 2"}, {2}, c);
  const auto r1 = schinzel_search(prob);
  auto c4 = c;
  c4.threads = 4;
  const auto r2 = schinzel_search(problem(Integers{}, {"x"}, {"y"}, {"y", "y + 2"}, {2}, c4));
  EXPECT_EQ(r1.hits, r2.hits);
  EXPECT_EQ(r1.rejected, r2.rejected);
  ASSERT_EQ(r1.witnesses.size(), r2.witnesses.size());
  for (std::size_t i = 0; i < r1.witnesses.size(); ++i) {
    EXPECT_EQ(r1.witnesses[i].M, r2.witnesses[i].M);
    EXPECT_EQ(r1.witnesses[i].index, r2.witnesses[i].index);
  }
}

TEST(Search, ThreadCountDoesNotChangeExhaustiveReports) {
  for (unsigned t : {2u, 3u, 8u}) {
    SearchConstraints c;
    c.threads = t;
    const auto a = schinzel_search(problem(PrimeField(2), {"x1", "x2"}, {"y"}, {"x1 + x2*y", "y"}, {2, 2}));
    const auto b = schinzel_search(problem(PrimeField(2), {"x1", "x2"}, {"y"}, {"x1 + x2*y", "y"}, {2, 2}, c));
    EXPECT_EQ(a.hits, b.hits);
    EXPECT_EQ(a.rejected, b.rejected);
    ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) EXPECT_EQ(a.witnesses[i].M, b.witnesses[i].M);
  }
}

TEST(Search, DegreeOneProblemsCanForceIrreducibleM) {
  // Augmenting with P_0 = y makes every witness M irreducible itself.
  const auto prob = problem(PrimeField(3), {"x"}, {"y"}, {"x + (x + 1)*y", "y"}, {2});
  const auto rep = schinzel_search(prob);
  ASSERT_EQ(rep.status, SearchStatus::Found);
  for (const auto& w : rep.witnesses) EXPECT_TRUE(irreducible(w.M[0]));
}

TEST(Search, PaperModeCoprimality) {
  SearchConstraints c;
  c.paper_mode = true;
  c.coeff_bound = 3;
  c.max_witnesses = 4;
  const auto prob = problem(Integers{}, {"x"}, {"y"}, {"y^2 + x"}, {3}, c);
  ASSERT_TRUE(prob.constraints.coprime_pair.has_value());
  const auto rep = schinzel_search(prob);
  ASSERT_EQ(rep.status, SearchStatus::Found);
  for (const auto& w : rep.witnesses) {
    const auto a = w.M[0].coeff({3}), b = w.M[0].coeff({2});
    EXPECT_EQ(gcd(a, b), 1);
  }
}

TEST(Search, ProblemValidation) {
  EXPECT_THROW(problem(Integers{}, {"x"}, {"y"}, {"y^2 - x^2"}, {2}), DomainError);  // reducible P
  EXPECT_THROW(problem(Integers{}, {"x"}, {"y"}, {"x + 1"}, {2}), DomainError);      // no y
  EXPECT_THROW(problem(Integers{}, {"x"}, {"y"}, {"y"}, {0}), DomainError);
  EXPECT_THROW(problem(Integers{}, {"x"}, {"y"}, {"y"}, {1, 1}), DomainError);
}

TEST(Search, FixedDivisorOverF2) {
  const auto prob = problem(PrimeField(2), {"x"}, {"y"}, {"y", "y + 1"}, {2});
  const auto g = check_fixed_divisor(prob);
  ASSERT_TRUE(g.has_value());
  EXPECT_TRUE(divide_exact(*g, P(PrimeField(2), "x", VarSet({"x"}))).has_value());
  // x(x + 1) divides M(M + 1) for every M, since M(0)(M(0)+1) = 0 in F_2.
  EXPECT_TRUE(divide_exact(*g, P(PrimeField(2), "x^2 + x", VarSet({"x"}))).has_value());
}

TEST(Search, NoFixedDivisorCases) {
  EXPECT_FALSE(check_fixed_divisor(problem(PrimeField(3), {"x"}, {"y"}, {"y"}, {1})).has_value());
  EXPECT_FALSE(check_fixed_divisor(problem(Integers{}, {"x"}, {"y"}, {"y"}, {2})).has_value());
}

TEST(Search, DensityProbe) {
  SearchConstraints c;
  c.coeff_bound = 5;
  c.seed = 1;
  const auto twin = density_probe(problem(Integers{}, {"x"}, {"y"}, {"y", "y + 2"}, {2}, c), 2000);
  EXPECT_EQ(twin.samples, 2000u);
  EXPECT_GT(twin.fraction, 0.0);
  EXPECT_LE(twin.lower, twin.fraction);
  EXPECT_GE(twin.upper, twin.fraction);
  const auto swan = density_probe(problem(PrimeField(2), {"x"}, {"y"}, {"y^8 + x^3"}, {6}), 500);
  EXPECT_EQ(swan.hits, 0u);
  const auto lin = density_probe(problem(Integers{}, {"x"}, {"y"}, {"y"}, {2}, c), 500);
  EXPECT_GT(lin.fraction, 0.0);
  EXPECT_LE(lin.fraction, 1.0);
}

TEST(Search, WilsonInterval) {
  const auto e = wilson_interval(50, 100);
  EXPECT_NEAR(e.fraction, 0.5, 1e-12);
  EXPECT_NEAR(e.lower, 0.4038, 1e-3);
  EXPECT_NEAR(e.upper, 0.5962, 1e-3);
}
