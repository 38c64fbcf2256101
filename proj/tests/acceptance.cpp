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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Runtime limits are part of the criteria and pinned here.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_entry.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "schinzel/constructions/goldbach.hpp"
#include "schinzel/factor/brute_force.hpp"

using namespace schinzel;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

struct Verdict {
  bool pass;
  std::string detail;
};

// Runtime ceilings in seconds; zero means no ceiling.
struct Criterion {
  int id;
  std::string title;
  double limit;
  std::function<Verdict()> body;
};

std::vector<long> dense_z(const MultiPoly<Integers>& f) {
  std::vector<long> c(*total_degree(f) + 1, 0);
  for (const auto& [m, v] : f.terms()) c[m[0]] = v.get_si();
  return c;
}

const std::vector<std::string> kSwan8{"swan-scan", "--ring", "GF(2)", "--P", "y^8+x^3", "--max-deg", "8"};
const std::vector<std::string> kTwin{"schinzel", "--ring", "Z", "--P", "y", "--P", "y+2", "--deg", "2",
                                     "--coeff-bound", "5"};
const std::vector<std::string> kDirichlet{"schinzel", "--ring", "GF(2)", "--P", "x1 + x2*y", "--P", "y",
                                          "--deg", "2,2"};
const std::vector<std::string> kSpectrum{"spectrum", "--field", "Q", "--S", "0,1", "--a0", "2", "--V", "1",
                                         "--w", "x1", "--w", "x1+1", "--deg", "4,4"};

Verdict swan() {
  std::string detail;
  for (const char* d : {"8", "10"}) {
    auto args = kSwan8;
    args.back() = d;
    const auto r = cli(args);
    const auto j = Json::parse(r.out);
    const auto& res = j["result"];
    const std::uint64_t expected = std::uint64_t{1} << (std::stoi(d) + 1);
    if (r.code != 0 || res["irreducible"] != 0 || res["candidates"] != expected || res["complete"] != true) {
      return {false, "max_deg " + std::string(d) + ": " + res.dump()};
    }
    detail += "max_deg " + std::string(d) + ": 0/" + std::to_string(expected) + "; ";
  }
  return {true, detail};
}

Verdict census_f2() {
  const PrimeField F2(2);
  const VarSet xv({"x"});
  std::vector<std::string> found;
  for (unsigned c = 0; c < 4; ++c) {
    auto f = MultiPoly<PrimeField>::monomial(F2, 1, {2}, 1);
    if (c & 1) f.add_term({0}, 1);
    if (c & 2) f.add_term({1}, 1);
    if (is_irreducible(f).irreducible) found.push_back(to_string(f, xv));
  }
  const auto sieve = oracle::irreducible_univariate(2, 2);
  const bool ok = found == std::vector<std::string>{"x^2 + x + 1"} && sieve.size() == 1 &&
                  sieve[0] == std::vector<unsigned>{1, 1, 1};
  std::string list;
  for (const auto& s : found) list += s + " ";
  return {ok, "irreducible degree 2: " + list};
}

Verdict goldbach_fail() {
  const auto r = cli({"goldbach", "--ring", "GF(2)", "--Q", "x^2+x"});
  const auto j = Json::parse(r.out);
  const bool ok = r.code == 2 && j["result"]["status"] == "exhaustively-none" && j["result"]["F"].is_null();
  return {ok, "exit " + std::to_string(r.code) + ", status " + j["result"]["status"].dump()};
}

Verdict goldbach_relaxed() {
  const auto r = cli({"goldbach", "--ring", "GF(2)", "--Q", "x^2+x", "--relaxed-degx"});
  const auto j = Json::parse(r.out);
  if (r.code != 0) return {false, "exit " + std::to_string(r.code)};
  const PrimeField F2(2);
  const VarSet vars(j["inputs"]["vars"].get<std::vector<std::string>>());
  if (vars.size() != 2) return {false, "expected two variables"};
  const auto Q = parse_poly("x^2 + x", F2, vars);
  const auto F = parse_poly(j["result"]["F"].get<std::string>(), F2, vars);
  const auto G = parse_poly(j["result"]["G"].get<std::string>(), F2, vars);
  const bool identity = F + G == Q;
  const bool irr = brute_force_irreducible(F) && brute_force_irreducible(G);
  const bool degx = *degree_in(F, 0) <= 2;
  return {identity && irr && degx, "F = " + to_string(F, vars) + ", G = " + to_string(G, vars)};
}

Verdict closed_forms() {
  Integers Z;
  std::mt19937_64 rng(5);
  const VarSet xv({"x"});
  int good = 0;
  for (int k = 0; k < 100; ++k) {
    long q1 = 0;
    while (q1 == 0) q1 = static_cast<long>(rng() % 201) - 100;
    if (k % 7 == 0) q1 = 1;
    const long q0 = static_cast<long>(rng() % 201) - 100;
    MultiPoly<Integers> Q(Z, 1);
    Q.add_term({1}, mpz_class(q1));
    Q.add_term({0}, mpz_class(q0));
    const auto r = goldbach_decompose(Q);
    if (!r.F || !r.G || r.method != "closed-form") continue;
    // Rows of the table evaluated directly.
    const std::string row = q1 != 1 ? "q1 != 1" : "q1 != -1";
    const std::vector<long> F = q1 != 1 ? std::vector<long>{q0 - 1, 1} : std::vector<long>{q0 - 1, -1};
    const std::vector<long> G = q1 != 1 ? std::vector<long>{1, q1 - 1} : std::vector<long>{1, q1 + 1};
    const bool ok = r.table_case == row && dense_z(*r.F) == F && dense_z(*r.G) == G && *r.F + *r.G == Q &&
                    oracle::z_irreducible_deg_le3(F) && oracle::z_irreducible_deg_le3(G);
    good += ok ? 1 : 0;
  }
  return {good == 100, std::to_string(good) + "/100 decompositions verified"};
}

Verdict twin() {
  const auto r = cli(kTwin);
  const auto j = Json::parse(r.out);
  if (r.code != 0) return {false, "exit " + std::to_string(r.code)};
  const Integers Z;
  const VarSet xv({"x"});
  bool has_target = false, all_ok = true;
  std::size_t count = 0;
  for (const auto& w : j["result"]["witnesses"]) {
    const auto M = parse_poly(w["M"][0].get<std::string>(), Z, xv);
    auto c = dense_z(M);
    if (c.size() > 4) return {false, "witness of degree > 3"};
    bool ok = oracle::z_irreducible_deg_le3(c);
    c[0] += 2;
    ok = ok && oracle::z_irreducible_deg_le3(c);
    all_ok = all_ok && ok;
    has_target = has_target || to_string(M, xv) == "x^2 + x + 1";
    ++count;
  }
  const bool oracle_target =
      oracle::z_irreducible_deg_le3({1, 1, 1}) && oracle::z_irreducible_deg_le3({3, 1, 1});
  return {count >= 1 && has_target && all_ok && oracle_target,
          std::to_string(count) + " witnesses, x^2 + x + 1 " + (has_target ? "present" : "missing")};
}

Verdict dirichlet() {
  const auto r = cli(kDirichlet);
  const auto j = Json::parse(r.out);
  if (r.code != 0) return {false, "exit " + std::to_string(r.code)};
  const PrimeField F2(2);
  const VarSet xv({"x1", "x2"});
  const auto A = parse_poly("x1", F2, xv), B = parse_poly("x2", F2, xv);
  std::size_t count = 0;
  for (const auto& w : j["result"]["witnesses"]) {
    const auto M = parse_poly(w["M"][0].get<std::string>(), F2, xv);
    if (!brute_force_irreducible(M) || !brute_force_irreducible(A + B * M)) {
      return {false, "witness " + to_string(M, xv) + " fails the brute-force oracle"};
    }
    ++count;
  }
  const bool complete = j["result"]["complete"] == true && j["result"]["tested"] == 512;
  return {count >= 1 && complete, std::to_string(count) + " witnesses in the complete 512-element box"};
}

Verdict sweep() {
  const PrimeField F2(2);
  const oracle::Box b{2, 2, 2};
  const auto red = oracle::reducible_set(b);
  std::size_t agree = 0, total = 0;
  for (std::uint64_t i = 1; i < b.count(); ++i) {
    const auto c = b.decode(i);
    MultiPoly<PrimeField> f(F2, 2);
    for (unsigned x = 0; x <= 2; ++x)
      for (unsigned y = 0; y <= 2; ++y)
        if (c[x * 3 + y]) f.add_term({x, y}, 1);
    const bool kron = is_irreducible(f).irreducible;
    const bool brute = brute_force_irreducible(f);
    const bool product_oracle = b.total_degree(c) > 0 && red.count(i) == 0;
    agree += (kron == brute && brute == product_oracle) ? 1 : 0;
    ++total;
  }
  return {total == 511 && agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree"};
}

template <class R>
bool round_trip(const R& ring, std::uint64_t seed, std::string& detail) {
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 1000; ++k) {
    auto f = MultiPoly<R>::constant(ring, 2, ring.one());
    const int parts = 2 + static_cast<int>(rng() % 2);
    for (int p = 0; p < parts; ++p) {
      MultiPoly<R> g(ring, 2);
      while (g.is_constant()) g = testing_helpers::random_poly(ring, 2, 2, 3, rng);
      f *= g;
    }
    const auto fac = factor(f, FactorOptions{seed + static_cast<std::uint64_t>(k)});
    if (!(recompose(fac) == f)) {
      detail += ring.name() + " recomposition failed; ";
      return false;
    }
    for (const auto& [g, m] : fac.factors) {
      if (!is_irreducible(g).irreducible) {
        detail += ring.name() + " reducible factor; ";
        return false;
      }
    }
  }
  detail += ring.name() + " ok; ";
  return true;
}

Verdict factor_round_trip() {
  std::string detail;
  bool ok = round_trip(Integers{}, 1, detail);
  ok = round_trip(PrimeField(2), 2, detail) && ok;
  ok = round_trip(PrimeField(5), 3, detail) && ok;
  ok = round_trip(ExtensionField(2, 2), 4, detail) && ok;
  ok = round_trip(PolyRing<PrimeField>(PrimeField(2)), 5, detail) && ok;
  return {ok, detail};
}

Verdict spectrum() {
  const auto r = cli(kSpectrum);
  const auto j = Json::parse(r.out);
  if (r.code != 0) return {false, "exit " + std::to_string(r.code)};
  const Rationals Q;
  const VarSet xv({"x1", "x2"});
  const auto U = parse_poly(j["result"]["U"].get<std::string>(), Q, xv);
  auto poly = [&](const char* s) { return parse_poly(s, Q, xv); };
  // (a): U - a_i V = w_i H_i, H_i irreducible, H_i not dividing w_i.
  bool a = true;
  const std::vector<std::pair<const char*, const char*>> residues{{"0", "x1"}, {"1", "x1 + 1"}};
  for (const auto& [ai, wi] : residues) {
    const auto H = divide_exact(U - poly(ai), poly(wi));
    a = a && H && !H->is_zero() && is_irreducible(*H).irreducible && !divide_exact(poly(wi), *H);
  }
  // (b): deg(U - a0 V) = max(deg U, deg V), and U - a0 V irreducible.
  const auto F0 = U - poly("2");
  const bool b = *total_degree(F0) == *total_degree(U) && is_irreducible(F0).irreducible;
  // (c): partial degrees.
  const bool c = *degree_in(U, 0) == 4 && *degree_in(U, 1) == 4;
  return {a && b && c, std::string("(a) ") + (a ? "ok" : "fail") + ", (b) " + (b ? "ok" : "fail") + ", (c) " +
                           (c ? "ok" : "fail")};
}

Verdict determinism() {
  std::string detail;
  bool ok = true;
  for (const auto* base : {&kSwan8, &kTwin, &kDirichlet, &kSpectrum}) {
    for (const char* seed : {"0", "17"}) {
      std::string reference;
      for (const char* threads : {"1", "2", "4", "7"}) {
        auto args = *base;
        args.insert(args.end(), {"--seed", seed, "--threads", threads});
        const auto out = cli(args).out;
        if (reference.empty()) reference = out;
        if (out != reference || out.empty()) {
          ok = false;
          detail += (*base)[0] + " differs at threads " + threads + "; ";
        }
      }
    }
  }
  return {ok, ok ? "4 commands x 2 seeds x 4 thread counts byte-identical" : detail};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "swan obstruction: 0 witnesses at max_deg 8 and 10", 10, swan},
      {2, "F_2 degree-2 census: only x^2 + x + 1", 0, census_f2},
      {3, "Goldbach over F_2 fails for x^2 + x (exit 2)", 1, goldbach_fail},
      {4, "Goldbach relaxed over F_2[x, y] succeeds", 0, goldbach_relaxed},
      {5, "degree-1 closed forms over Z (100 random)", 5, closed_forms},
      {6, "twin-prime analog over Z", 0, twin},
      {7, "degree-1 Dirichlet instance over F_2", 0, dirichlet},
      {8, "Kronecker vs brute-force sweep, 511 cases", 60, sweep},
      {9, "factorization round trip over Z, F_2, F_5, F_4, F_2[u]", 0, factor_round_trip},
      {10, "spectrum pipeline over Q", 0, spectrum},
      {11, "determinism across thread counts", 0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs >= c.limit) {
      v.pass = false;
      v.detail += " [over the " + std::to_string(static_cast<int>(c.limit)) + " s limit]";
    }
    failures += v.pass ? 0 : 1;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (v.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " -- " << v.detail << " ("
         << secs << " s)";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
