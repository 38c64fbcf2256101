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

// `verify`: re-checks an emitted envelope from its canonical inputs. Claims
// are recomputed with independent division, factorization and, where the
// run is cheap, a full deterministic rerun compared field by field.

#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "schinzel/cli/commands.hpp"
#include "schinzel/cli/report.hpp"

namespace schinzel::cli {

using Checks = std::vector<std::pair<std::string, bool>>;

inline constexpr std::uint64_t kMaxRerun = 200000;

namespace verify_detail {

template <class R>
SchinzelProblem<R> problem_from(const R& ring, const Json& inputs, SearchConstraints c) {
  const auto xv = names_from_json(inputs.at("x_vars"));
  const auto yv = names_from_json(inputs.at("y_vars"));
  return build_problem(ring, inputs.at("P").get<std::vector<std::string>>(), xv, yv,
                       inputs.at("degrees").get<std::vector<std::size_t>>(), std::move(c));
}

template <class R>
void check_witnesses(const SchinzelProblem<R>& prob, const Json& witnesses, Checks& checks) {
  bool ok = true;
  for (const auto& w : witnesses) {
    std::vector<MultiPoly<R>> M;
    for (const auto& t : w.at("M")) M.push_back(parse_input("M", t.get<std::string>(), prob.ring, prob.xvars));
    ok = ok && verify_witness(prob, M);
    const auto images = specialize_images(prob, M);
    ok = ok && poly_list(images, prob.xvars) == w.at("images");
    for (const auto& mk : M) {
      for (std::size_t j = 0; j < prob.constraints.exact_degree.size(); ++j) {
        if (prob.constraints.exact_degree[j]) ok = ok && !mk.is_zero() && *degree_in(mk, j) == prob.degrees[j];
      }
    }
  }
  checks.emplace_back("witnesses_reverified", ok);
}

template <class R>
Checks verify_factor(const R& ring, const Json& env) {
  const auto& in = env.at("inputs");
  const auto& res = env.at("result");
  const auto vars = names_from_json(in.at("vars"));
  const auto f = parse_input("f", in.at("f").get<std::string>(), ring, vars);
  auto product = MultiPoly<R>::constant(ring, vars.size(), parse_element("unit", res.at("unit").get<std::string>(), ring));
  bool irreducible = true;
  for (const auto& entry : res.at("factors")) {
    const auto h = parse_input("factor", entry.at("factor").get<std::string>(), ring, vars);
    irreducible = irreducible && is_irreducible(h).irreducible;
    product *= pow(h, entry.at("multiplicity").get<unsigned>());
  }
  return {{"recomposes", product == f}, {"factors_irreducible", irreducible}};
}

template <class R>
Checks verify_irred(const R& ring, const Json& env) {
  const auto& in = env.at("inputs");
  const auto& res = env.at("result");
  const auto vars = names_from_json(in.at("vars"));
  const auto f = parse_input("f", in.at("f").get<std::string>(), ring, vars);
  const auto cert = is_irreducible(f);
  Checks checks{{"verdict_matches", cert.irreducible == res.at("irreducible").get<bool>()}};
  if (!res.at("factor").is_null()) {
    const auto h = parse_input("factor", res.at("factor").get<std::string>(), ring, vars);
    checks.emplace_back("factor_divides", divide_exact(f, h).has_value());
  }
  return checks;
}

template <class R>
Checks verify_search(const R& ring, const Json& env) {
  const auto& in = env.at("inputs");
  const auto& res = env.at("result");
  const auto n = in.at("x_vars").size();
  const auto prob = problem_from(ring, in, constraints_from_json(env.at("options"), n));
  Checks checks;
  check_witnesses(prob, res.at("witnesses"), checks);
  checks.emplace_back("status_consistent",
                      (res.at("status") == "found") == (res.at("hits").get<std::uint64_t>() > 0));
  if (res.at("tested").get<std::uint64_t>() <= kMaxRerun) {
    auto again = report_json(schinzel_search(prob), prob.xvars);
    Json claimed = res;
    claimed.erase("fixed_divisor");
    checks.emplace_back("rerun_matches", again == claimed);
  }
  return checks;
}

template <class R>
Checks verify_density(const R& ring, const Json& env) {
  const auto& in = env.at("inputs");
  const auto& res = env.at("result");
  const auto n = in.at("x_vars").size();
  const auto prob = problem_from(ring, in, constraints_from_json(env.at("options"), n));
  const auto samples = res.at("samples").get<std::uint64_t>();
  Checks checks{{"hits_within_samples", res.at("hits").get<std::uint64_t>() <= samples}};
  if (samples <= kMaxRerun) {
    const auto est = density_probe(prob, samples);
    checks.emplace_back("rerun_matches", est.hits == res.at("hits").get<std::uint64_t>());
  }
  return checks;
}

template <class R>
Checks verify_swan(const R& ring, const Json& env) {
  if constexpr (!R::is_finite) {
    throw DomainError("swan-scan envelopes need a finite field");
  } else {
    const auto& in = env.at("inputs");
    const auto& res = env.at("result");
    SearchConstraints c;
    c.budget = std::stoull(res.at("box_size").get<std::string>());
    const auto prob = problem_from(ring, in, c);
    const auto report = schinzel_search(prob);
    Checks checks{{"rerun_candidates", report.tested == res.at("candidates").get<std::uint64_t>()},
                  {"rerun_irreducible", report.hits == res.at("irreducible").get<std::uint64_t>()},
                  {"complete", report.complete && res.at("complete").get<bool>()}};
    bool examples = true;
    for (const auto& t : res.at("examples")) {
      examples = examples && verify_witness(prob, {parse_input("M", t.get<std::string>(), ring, prob.xvars)});
    }
    checks.emplace_back("examples_reverified", examples);
    return checks;
  }
}

template <class R>
Checks verify_goldbach_env(const R& ring, const Json& env) {
  const auto& in = env.at("inputs");
  const auto& res = env.at("result");
  const auto& opt = env.at("options");
  const auto vars = names_from_json(in.at("vars"));
  const auto Q = parse_input("Q", in.at("Q").get<std::string>(), ring, vars);
  const bool relaxed = opt.at("relaxed_degx").get<bool>();
  if (!res.at("F").is_null()) {
    const auto F = parse_input("F", res.at("F").get<std::string>(), ring, vars);
    const auto G = parse_input("G", res.at("G").get<std::string>(), ring, vars);
    const auto c = verify_goldbach(Q, F, G, relaxed);
    return {{"identity", c.identity},
            {"F_irreducible", c.F_irreducible},
            {"G_irreducible", c.G_irreducible},
            {"degree_clause", c.degree_clause}};
  }
  GoldbachOptions go;
  go.relaxed_degx = relaxed;
  go.budget = opt.at("budget").get<std::uint64_t>();
  go.coeff_bound = opt.at("coeff_bound").get<long>();
  go.deg_u = opt.at("deg_u").get<unsigned>();
  const auto again = goldbach_decompose(Q, go);
  return {{"rerun_status_matches", to_string(again.status) == res.at("status").get<std::string>()}};
}

template <class F>
Checks verify_spectrum_env(const F& field, const Json& env, bool base_subfield) {
  const auto& in = env.at("inputs");
  const auto& res = env.at("result");
  const auto vars = names_from_json(in.at("vars"));
  SpectrumSpec<F> spec{field, vars, {}, parse_element("a0", in.at("a0").get<std::string>(), field),
                       parse_input("V", in.at("V").get<std::string>(), field, vars), {},
                       in.at("degrees").get<std::vector<std::size_t>>(), base_subfield};
  for (const auto& s : in.at("S")) spec.S.push_back(parse_element("S", s.get<std::string>(), field));
  for (const auto& w : in.at("w")) spec.w.push_back(parse_input("w", w.get<std::string>(), field, vars));
  if (res.at("U").is_null()) return {{"no_claim", res.at("status") != "found"}};
  const auto U = parse_input("U", res.at("U").get<std::string>(), field, vars);
  return spectrum_checks(verify_spectrum(spec, U));
}

}  // namespace verify_detail

/// Re-checks an envelope; exit code 0 when every check passes, 4 otherwise.
inline Outcome cmd_verify(const Json& env) {
  using namespace verify_detail;
  if (!env.is_object() || env.value("tool", "") != kToolName) throw ParseError("not a schinzel envelope", 0);
  const auto command = env.at("command").get<std::string>();
  const auto ring_name = env.at("ring").get<std::string>();
  Checks checks;
  if (command == "spectrum") {
    const bool ext = !env.at("inputs").at("a0_field").is_null();
    checks = visit_ring(RingSpec::parse(ring_name), [&](const auto& ring) -> Checks {
      using R = std::decay_t<decltype(ring)>;
      if constexpr (R::is_field) {
        return verify_spectrum_env(ring, env, ext);
      } else {
        throw DomainError("spectrum envelopes need a field");
      }
    });
  } else {
    checks = visit_ring(RingSpec::parse(ring_name), [&](const auto& ring) -> Checks {
      if (command == "factor") return verify_factor(ring, env);
      if (command == "irred") return verify_irred(ring, env);
      if (command == "schinzel") return verify_search(ring, env);
      if (command == "density") return verify_density(ring, env);
      if (command == "swan-scan") return verify_swan(ring, env);
      if (command == "goldbach") return verify_goldbach_env(ring, env);
      throw ParseError("cannot verify command '" + command + "'", 0);
    });
  }
  checks.emplace_back("envelope_reported_pass", verification_passed(env));
  auto block = verification_block(checks);
  const bool pass = block["status"] == "pass";
  Json result{{"verified_command", command}, {"pass", pass}};
  Outcome o{make_envelope("verify", ring_name, Json::object(), Json{{"command", command}}, result, block),
            pass ? 0 : 4, ""};
  o.summary = std::string("verify ") + command + ": " + (pass ? "pass" : "FAIL");
  return o;
}

}  // namespace schinzel::cli
