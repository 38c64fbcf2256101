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

// Command implementations, generic in the coefficient ring. Each returns
// an Outcome whose envelope carries enough data for `verify` to re-check
// the result without trusting it.

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "schinzel/cli/report.hpp"
#include "schinzel/constructions/goldbach.hpp"
#include "schinzel/constructions/spectrum.hpp"
#include "schinzel/errors.hpp"
#include "schinzel/factor/brute_force.hpp"
#include "schinzel/factor/multivariate.hpp"
#include "schinzel/io/parse.hpp"
#include "schinzel/rings.hpp"
#include "schinzel/search/engine.hpp"

namespace schinzel::cli {

struct CommonOptions {
  std::string ring = "Z";
  std::uint64_t seed = 0;
  std::uint64_t budget = 100000;
  unsigned threads = 1;
};

struct SearchArgs {
  std::vector<std::string> P;
  std::optional<std::size_t> nvars;
  std::string deg;
  std::string strategy = "exhaustive";
  long coeff_bound = 3;
  unsigned deg_u = 1;
  std::optional<unsigned> deg_u_target;
  bool paper_mode = false;
  bool exact_degree = false;
  std::uint64_t max_witnesses = 0;
  bool fixed_divisor = false;
  std::uint64_t samples = 2000;  // density
  std::size_t max_deg = 8;       // swan-scan
  std::size_t show = 16;         // swan-scan examples
};

struct GoldbachArgs {
  std::string Q;
  bool relaxed_degx = false;
  long coeff_bound = 3;
  unsigned deg_u = 1;
};

struct SpectrumArgs {
  std::string field = "Q";
  std::string S;
  std::string a0;
  std::string V = "1";
  std::vector<std::string> w;
  std::string deg;
  std::string a0_field;  // extension k(a0) when a0 is not in k
  std::string strategy = "random";
  long coeff_bound = 3;
};

inline Json common_json(const CommonOptions& c) {
  Json j;
  j["seed"] = c.seed;
  j["budget"] = c.budget;
  return j;
}

// ---------------------------------------------------------------------------
// factor / irred

/// All names in the texts: x-like names in natural order, then y names.
template <class R>
VarSet all_vars(const std::vector<std::string>& texts, const char* fallback = "x") {
  const auto inf = infer_vars<R>(texts);
  auto v = inf.x.concat(inf.y);
  if (v.size() == 0) v = VarSet({fallback});
  return v;
}

template <class R>
Outcome cmd_factor(const R& ring, const std::string& text, const CommonOptions& common) {
  const auto vars = all_vars<R>({text});
  const auto f = parse_input("--f", text, ring, vars);
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  const auto fac = factor(f, FactorOptions{common.seed});
  Json factors = Json::array();
  bool all_irreducible = true;
  for (const auto& [h, m] : fac.factors) {
    factors.push_back(Json{{"factor", to_string(h, vars)}, {"multiplicity", m}});
    all_irreducible = all_irreducible && is_irreducible(h).irreducible;
  }
  Json result;
  result["unit"] = ring.to_string(fac.unit);
  result["factors"] = std::move(factors);
  result["trace"] = Json(fac.trace);
  Json inputs{{"f", to_string(f, vars)}, {"vars", names_json(vars)}};
  auto ver = verification_block({{"recomposes", recompose(fac) == f}, {"factors_irreducible", all_irreducible}});
  Outcome o{make_envelope("factor", ring.name(), common_json(common), inputs, result, ver), 0, ""};
  o.summary = "factor: " + std::to_string(fac.factor_count()) + " irreducible factor(s) of " + to_string(f, vars);
  return o;
}

template <class R>
Outcome cmd_irred(const R& ring, const std::string& text, bool oracle, const CommonOptions& common) {
  const auto vars = all_vars<R>({text});
  const auto f = parse_input("--f", text, ring, vars);
  const auto cert = is_irreducible(f, FactorOptions{common.seed});
  Json result;
  result["irreducible"] = cert.irreducible;
  result["reason"] = cert.reason;
  result["factor"] = cert.factor ? Json(to_string(*cert.factor, vars)) : Json(nullptr);
  std::vector<std::pair<std::string, bool>> checks;
  if (cert.factor) {
    auto q = divide_exact(f, *cert.factor);
    checks.emplace_back("factor_divides", q.has_value());
  }
  if constexpr (R::is_finite) {
    if (oracle) {
      const bool brute = brute_force_irreducible(f);
      result["brute_force"] = brute;
      checks.emplace_back("brute_force_agrees", brute == cert.irreducible);
    }
  }
  Json inputs{{"f", to_string(f, vars)}, {"vars", names_json(vars)}};
  Outcome o{make_envelope("irred", ring.name(), common_json(common), inputs, result, verification_block(checks)), 0,
            ""};
  o.summary = "irred: " + std::string(cert.irreducible ? "irreducible" : cert.reason);
  return o;
}

// ---------------------------------------------------------------------------
// schinzel / density / swan-scan

template <class R>
SchinzelProblem<R> build_problem(const R& ring, const std::vector<std::string>& texts, const VarSet& xv,
                                 const VarSet& yv, std::vector<std::size_t> degrees, SearchConstraints c) {
  const auto all = xv.concat(yv);
  std::vector<MultiPoly<R>> P;
  for (const auto& t : texts) P.push_back(parse_input("--P", t, ring, all));
  return make_problem(ring, xv, yv, std::move(P), std::move(degrees), std::move(c));
}

template <class R>
std::pair<VarSet, VarSet> problem_vars(const std::vector<std::string>& texts, std::optional<std::size_t> nvars,
                                       std::size_t ndeg) {
  const auto inf = infer_vars<R>(texts);
  const std::size_t n = nvars.value_or(ndeg);
  if (n != ndeg) {
    throw DomainError("--deg has " + std::to_string(ndeg) + " entries but --vars is " + std::to_string(n));
  }
  return {resolve_x_vars(inf.x, n), inf.y.size() ? inf.y : VarSet({"y"})};
}

inline SearchConstraints constraints_from(const SearchArgs& a, const CommonOptions& common, std::size_t n) {
  SearchConstraints c;
  if (a.strategy == "exhaustive") {
    c.strategy = Strategy::Exhaustive;
  } else if (a.strategy == "random") {
    c.strategy = Strategy::Random;
  } else {
    throw ParseError("--strategy must be exhaustive or random", 0);
  }
  c.seed = common.seed;
  c.budget = common.budget;
  c.threads = common.threads;
  c.coeff_bound = a.coeff_bound;
  c.deg_u = a.deg_u;
  c.deg_u_target = a.deg_u_target;
  c.paper_mode = a.paper_mode;
  c.max_witnesses = a.max_witnesses;
  if (a.exact_degree) c.exact_degree.assign(n, true);
  return c;
}

template <class R>
Json problem_inputs(const SchinzelProblem<R>& prob) {
  const auto all = prob.all_vars();
  Json j;
  j["P"] = poly_list(prob.P, all);
  j["x_vars"] = names_json(prob.xvars);
  j["y_vars"] = names_json(prob.yvars);
  j["degrees"] = Json(prob.degrees);
  return j;
}

/// Independent checks on a report: every witness re-verifies and meets the
/// degree flags, and complete runs account for the whole box.
template <class R>
std::vector<std::pair<std::string, bool>> report_checks(const SchinzelProblem<R>& prob,
                                                        const SearchReport<R>& r) {
  bool reverified = true;
  for (const auto& w : r.witnesses) {
    reverified = reverified && verify_witness(prob, w.M);
    for (const auto& mk : w.M) {
      for (std::size_t j = 0; j < prob.constraints.exact_degree.size(); ++j) {
        if (prob.constraints.exact_degree[j]) {
          reverified = reverified && !mk.is_zero() && *degree_in(mk, j) == prob.degrees[j];
        }
      }
    }
  }
  std::vector<std::pair<std::string, bool>> checks{{"witnesses_reverified", reverified}};
  if (r.complete) checks.emplace_back("box_accounting", mpz_class(static_cast<unsigned long>(r.tested)) == r.box_size);
  checks.emplace_back("status_consistent", (r.status == SearchStatus::Found) == (r.hits > 0));
  return checks;
}

template <class R>
Outcome cmd_schinzel(const R& ring, const SearchArgs& a, const CommonOptions& common) {
  const auto degrees = parse_degrees(a.deg);
  const auto [xv, yv] = problem_vars<R>(a.P, a.nvars, degrees.size());
  const auto prob = build_problem(ring, a.P, xv, yv, degrees, constraints_from(a, common, degrees.size()));
  const auto report = schinzel_search(prob);
  auto result = report_json(report, xv);
  if (a.fixed_divisor) {
    const auto g = check_fixed_divisor(prob);
    result["fixed_divisor"] = g ? Json(to_string(*g, xv)) : Json(nullptr);
  }
  Json options = constraints_json(prob.constraints);
  Outcome o{make_envelope("schinzel", ring.name(), options, problem_inputs(prob), result,
                          verification_block(report_checks(prob, report))),
            exit_code(report.status), ""};
  o.summary = "schinzel: " + to_string(report.status) + ", " + std::to_string(report.hits) + " witness(es) in " +
              std::to_string(report.tested) + " candidates";
  return o;
}

template <class R>
Outcome cmd_density(const R& ring, const SearchArgs& a, const CommonOptions& common) {
  const auto degrees = parse_degrees(a.deg);
  const auto [xv, yv] = problem_vars<R>(a.P, a.nvars, degrees.size());
  auto c = constraints_from(a, common, degrees.size());
  c.strategy = Strategy::Random;
  c.budget = a.samples;
  c.max_witnesses = 0;
  const auto prob = build_problem(ring, a.P, xv, yv, degrees, c);
  const auto est = density_probe(prob, a.samples);
  Json result;
  result["samples"] = est.samples;
  result["hits"] = est.hits;
  result["fraction"] = est.fraction;
  result["wilson95"] = Json::array({est.lower, est.upper});
  result["rejected"] = histogram_json(est.rejected);
  auto ver = verification_block({{"interval_contains_fraction", est.lower <= est.fraction && est.fraction <= est.upper},
                                 {"hits_within_samples", est.hits <= est.samples}});
  Outcome o{make_envelope("density", ring.name(), constraints_json(prob.constraints), problem_inputs(prob), result, ver),
            0, ""};
  o.summary = "density: " + std::to_string(est.hits) + "/" + std::to_string(est.samples);
  return o;
}

template <class R>
Outcome cmd_swan_scan(const R& ring, const SearchArgs& a, const CommonOptions& common) {
  if constexpr (!R::is_finite) {
    throw DomainError("swan-scan needs a finite field, got " + ring.name());
  } else {
    const auto [xv, yv] = problem_vars<R>(a.P, std::nullopt, 1);
    SearchConstraints c;
    c.strategy = Strategy::Exhaustive;
    c.threads = common.threads;
    mpz_class box;
    mpz_ui_pow_ui(box.get_mpz_t(), ring.size(), a.max_deg + 1);
    if (box > (std::uint64_t{1} << 22)) throw DomainError("swan-scan box has " + box.get_str() + " candidates");
    c.budget = box.get_ui();
    const auto prob = build_problem(ring, a.P, xv, yv, {a.max_deg}, c);
    const auto report = schinzel_search(prob);
    Json examples = Json::array();
    for (std::size_t i = 0; i < std::min(a.show, report.witnesses.size()); ++i) {
      examples.push_back(to_string(report.witnesses[i].M[0], xv));
    }
    Json result;
    result["max_deg"] = a.max_deg;
    result["candidates"] = report.tested;
    result["box_size"] = report.box_size.get_str();
    result["irreducible"] = report.hits;
    result["reducible"] = report.tested - report.hits;
    result["complete"] = report.complete;
    result["rejected"] = histogram_json(report.rejected);
    result["examples"] = std::move(examples);
    Json options{{"max_deg", a.max_deg}};
    Outcome o{make_envelope("swan-scan", ring.name(), options, problem_inputs(prob), result,
                            verification_block(report_checks(prob, report))),
              report.complete ? 0 : 3, ""};
    o.summary = "swan-scan: " + std::to_string(report.hits) + " irreducible among " + std::to_string(report.tested) +
                " candidates";
    return o;
  }
}

// ---------------------------------------------------------------------------
// goldbach

/// Adds a second variable for the deg_x relaxation.
inline VarSet with_second_variable(const VarSet& v) {
  if (v.size() != 1) return v;
  for (const char* name : {"y", "x2", "z"}) {
    if (!v.index_of(name)) return v.concat(VarSet({name}));
  }
  throw DomainError("cannot name a second variable");
}

template <class R>
Json goldbach_result_json(const GoldbachResult<R>& g, const R& ring, const VarSet& vars) {
  auto mono = [&](const std::optional<Monomial>& m) {
    if (!m) return Json(nullptr);
    const auto s = monomial_to_string(*m, vars);
    return Json(s.empty() ? "1" : s);
  };
  auto elem = [&](const std::optional<typename R::Element>& e) {
    return e ? Json(ring.to_string(*e)) : Json(nullptr);
  };
  Json j;
  j["status"] = to_string(g.status);
  j["F"] = g.F ? Json(to_string(*g.F, vars)) : Json(nullptr);
  j["G"] = g.G ? Json(to_string(*g.G, vars)) : Json(nullptr);
  j["method"] = g.method;
  j["table_case"] = g.table_case.empty() ? Json(nullptr) : Json(g.table_case);
  j["Q_inf"] = mono(g.Q_inf);
  j["Q1"] = mono(g.Q1);
  j["lambda0"] = elem(g.lambda0);
  j["lambda1"] = elem(g.lambda1);
  j["tested"] = g.tested;
  j["relaxed_degx"] = g.relaxed;
  j["notes"] = Json(g.notes);
  return j;
}

template <class R>
std::vector<std::pair<std::string, bool>> goldbach_checks(const MultiPoly<R>& Q, const GoldbachResult<R>& g) {
  if (!g.F) return {{"none_only_after_exhaustive_scan", g.status != SearchStatus::ExhaustedNone || g.method == "exhaustive"}};
  const auto c = verify_goldbach(Q, *g.F, *g.G, g.relaxed);
  std::vector<std::pair<std::string, bool>> checks{{"identity", c.identity},
                                                   {"F_irreducible", c.F_irreducible},
                                                   {"G_irreducible", c.G_irreducible},
                                                   {"degree_clause", c.degree_clause}};
  if (g.method != "exhaustive") checks.emplace_back("F_binomial", c.binomial);
  return checks;
}

template <class R>
Outcome cmd_goldbach(const R& ring, const GoldbachArgs& a, const CommonOptions& common) {
  auto vars = all_vars<R>({a.Q});
  if (a.relaxed_degx) vars = with_second_variable(vars);
  const auto Q = parse_input("--Q", a.Q, ring, vars);
  GoldbachOptions opt;
  opt.relaxed_degx = a.relaxed_degx;
  opt.budget = common.budget;
  opt.coeff_bound = a.coeff_bound;
  opt.deg_u = a.deg_u;
  const auto g = goldbach_decompose(Q, opt);
  Json options = common_json(common);
  options["relaxed_degx"] = a.relaxed_degx;
  options["coeff_bound"] = a.coeff_bound;
  options["deg_u"] = a.deg_u;
  Json inputs{{"Q", to_string(Q, vars)}, {"vars", names_json(vars)}};
  Outcome o{make_envelope("goldbach", ring.name(), options, inputs, goldbach_result_json(g, ring, vars),
                          verification_block(goldbach_checks(Q, g))),
            exit_code(g.status), ""};
  o.summary = "goldbach: " + to_string(g.status);
  if (g.F) o.summary += ", " + to_string(Q, vars) + " = [" + to_string(*g.F, vars) + "] + [" + to_string(*g.G, vars) + "]";
  return o;
}

// ---------------------------------------------------------------------------
// spectrum

template <class F>
SpectrumSpec<F> spectrum_spec(const F& field, const SpectrumArgs& a, bool base_subfield) {
  const auto degrees = parse_degrees(a.deg);
  std::vector<std::string> texts{a.V};
  texts.insert(texts.end(), a.w.begin(), a.w.end());
  const auto inf = infer_vars<F>(texts);
  const auto vars = resolve_x_vars(inf.x.concat(inf.y), degrees.size());
  SpectrumSpec<F> spec{field, vars, {}, parse_element("--a0", a.a0, field),
                       parse_input("--V", a.V, field, vars), {}, degrees, base_subfield};
  for (const auto& s : split_list(a.S)) spec.S.push_back(parse_element("--S", s, field));
  for (const auto& w : a.w) spec.w.push_back(parse_input("--w", w, field, vars));
  return spec;
}

template <class F>
Json spectrum_inputs(const SpectrumSpec<F>& spec, const SpectrumArgs& a) {
  Json S = Json::array();
  for (const auto& s : spec.S) S.push_back(spec.field.to_string(s));
  Json j;
  j["field"] = a.field;
  j["a0_field"] = a.a0_field.empty() ? Json(nullptr) : Json(a.a0_field);
  j["S"] = std::move(S);
  j["a0"] = spec.field.to_string(spec.a0);
  j["V"] = to_string(spec.V, spec.vars);
  j["w"] = poly_list(spec.w, spec.vars);
  j["degrees"] = Json(spec.degrees);
  j["vars"] = names_json(spec.vars);
  return j;
}

inline std::vector<std::pair<std::string, bool>> spectrum_checks(const SpectrumCheck& c) {
  std::vector<std::pair<std::string, bool>> out;
  for (std::size_t i = 0; i < c.a.size(); ++i) out.emplace_back("a_" + std::to_string(i + 1), c.a[i]);
  out.emplace_back("b", c.b);
  out.emplace_back("c", c.c);
  out.emplace_back("U_minus_a0V_irreducible", c.h0_irreducible);
  for (std::size_t i = 0; i < c.reducible.size(); ++i) {
    if (c.reducible[i]) out.emplace_back("reducible_" + std::to_string(i + 1), *c.reducible[i]);
  }
  return out;
}

template <class F>
Outcome cmd_spectrum_in(const F& field, const SpectrumArgs& a, const CommonOptions& common, bool base_subfield) {
  const auto spec = spectrum_spec(field, a, base_subfield);
  SearchArgs sa;
  sa.strategy = a.strategy;
  sa.coeff_bound = a.coeff_bound;
  auto c = constraints_from(sa, common, spec.vars.size());
  const auto r = spectrum_construct(spec, c);
  const auto& vars = spec.vars;
  Json result;
  result["status"] = to_string(r.status);
  result["U0"] = to_string(r.U0, vars);
  result["p"] = poly_list(r.p, vars);
  result["B"] = poly_list(r.B, vars);
  result["bumps"] = r.bumps;
  result["M"] = r.M ? Json(to_string(*r.M, vars)) : Json(nullptr);
  result["U"] = r.U ? Json(to_string(*r.U, vars)) : Json(nullptr);
  result["H"] = poly_list(r.H, vars);
  result["tested"] = r.search.tested;
  result["rejected"] = histogram_json(r.search.rejected);
  result["warnings"] = Json(r.warnings);
  std::vector<std::pair<std::string, bool>> checks;
  if (r.U) checks = spectrum_checks(verify_spectrum(spec, *r.U));
  Json options = constraints_json(c);
  Outcome o{make_envelope("spectrum", field.name(), options, spectrum_inputs(spec, a), result,
                          verification_block(checks)),
            exit_code(r.status), ""};
  o.summary = "spectrum: " + to_string(r.status);
  if (r.U) o.summary += ", U = " + to_string(*r.U, vars);
  return o;
}

inline Outcome cmd_spectrum(const SpectrumArgs& a, const CommonOptions& common) {
  const auto k = RingSpec::parse(a.field);
  if (!a.a0_field.empty()) {
    const auto ext = RingSpec::parse(a.a0_field);
    if (k.kind != RingSpec::Kind::PrimeField || ext.kind != RingSpec::Kind::ExtensionField || ext.p != k.p) {
      throw DomainError("--a0-field must be GF(p^m) over --field GF(p)");
    }
    return cmd_spectrum_in(ExtensionField(ext.p, ext.k), a, common, true);
  }
  return visit_ring(k, [&](const auto& ring) -> Outcome {
    using R = std::decay_t<decltype(ring)>;
    if constexpr (R::is_field) {
      return cmd_spectrum_in(ring, a, common, false);
    } else {
      throw DomainError("spectrum needs a field, got " + ring.name());
    }
  });
}

}  // namespace schinzel::cli
