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

// JSON envelope shared by every command, plus text/JSON conversions for
// polynomials, ring elements and search reports. Objects keep insertion
// order so that identical runs print identical bytes.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schinzel/errors.hpp"
#include "schinzel/io/parse.hpp"
#include "schinzel/multipoly.hpp"
#include "schinzel/search/engine.hpp"

namespace schinzel::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "schinzel";
inline constexpr const char* kToolVersion = "0.1.0";

/// A command's envelope, exit status and one-line human summary.
struct Outcome {
  Json envelope;
  int exit_code = 0;
  std::string summary;
};

inline Json make_envelope(const std::string& command, const std::string& ring, Json options, Json inputs,
                          Json result, Json verification) {
  Json env;
  env["tool"] = kToolName;
  env["version"] = kToolVersion;
  env["command"] = command;
  env["options"] = std::move(options);
  env["ring"] = ring;
  env["inputs"] = std::move(inputs);
  env["result"] = std::move(result);
  env["verification"] = std::move(verification);
  return env;
}

/// {"status": "pass"|"fail", "checks": {...}} from named boolean checks.
inline Json verification_block(const std::vector<std::pair<std::string, bool>>& checks) {
  Json v;
  bool ok = true;
  Json c = Json::object();
  for (const auto& [name, value] : checks) {
    c[name] = value;
    ok = ok && value;
  }
  v["status"] = ok ? "pass" : "fail";
  v["checks"] = std::move(c);
  return v;
}

inline bool verification_passed(const Json& env) {
  return env.contains("verification") && env["verification"].value("status", "") == "pass";
}

inline Json names_json(const VarSet& v) { return Json(v.names()); }

inline VarSet names_from_json(const Json& j) { return VarSet(j.get<std::vector<std::string>>()); }

template <class R>
Json poly_list(const std::vector<MultiPoly<R>>& fs, const VarSet& vars) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(to_string(f, vars));
  return out;
}

/// Parses `text` and tags errors with the option that supplied it.
template <class R>
MultiPoly<R> parse_input(const std::string& option, const std::string& text, const R& ring, const VarSet& vars) {
  try {
    return parse_poly(text, ring, vars);
  } catch (const ParseError& e) {
    throw ParseError(option + " \"" + text + "\": " + e.message(), e.position());
  }
}

/// A ring element written with constants and ring generators only.
template <class R>
typename R::Element parse_element(const std::string& option, const std::string& text, const R& ring) {
  return parse_input(option, text, ring, VarSet{}).constant_term();
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  for (auto& s : out) {
    const auto a = s.find_first_not_of(' ');
    const auto b = s.find_last_not_of(' ');
    s = a == std::string::npos ? "" : s.substr(a, b - a + 1);
  }
  return out;
}

inline std::vector<std::size_t> parse_degrees(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& s : split_list(text)) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("--deg expects comma-separated nonnegative integers, got \"" + text + "\"", 0);
    }
    out.push_back(std::stoul(s));
  }
  if (out.empty()) throw ParseError("--deg is empty", 0);
  return out;
}

/// x variables for a problem: inferred names when they fit, otherwise
/// x (n = 1) or x1..xn.
inline VarSet resolve_x_vars(const VarSet& inferred, std::size_t n) {
  if (inferred.size() == n && n > 0) return inferred;
  const auto numbered = n == 1 ? VarSet({"x"}) : VarSet::numbered("x", n);
  if (inferred.size() == 0) return numbered;
  const auto full = VarSet::numbered("x", n);
  for (const auto& name : inferred.names()) {
    if (!full.index_of(name)) {
      throw DomainError("polynomials use " + std::to_string(inferred.size()) + " x variables but " +
                        std::to_string(n) + " were declared");
    }
  }
  return full;
}

inline Json constraints_json(const SearchConstraints& c) {
  Json j;
  j["strategy"] = to_string(c.strategy);
  j["seed"] = c.seed;
  j["budget"] = c.budget;
  j["coeff_bound"] = c.coeff_bound;
  j["deg_u"] = c.deg_u;
  j["deg_u_target"] = c.deg_u_target ? Json(*c.deg_u_target) : Json(nullptr);
  j["exact_degree"] = std::any_of(c.exact_degree.begin(), c.exact_degree.end(), [](bool b) { return b; });
  j["paper_mode"] = c.paper_mode;
  j["max_witnesses"] = c.max_witnesses;
  return j;
}

inline SearchConstraints constraints_from_json(const Json& j, std::size_t n) {
  SearchConstraints c;
  c.strategy = j.at("strategy").get<std::string>() == "random" ? Strategy::Random : Strategy::Exhaustive;
  c.seed = j.at("seed").get<std::uint64_t>();
  c.budget = j.at("budget").get<std::uint64_t>();
  c.coeff_bound = j.at("coeff_bound").get<long>();
  c.deg_u = j.at("deg_u").get<unsigned>();
  if (!j.at("deg_u_target").is_null()) c.deg_u_target = j.at("deg_u_target").get<unsigned>();
  if (j.at("exact_degree").get<bool>()) c.exact_degree.assign(n, true);
  c.paper_mode = j.at("paper_mode").get<bool>();
  c.max_witnesses = j.at("max_witnesses").get<std::uint64_t>();
  return c;
}

inline Json histogram_json(const std::map<std::string, std::uint64_t>& h) {
  Json j = Json::object();
  for (const auto& [k, v] : h) j[k] = v;
  return j;
}

template <class R>
Json report_json(const SearchReport<R>& r, const VarSet& xvars) {
  Json j;
  j["status"] = to_string(r.status);
  j["complete"] = r.complete;
  j["tested"] = r.tested;
  j["hits"] = r.hits;
  j["budget"] = r.budget;
  j["seed"] = r.seed;
  j["strategy"] = to_string(r.strategy);
  j["box_size"] = r.box_size.get_str();
  j["rejected"] = histogram_json(r.rejected);
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json wj;
    wj["index"] = w.index;
    wj["M"] = poly_list(w.M, xvars);
    wj["images"] = poly_list(w.images, xvars);
    wj["verified"] = w.verified;
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  j["warnings"] = Json(r.warnings);
  return j;
}

}  // namespace schinzel::cli
