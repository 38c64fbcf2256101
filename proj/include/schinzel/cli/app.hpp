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

// Command-line front end. JSON goes to stdout, or to --output with a
// one-line summary on stdout. Exit codes: 0 result, 1 usage or parse
// error, 2 exhaustively none, 3 budget exhausted, 4 verification failed.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schinzel/cli/commands.hpp"
#include "schinzel/cli/report.hpp"
#include "schinzel/cli/verify.hpp"

namespace schinzel::cli {

inline constexpr int kExitUsage = 1;
inline constexpr int kExitBudget = 3;

/// Runs one command line (without the program name).
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schinzel-hypothesis witnesses, Goldbach decompositions and spectra over polynomial rings",
               kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  CommonOptions common;
  if (const char* env = std::getenv("SCHINZEL_RING"); env && *env) common.ring = env;
  std::string output;
  bool timing = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--ring", common.ring, "Z, Q, GF(p), GF(p^k), GF(p)[u], GF(p^k)[u] or Q[u]")
        ->envname("SCHINZEL_RING");
    sub->add_option("--seed", common.seed, "random seed");
    sub->add_option("--budget", common.budget, "candidates to examine")->check(CLI::PositiveNumber);
    sub->add_option("--threads", common.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--output,-o", output, "write JSON here and print a summary");
    sub->add_flag("--timing", timing, "include wall-clock time in the JSON");
  };

  std::string ftext;
  bool oracle = false;
  auto* factor_cmd = app.add_subcommand("factor", "complete factorization");
  factor_cmd->add_option("--f,f", ftext, "polynomial")->required();
  add_common(factor_cmd);

  auto* irred_cmd = app.add_subcommand("irred", "irreducibility certificate");
  irred_cmd->add_option("--f,f", ftext, "polynomial")->required();
  irred_cmd->add_flag("--oracle", oracle, "cross-check by brute force (finite fields)");
  add_common(irred_cmd);

  SearchArgs sa;
  auto add_search = [&](CLI::App* sub, bool full) {
    sub->add_option("--P", sa.P, "polynomial in x and y (repeatable)")->required();
    if (!full) return;
    sub->add_option("--vars", sa.nvars, "number of x variables");
    sub->add_option("--deg", sa.deg, "degree box d1,...,dn")->required();
    sub->add_option("--coeff-bound", sa.coeff_bound, "integer coefficients in [-B, B]");
    sub->add_option("--deg-u", sa.deg_u, "u-degree bound of k[u] coefficients");
    sub->add_option("--deg-u-target", sa.deg_u_target, "require deg_u(M) = delta (p*delta in char p)");
    sub->add_flag("--exact-degree", sa.exact_degree, "require deg_{x_j}(M) = d_j");
  };
  auto* schinzel_cmd = app.add_subcommand("schinzel", "search witnesses M with every P_i(x, M) irreducible");
  add_search(schinzel_cmd, true);
  schinzel_cmd->add_option("--strategy", sa.strategy, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  schinzel_cmd->add_flag("--paper-mode", sa.paper_mode, "coprime top-degree coefficient pair");
  schinzel_cmd->add_option("--max-witnesses", sa.max_witnesses, "stop after this many (0: no limit)");
  schinzel_cmd->add_flag("--fixed-divisor", sa.fixed_divisor, "also report a fixed divisor if any");
  add_common(schinzel_cmd);

  auto* density_cmd = app.add_subcommand("density", "fraction of witnesses among random box samples");
  add_search(density_cmd, true);
  density_cmd->add_option("--samples", sa.samples, "sample count")->check(CLI::PositiveNumber);
  add_common(density_cmd);

  auto* swan_cmd = app.add_subcommand("swan-scan", "census of P(x, M) over every M of degree <= max-deg");
  add_search(swan_cmd, false);
  swan_cmd->add_option("--max-deg", sa.max_deg, "degree bound for M");
  swan_cmd->add_option("--show", sa.show, "irreducible examples to list");
  add_common(swan_cmd);

  GoldbachArgs ga;
  auto* goldbach_cmd = app.add_subcommand("goldbach", "Q = F + G with F, G irreducible");
  goldbach_cmd->add_option("--Q,Q", ga.Q, "polynomial")->required();
  goldbach_cmd->add_flag("--relaxed-degx", ga.relaxed_degx, "deg_x(F) <= deg_x(Q) over two variables");
  goldbach_cmd->add_option("--coeff-bound", ga.coeff_bound, "bound for the lambda parameters");
  goldbach_cmd->add_option("--deg-u", ga.deg_u, "u-degree bound for the lambda parameters");
  add_common(goldbach_cmd);

  SpectrumArgs pa;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "U with U - a V reducible for a in S");
  spectrum_cmd->add_option("--field", pa.field, "Q, GF(p) or GF(p^k)");
  spectrum_cmd->add_option("--S", pa.S, "a1,a2,...");
  spectrum_cmd->add_option("--a0", pa.a0, "element outside S")->required();
  spectrum_cmd->add_option("--a0-field", pa.a0_field, "GF(p^m) holding a0 when a0 is not in GF(p)");
  spectrum_cmd->add_option("--V", pa.V, "nonzero polynomial");
  spectrum_cmd->add_option("--w", pa.w, "w_i, one per element of S (repeatable)");
  spectrum_cmd->add_option("--deg", pa.deg, "partial degrees d1,...,dn of U")->required();
  spectrum_cmd->add_option("--strategy", pa.strategy, "random or exhaustive")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  spectrum_cmd->add_option("--coeff-bound", pa.coeff_bound, "integer coefficients of M in [-B, B]");
  add_common(spectrum_cmd);

  std::string input;
  auto* verify_cmd = app.add_subcommand("verify", "re-check an emitted JSON envelope");
  verify_cmd->add_option("--input,input", input, "envelope file, or - for stdin")->required();
  add_common(verify_cmd);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    if (*verify_cmd) {
      Json env;
      if (input == "-") {
        env = Json::parse(std::cin);
      } else {
        std::ifstream in(input);
        if (!in) throw ParseError("cannot open " + input, 0);
        env = Json::parse(in);
      }
      o = cmd_verify(env);
    } else if (*spectrum_cmd) {
      o = cmd_spectrum(pa, common);
    } else {
      const auto spec = RingSpec::parse(common.ring);
      o = visit_ring(spec, [&](const auto& ring) -> Outcome {
        if (*factor_cmd) return cmd_factor(ring, ftext, common);
        if (*irred_cmd) return cmd_irred(ring, ftext, oracle, common);
        if (*schinzel_cmd) return cmd_schinzel(ring, sa, common);
        if (*density_cmd) return cmd_density(ring, sa, common);
        if (*swan_cmd) return cmd_swan_scan(ring, sa, common);
        return cmd_goldbach(ring, ga, common);
      });
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed envelope: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (timing) {
    o.envelope["timing"] = {
        {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  }
  const auto text = o.envelope.dump(2) + "\n";
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output);
    if (!file) {
      err << "error: cannot write " << output << "\n";
      return kExitUsage;
    }
    file << text;
    out << o.summary << "\n";
  }
  return o.exit_code;
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace schinzel::cli
