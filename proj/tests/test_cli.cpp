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

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli_entry.hpp"


namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = schinzel::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("schinzel_cli_test_" + name);
}

/// Runs `verify` on an envelope and returns its exit code.
int verify_envelope(const std::string& text, const std::string& tag) {
  const auto path = temp_file(tag + ".json");
  std::ofstream(path) << text;
  const auto r = run({"verify", path.string()});
  fs::remove(path);
  return r.code;
}

}  // namespace

TEST(Cli, FactorEnvelope) {
  const auto r = run({"factor", "--ring", "Z", "x^2 - 1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["tool"], "schinzel");
  EXPECT_EQ(j["command"], "factor");
  EXPECT_EQ(j["ring"], "Z");
  EXPECT_EQ(j["result"]["factors"].size(), 2u);
  EXPECT_EQ(j["verification"]["status"], "pass");
  EXPECT_FALSE(j.contains("timing"));
  EXPECT_FALSE(j["options"].contains("threads"));
  EXPECT_EQ(verify_envelope(r.out, "factor"), 0);
}

TEST(Cli, ExitCodeContract) {
  EXPECT_EQ(run({"schinzel", "--ring", "Z", "--P", "y", "--P", "y+2", "--deg", "2", "--coeff-bound", "5"}).code, 0);
  EXPECT_EQ(run({"goldbach", "--ring", "GF(2)", "--Q", "x^2+x"}).code, 2);
  EXPECT_EQ(run({"schinzel", "--ring", "GF(2)", "--P", "y^8+x^3", "--deg", "8", "--budget", "5"}).code, 3);
  EXPECT_EQ(run({"factor", "--ring", "Z", "x^^2"}).code, 1);
  EXPECT_EQ(run({"factor", "--ring", "GF(6)", "x"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"swan-scan", "--ring", "GF(2)", "--P", "y^8+x^3", "--max-deg", "8"}).code, 0);
}

TEST(Cli, ParseErrorsNameTheOption) {
  const auto r = run({"goldbach", "--ring", "Z", "--Q", "x + * 1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--Q"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("position 4"), std::string::npos) << r.err;
}

TEST(Cli, RingFromEnvironment) {
  ::setenv("SCHINZEL_RING", "GF(3)", 1);
  const auto r = run({"factor", "x^3 - x"});
  ::unsetenv("SCHINZEL_RING");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["ring"], "GF(3)");
  EXPECT_EQ(Json::parse(r.out)["result"]["factors"].size(), 3u);
}

TEST(Cli, OutputFileAndSummary) {
  const auto path = temp_file("out.json");
  const auto r = run({"irred", "--ring", "GF(2)", "x^2+x+1", "-o", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find('{'), std::string::npos);  // summary, not JSON
  std::ifstream in(path);
  const auto j = Json::parse(in);
  EXPECT_EQ(j["result"]["irreducible"], true);
  EXPECT_EQ(run({"verify", path.string()}).code, 0);
  fs::remove(path);
}

TEST(Cli, TimingIsOptIn) {
  const auto r = run({"factor", "--ring", "Z", "x", "--timing"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(Json::parse(r.out).contains("timing"));
}

TEST(Cli, VerifyRejectsTamperedEnvelopes) {
  auto j = Json::parse(run({"goldbach", "--ring", "Z", "--Q", "3*x+5"}).out);
  EXPECT_EQ(verify_envelope(j.dump(), "gb_ok"), 0);
  j["result"]["G"] = "2*x + 2";
  EXPECT_EQ(verify_envelope(j.dump(), "gb_bad"), 4);
  auto s = Json::parse(run({"schinzel", "--ring", "Z", "--P", "y", "--P", "y+2", "--deg", "2", "--coeff-bound", "5"}).out);
  s["result"]["witnesses"][0]["M"][0] = "x^2 - 1";
  EXPECT_EQ(verify_envelope(s.dump(), "sz_bad"), 4);
}

TEST(Cli, ThreadsDoNotChangeOutput) {
  const std::vector<std::string> base{"schinzel", "--ring", "GF(2)", "--P", "x1 + x2*y", "--P", "y", "--deg", "2,2"};
  auto with = [&](const char* t) {
    auto a = base;
    a.insert(a.end(), {"--threads", t});
    return run(a).out;
  };
  EXPECT_EQ(with("1"), with("4"));
}

TEST(Cli, GoldenCorpus) {
  const char* dir = std::getenv("SCHINZEL_GOLDEN_DIR");
  ASSERT_NE(dir, nullptr) << "SCHINZEL_GOLDEN_DIR is not set";
  const bool update = std::getenv("SCHINZEL_UPDATE_GOLDEN") != nullptr;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  ASSERT_FALSE(files.empty());
  for (const auto& path : files) {
    SCOPED_TRACE(path.filename().string());
    Json golden;
    {
      std::ifstream in(path);
      golden = Json::parse(in);
    }
    const auto args = golden["args"].get<std::vector<std::string>>();
    const auto r = run(args);
    if (update) {
      golden["exit"] = r.code;
      golden["envelope"] = Json::parse(r.out);
      std::ofstream(path) << golden.dump(2) << "\n";
      continue;
    }
    EXPECT_EQ(r.code, golden["exit"].get<int>()) << r.err;
    EXPECT_EQ(Json::parse(r.out), golden["envelope"]);
    EXPECT_EQ(verify_envelope(r.out, path.stem().string()), 0);
  }
}
