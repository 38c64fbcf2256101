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

// Out-of-line entry point so that the command layer is compiled once and
// shared by the executable and the test binaries.

#include <ostream>
#include <string>
#include <vector>

namespace schinzel::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schinzel::cli
