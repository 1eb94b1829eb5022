// Copyright 2026 The polycount Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLYCOUNT_CLI_HPP_
#define POLYCOUNT_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polycount/types.hpp"

namespace polycount {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2, kExitBudget = 3 };

struct RunConfig {
  std::string field = "2";
  std::string command;
  std::optional<int> m;
  std::optional<int> n;
  std::optional<int> d;
  std::optional<int> r0;
  std::optional<std::string> poly;
  std::optional<std::string> profile;
  std::optional<std::string> alpha;
  std::optional<double> c;
  std::optional<double> beta;
  std::string output = "csv";
  std::uint64_t seed = 1;
  std::uint64_t budget = Limits{}.budget;
  unsigned threads = 1;
};

const std::vector<std::string>& subcommands();

// Writes the document for `config` to `out`, diagnostics to `err`, and returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace polycount

#endif  // POLYCOUNT_CLI_HPP_
