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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "polycount/cli.hpp"

int main(int argc, char** argv) {
  polycount::RunConfig config;
  CLI::App app{"Exact divisor and factorization counts for polynomials over finite fields"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  app.add_option("--field", config.field, "GF(q) as p, p^e or p^e/modulus")->capture_default_str();
  app.add_option("--output", config.output, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--seed", config.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--budget", config.budget, "largest enumeration allowed")->capture_default_str();
  app.add_option("--threads", config.threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--m", config.m, "degree m");
  app.add_option("--n", config.n, "half-degree n");
  app.add_option("--d", config.d, "irreducible degree");
  app.add_option("--r0", config.r0, "slack exponent");
  app.add_option("--poly", config.poly, "coefficients, constant term first");
  app.add_option("--profile", config.profile, "multiplicity profile, e.g. \"y:2 1:2,1 3:1\"");
  app.add_option("--alpha", config.alpha, "rational alpha, e.g. 5/2");
  app.add_option("--c", config.c, "Chernoff constant c");
  app.add_option("--beta", config.beta, "tail exponent beta");

  for (const std::string& name : polycount::subcommands()) app.add_subcommand(name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : polycount::kExitUsage;
  }
  config.command = app.get_subcommands().front()->get_name();
  return polycount::run(config, std::cout, std::cerr);
}
