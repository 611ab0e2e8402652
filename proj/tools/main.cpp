// Copyright 2026 The cellform Authors
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
#include <map>
#include <string>

#include "CLI11.hpp"
#include "app.hpp"

namespace {

using cellform::tools::OutputFormat;

void AddSolveFlags(CLI::App* cmd, cellform::tools::Options& options) {
  cmd->add_option("--time-limit", options.time_limit_seconds, "Time limit per instance, seconds")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--node-limit", options.node_limit, "Node limit per instance")
      ->check(CLI::PositiveNumber);
  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::kText}, {"csv", OutputFormat::kCsv}, {"json", OutputFormat::kJson}};
  cmd->add_option("--output", options.output, "Output format: text, csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("--seed-incumbent", options.seed_incumbent,
                  "Only report solutions with efficacy above this decimal value");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact branch and bound for cell formation with grouping efficacy"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cf_version()));

  cellform::tools::Options options;
  std::string path;
  bool check_mode = false;

  auto* solve = app.add_subcommand("solve", "Solve one instance file");
  solve->add_option("path", path, "Instance file")->required();
  solve->add_flag("--check", check_mode, "Also compare against the brute-force oracle");
  AddSolveFlags(solve, options);

  auto* batch = app.add_subcommand("batch", "Solve every instance file in a directory");
  batch->add_option("directory", path, "Directory of instance files")->required();
  batch->add_option("--jobs", options.jobs, "Instances solved in parallel")
      ->check(CLI::PositiveNumber);
  AddSolveFlags(batch, options);

  auto* check = app.add_subcommand("check", "Compare solver and brute-force oracle");
  check->add_option("path", path, "Instance file")->required();
  check->add_option("--time-limit", options.time_limit_seconds, "Solver time limit, seconds")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cellform::tools::kExitUsage;
  }

  if (*solve) {
    if (check_mode) return cellform::tools::RunCheck(path, options, std::cout, std::cerr);
    return cellform::tools::RunSingle(path, options, std::cout, std::cerr);
  }
  if (*batch) return cellform::tools::RunBatch(path, options, std::cout, std::cerr);
  return cellform::tools::RunCheck(path, options, std::cout, std::cerr);
}
