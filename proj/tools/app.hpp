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

#ifndef CELLFORM_TOOLS_APP_HPP_
#define CELLFORM_TOOLS_APP_HPP_

// Command implementations behind the cellform executable. They talk to the
// solver only through the C API and write to caller-provided streams so
// tests can drive them in-process.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cellform/cellform.h"
#include "report.hpp"

namespace cellform::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDisagree = 2;

enum class OutputFormat { kText, kCsv, kJson };

struct Options {
  std::optional<double> time_limit_seconds;
  std::optional<std::int64_t> node_limit;
  OutputFormat output = OutputFormat::kText;
  // Decimal string such as "0.75"; parsed exactly.
  std::optional<std::string> seed_incumbent;
  int jobs = 1;
};

// What a solver run produced, detached from the C handles.
struct Outcome {
  bool has_solution = false;
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool proven_optimal = false;
  std::int64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
  std::vector<std::int32_t> row_cells;
  std::vector<std::int32_t> col_cells;
};

// Replaceable so the check command's disagreement path can be exercised.
using SolverFn = std::function<cf_status(const cf_instance*, const cf_solve_config&, Outcome&)>;

cf_status DefaultSolver(const cf_instance* instance, const cf_solve_config& config,
                        Outcome& outcome);

// Files a batch run picks up: regular files ending in .cfp, .txt or .dat,
// sorted by file name.
std::vector<std::filesystem::path> InstanceFiles(const std::filesystem::path& directory);

// Loads and solves one file. Never throws; failures come back as !ok.
Record SolveFile(const std::filesystem::path& path, const Options& options,
                 const SolverFn& solver = DefaultSolver);

int RunSingle(const std::filesystem::path& path, const Options& options, std::ostream& out,
              std::ostream& err);
int RunBatch(const std::filesystem::path& directory, const Options& options, std::ostream& out,
             std::ostream& err);
int RunCheck(const std::filesystem::path& path, const Options& options, std::ostream& out,
             std::ostream& err, const SolverFn& solver = DefaultSolver);

}  // namespace cellform::tools

#endif  // CELLFORM_TOOLS_APP_HPP_
