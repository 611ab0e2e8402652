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

#include "app.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <thread>

namespace cellform::tools {
namespace {

namespace fs = std::filesystem;

struct InstanceDeleter {
  void operator()(cf_instance* p) const { cf_instance_free(p); }
};
struct ResultDeleter {
  void operator()(cf_result* p) const { cf_result_free(p); }
};
using InstancePtr = std::unique_ptr<cf_instance, InstanceDeleter>;
using ResultPtr = std::unique_ptr<cf_result, ResultDeleter>;

std::string StatusMessage(cf_status status) {
  std::string msg = cf_status_name(status);
  const std::string detail = cf_last_error();
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

cf_status ReadOutcome(const cf_instance* instance, const cf_result* result, Outcome& outcome) {
  outcome = Outcome{};
  outcome.has_solution = cf_result_has_solution(result) != 0;
  outcome.proven_optimal = cf_result_proven_optimal(result) != 0;
  outcome.nodes_explored = cf_result_nodes_explored(result);
  outcome.elapsed_seconds = cf_result_elapsed_seconds(result);
  if (!outcome.has_solution) return CF_OK;
  cf_status st = cf_result_efficacy(result, &outcome.num, &outcome.den);
  if (st != CF_OK) return st;
  outcome.row_cells.resize(cf_instance_rows(instance));
  outcome.col_cells.resize(cf_instance_cols(instance));
  st = cf_result_row_cells(result, outcome.row_cells.data(), outcome.row_cells.size());
  if (st != CF_OK) return st;
  return cf_result_col_cells(result, outcome.col_cells.data(), outcome.col_cells.size());
}

cf_status BruteForce(const cf_instance* instance, Outcome& outcome) {
  cf_result* raw = nullptr;
  const cf_status st = cf_brute_force_solve(instance, &raw);
  if (st != CF_OK) return st;
  ResultPtr result(raw);
  return ReadOutcome(instance, result.get(), outcome);
}

// Fills cf_solve_config from options. Returns an error message or "".
std::string MakeConfig(const Options& options, cf_solve_config& config) {
  cf_solve_config_init(&config);
  if (options.time_limit_seconds) config.time_limit_seconds = *options.time_limit_seconds;
  if (options.node_limit) config.node_limit = *options.node_limit;
  if (options.seed_incumbent) {
    std::int64_t num = 0;
    std::int64_t den = 1;
    if (!ParseDecimalFraction(*options.seed_incumbent, num, den)) {
      return "invalid --seed-incumbent value \"" + *options.seed_incumbent + "\"";
    }
    config.has_initial_incumbent = 1;
    config.initial_incumbent_num = num;
    config.initial_incumbent_den = den;
  }
  return {};
}

struct Solved {
  Record record;
  Outcome outcome;
};

Solved SolveOne(const fs::path& path, const Options& options, const SolverFn& solver) {
  Solved s;
  s.record.name = path.stem().string();
  cf_solve_config config;
  if (std::string msg = MakeConfig(options, config); !msg.empty()) {
    s.record.ok = false;
    s.record.error = msg;
    return s;
  }
  cf_instance* raw = nullptr;
  const std::string path_str = path.string();
  cf_status st = cf_instance_load_file(path_str.c_str(), &raw);
  if (st != CF_OK) {
    s.record.ok = false;
    s.record.error = StatusMessage(st);
    return s;
  }
  InstancePtr instance(raw);
  s.record.rows = cf_instance_rows(instance.get());
  s.record.cols = cf_instance_cols(instance.get());
  st = solver(instance.get(), config, s.outcome);
  if (st != CF_OK) {
    s.record.ok = false;
    s.record.error = StatusMessage(st);
    return s;
  }
  if (s.outcome.has_solution) {
    s.record.efficacy_num = s.outcome.num;
    s.record.efficacy_den = s.outcome.den;
  }
  s.record.proven_optimal = s.outcome.proven_optimal;
  s.record.nodes_explored = s.outcome.nodes_explored;
  s.record.time_s = s.outcome.elapsed_seconds;
  return s;
}

void WriteLabels(std::ostream& out, const char* title, const std::vector<std::int32_t>& cells) {
  out << title << ':';
  for (std::int32_t c : cells) out << ' ' << c;
  out << '\n';
}

void WriteRecords(const std::vector<Record>& records, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::kCsv:
      out << ToCsv(records);
      break;
    case OutputFormat::kJson:
      out << ToJson(records);
      break;
    case OutputFormat::kText:
      for (std::size_t t = 0; t < records.size(); ++t) {
        if (t > 0) out << '\n';
        out << ToText(records[t]);
      }
      break;
  }
}

}  // namespace

cf_status DefaultSolver(const cf_instance* instance, const cf_solve_config& config,
                        Outcome& outcome) {
  cf_result* raw = nullptr;
  const cf_status st = cf_solve(instance, &config, &raw);
  if (st != CF_OK) return st;
  ResultPtr result(raw);
  return ReadOutcome(instance, result.get(), outcome);
}

std::vector<fs::path> InstanceFiles(const fs::path& directory) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (!entry.is_regular_file()) continue;
    const std::string ext = entry.path().extension().string();
    if (ext == ".cfp" || ext == ".txt" || ext == ".dat") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  return files;
}

Record SolveFile(const fs::path& path, const Options& options, const SolverFn& solver) {
  return SolveOne(path, options, solver).record;
}

int RunSingle(const fs::path& path, const Options& options, std::ostream& out,
              std::ostream& err) {
  const Solved s = SolveOne(path, options, DefaultSolver);
  if (!s.record.ok) {
    err << "cellform: " << path.string() << ": " << s.record.error << '\n';
    return kExitUsage;
  }
  WriteRecords({s.record}, options.output, out);
  if (options.output == OutputFormat::kText && s.outcome.has_solution) {
    WriteLabels(out, "row_cells", s.outcome.row_cells);
    WriteLabels(out, "col_cells", s.outcome.col_cells);
  }
  if (!s.record.proven_optimal) {
    err << "cellform: " << s.record.name << ": search stopped before proving optimality\n";
  }
  return kExitOk;
}

int RunBatch(const fs::path& directory, const Options& options, std::ostream& out,
             std::ostream& err) {
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    err << "cellform: " << directory.string() << " is not a directory\n";
    return kExitUsage;
  }
  const std::vector<fs::path> files = InstanceFiles(directory);
  if (files.empty()) {
    err << "cellform: no instance files (*.cfp, *.txt, *.dat) in " << directory.string()
        << '\n';
    return kExitUsage;
  }

  std::vector<Record> records(files.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t t = next++; t < files.size(); t = next++) {
      records[t] = SolveFile(files[t], options);
    }
  };
  const int jobs = std::clamp(options.jobs, 1, static_cast<int>(files.size()));
  std::vector<std::thread> threads;
  for (int w = 1; w < jobs; ++w) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  WriteRecords(records, options.output, out);
  bool failed = false;
  for (const Record& r : records) {
    if (!r.ok) {
      err << "cellform: " << r.name << ": " << r.error << '\n';
      failed = true;
    }
  }
  return failed ? kExitUsage : kExitOk;
}

int RunCheck(const fs::path& path, const Options& options, std::ostream& out,
             std::ostream& err, const SolverFn& solver) {
  const Solved s = SolveOne(path, options, solver);
  if (!s.record.ok) {
    err << "cellform: " << path.string() << ": " << s.record.error << '\n';
    return kExitUsage;
  }
  const auto solver_value = [&] {
    return s.outcome.has_solution
               ? std::to_string(s.outcome.num) + "/" + std::to_string(s.outcome.den)
               : std::string("none");
  };

  cf_instance* raw = nullptr;
  const std::string path_str = path.string();
  if (cf_instance_load_file(path_str.c_str(), &raw) != CF_OK) {
    err << "cellform: " << path_str << ": " << cf_last_error() << '\n';
    return kExitUsage;
  }
  InstancePtr instance(raw);
  if (!cf_instance_oracle_ok(instance.get())) {
    out << s.record.name << ": solver " << solver_value()
        << ", oracle unavailable (size guard)\n";
    return kExitOk;
  }
  if (!s.record.proven_optimal) {
    out << s.record.name << ": solver " << solver_value()
        << " not proven optimal, nothing to compare\n";
    return kExitOk;
  }

  Outcome oracle;
  if (const cf_status st = BruteForce(instance.get(), oracle); st != CF_OK) {
    err << "cellform: oracle failed: " << StatusMessage(st) << '\n';
    return kExitUsage;
  }
  const std::string oracle_value =
      std::to_string(oracle.num) + "/" + std::to_string(oracle.den);
  // Both fractions are in lowest terms.
  const bool agree = s.outcome.has_solution && oracle.has_solution &&
                     s.outcome.num == oracle.num && s.outcome.den == oracle.den;
  if (agree) {
    out << s.record.name << ": agree (" << oracle_value << " = "
        << FormatDecimal(oracle.num, oracle.den) << ")\n";
    return kExitOk;
  }
  out << s.record.name << ": disagree (solver " << solver_value() << ", oracle "
      << oracle_value << ")\n";
  return kExitDisagree;
}

}  // namespace cellform::tools
