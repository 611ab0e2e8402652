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

#include "cellform/cellform.h"

#include <exception>
#include <new>
#include <string>
#include <string_view>

#include "cellform/error.hpp"
#include "cellform/instance.hpp"
#include "cellform/oracle.hpp"
#include "cellform/search.hpp"

struct cf_instance {
  cellform::Instance instance;
};

struct cf_result {
  cellform::SolveResult result;
  bool transposed = false;
};

namespace {

thread_local std::string g_last_error;

cf_status Fail(cf_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

cf_status FromCode(cellform::ErrorCode code) {
  using cellform::ErrorCode;
  switch (code) {
    case ErrorCode::kIo: return CF_ERR_IO;
    case ErrorCode::kBadHeader: return CF_ERR_PARSE_HEADER;
    case ErrorCode::kBadToken: return CF_ERR_PARSE_TOKEN;
    case ErrorCode::kShapeMismatch: return CF_ERR_PARSE_SHAPE;
    case ErrorCode::kNoOnes: return CF_ERR_NO_ONES;
    case ErrorCode::kSizeGuard: return CF_ERR_SIZE_GUARD;
    case ErrorCode::kContractViolation:
    case ErrorCode::kInvalidArgument: return CF_ERR_INVALID_ARGUMENT;
  }
  return CF_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
cf_status Guard(Body&& body) {
  try {
    body();
    return CF_OK;
  } catch (const cellform::Error& e) {
    return Fail(FromCode(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(CF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(CF_ERR_INTERNAL, e.what());
  }
}

const std::vector<int>& RowLabels(const cf_result& r) {
  return r.transposed ? r.result.best_assignment->part_cells
                      : r.result.best_assignment->machine_cells;
}

const std::vector<int>& ColLabels(const cf_result& r) {
  return r.transposed ? r.result.best_assignment->machine_cells
                      : r.result.best_assignment->part_cells;
}

cf_status CopyLabels(const cf_result* result, bool rows, int32_t* labels, size_t length) {
  if (result == nullptr || labels == nullptr) {
    return Fail(CF_ERR_INVALID_ARGUMENT, "null argument");
  }
  if (!result->result.best_assignment) {
    return Fail(CF_ERR_INVALID_ARGUMENT, "result has no solution");
  }
  const std::vector<int>& src = rows ? RowLabels(*result) : ColLabels(*result);
  if (length != src.size()) {
    return Fail(CF_ERR_INVALID_ARGUMENT, "label buffer has length " + std::to_string(length) +
                                             ", expected " + std::to_string(src.size()));
  }
  for (size_t t = 0; t < length; ++t) labels[t] = src[t];
  return CF_OK;
}

}  // namespace

extern "C" {

const char* cf_version(void) { return "1.0.0"; }

const char* cf_status_name(cf_status status) {
  switch (status) {
    case CF_OK: return "ok";
    case CF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CF_ERR_IO: return "i/o error";
    case CF_ERR_PARSE_HEADER: return "malformed header";
    case CF_ERR_PARSE_TOKEN: return "invalid matrix token";
    case CF_ERR_PARSE_SHAPE: return "row/column count mismatch";
    case CF_ERR_NO_ONES: return "matrix has no ones";
    case CF_ERR_SIZE_GUARD: return "instance too large for the oracle";
    case CF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cf_last_error(void) { return g_last_error.c_str(); }

cf_status cf_instance_load_file(const char* path, cf_instance** out) {
  if (path == nullptr || out == nullptr) return Fail(CF_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] { *out = new cf_instance{cellform::LoadInstanceFile(path)}; });
}

cf_status cf_instance_load_text(const char* text, size_t length, cf_instance** out) {
  if (text == nullptr || out == nullptr) return Fail(CF_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    *out = new cf_instance{cellform::ParseInstance(std::string_view(text, length))};
  });
}

void cf_instance_free(cf_instance* instance) { delete instance; }

int cf_instance_rows(const cf_instance* instance) {
  if (instance == nullptr) return 0;
  const auto& inst = instance->instance;
  return inst.transposed() ? inst.parts() : inst.machines();
}

int cf_instance_cols(const cf_instance* instance) {
  if (instance == nullptr) return 0;
  const auto& inst = instance->instance;
  return inst.transposed() ? inst.machines() : inst.parts();
}

int cf_instance_ones(const cf_instance* instance) {
  return instance == nullptr ? 0 : instance->instance.ones();
}

int cf_instance_transposed(const cf_instance* instance) {
  return instance != nullptr && instance->instance.transposed() ? 1 : 0;
}

int cf_instance_oracle_ok(const cf_instance* instance) {
  return instance != nullptr && cellform::OracleAccepts(instance->instance) ? 1 : 0;
}

void cf_solve_config_init(cf_solve_config* config) {
  if (config == nullptr) return;
  *config = cf_solve_config{};
  config->initial_incumbent_den = 1;
}

cf_status cf_solve(const cf_instance* instance, const cf_solve_config* config,
                   cf_result** out) {
  if (instance == nullptr || out == nullptr) {
    return Fail(CF_ERR_INVALID_ARGUMENT, "null argument");
  }
  return Guard([&] {
    cellform::SearchConfig cfg;
    if (config != nullptr) {
      if (config->time_limit_seconds > 0) cfg.time_limit_seconds = config->time_limit_seconds;
      if (config->node_limit > 0) cfg.node_limit = config->node_limit;
      if (config->has_initial_incumbent) {
        if (config->initial_incumbent_den <= 0 || config->initial_incumbent_num < 0) {
          throw cellform::Error(cellform::ErrorCode::kInvalidArgument,
                                "initial incumbent must be a non-negative fraction");
        }
        cfg.initial_incumbent =
            cellform::Rational(config->initial_incumbent_num, config->initial_incumbent_den);
      }
    }
    *out = new cf_result{cellform::Solve(instance->instance, cfg),
                         instance->instance.transposed()};
  });
}

cf_status cf_brute_force_solve(const cf_instance* instance, cf_result** out) {
  if (instance == nullptr || out == nullptr) {
    return Fail(CF_ERR_INVALID_ARGUMENT, "null argument");
  }
  return Guard([&] {
    *out = new cf_result{cellform::BruteForceSolve(instance->instance),
                         instance->instance.transposed()};
  });
}

void cf_result_free(cf_result* result) { delete result; }

int cf_result_has_solution(const cf_result* result) {
  return result != nullptr && result->result.best_assignment ? 1 : 0;
}

cf_status cf_result_efficacy(const cf_result* result, int64_t* num, int64_t* den) {
  if (result == nullptr || num == nullptr || den == nullptr) {
    return Fail(CF_ERR_INVALID_ARGUMENT, "null argument");
  }
  if (!result->result.best_efficacy) {
    return Fail(CF_ERR_INVALID_ARGUMENT, "result has no solution");
  }
  *num = result->result.best_efficacy->num();
  *den = result->result.best_efficacy->den();
  return CF_OK;
}

int cf_result_proven_optimal(const cf_result* result) {
  return result != nullptr && result->result.proven_optimal ? 1 : 0;
}

int64_t cf_result_nodes_explored(const cf_result* result) {
  return result == nullptr ? 0 : result->result.nodes_explored;
}

int64_t cf_result_nodes_pruned(const cf_result* result) {
  return result == nullptr ? 0 : result->result.nodes_pruned;
}

int cf_result_max_depth(const cf_result* result) {
  return result == nullptr ? 0 : result->result.max_depth;
}

double cf_result_elapsed_seconds(const cf_result* result) {
  return result == nullptr ? 0.0 : result->result.elapsed_seconds;
}

int cf_result_cells(const cf_result* result) {
  if (result == nullptr || !result->result.best_assignment) return 0;
  return result->result.best_assignment->CellCount();
}

cf_status cf_result_row_cells(const cf_result* result, int32_t* labels, size_t length) {
  return CopyLabels(result, true, labels, length);
}

cf_status cf_result_col_cells(const cf_result* result, int32_t* labels, size_t length) {
  return CopyLabels(result, false, labels, length);
}

}  // extern "C"
