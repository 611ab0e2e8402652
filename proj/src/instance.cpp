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

#include "cellform/instance.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "cellform/error.hpp"

namespace cellform {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "io";
    case ErrorCode::kBadHeader: return "bad-header";
    case ErrorCode::kBadToken: return "bad-token";
    case ErrorCode::kShapeMismatch: return "shape-mismatch";
    case ErrorCode::kNoOnes: return "no-ones";
    case ErrorCode::kSizeGuard: return "size-guard";
    case ErrorCode::kContractViolation: return "contract-violation";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

Instance Instance::FromRows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorCode::kShapeMismatch, "matrix has no rows or columns");
  }
  const int raw_rows = static_cast<int>(rows.size());
  const int raw_cols = static_cast<int>(rows.front().size());
  for (int r = 0; r < raw_rows; ++r) {
    if (static_cast<int>(rows[r].size()) != raw_cols) {
      throw Error(ErrorCode::kShapeMismatch,
                  "row " + std::to_string(r + 1) + " has " +
                      std::to_string(rows[r].size()) + " entries, expected " +
                      std::to_string(raw_cols));
    }
    for (int v : rows[r]) {
      if (v != 0 && v != 1) {
        throw Error(ErrorCode::kBadToken,
                    "entry " + std::to_string(v) + " in row " +
                        std::to_string(r + 1) + " is not 0 or 1");
      }
    }
  }

  Instance inst;
  inst.transposed_ = raw_rows > raw_cols;
  inst.machines_ = inst.transposed_ ? raw_cols : raw_rows;
  inst.parts_ = inst.transposed_ ? raw_rows : raw_cols;
  inst.row_words_ = WordsFor(inst.parts_);
  inst.col_words_ = WordsFor(inst.machines_);
  inst.row_bits_.assign(static_cast<std::size_t>(inst.machines_) * inst.row_words_, 0);
  inst.col_bits_.assign(static_cast<std::size_t>(inst.parts_) * inst.col_words_, 0);
  inst.row_ones_.assign(inst.machines_, 0);
  inst.col_ones_.assign(inst.parts_, 0);

  for (int i = 0; i < inst.machines_; ++i) {
    for (int j = 0; j < inst.parts_; ++j) {
      const int v = inst.transposed_ ? rows[j][i] : rows[i][j];
      if (v == 0) continue;
      inst.row_bits_[static_cast<std::size_t>(i) * inst.row_words_ + j / kWordBits] |=
          Word{1} << (j % kWordBits);
      inst.col_bits_[static_cast<std::size_t>(j) * inst.col_words_ + i / kWordBits] |=
          Word{1} << (i % kWordBits);
      ++inst.row_ones_[i];
      ++inst.col_ones_[j];
      ++inst.ones_;
    }
  }
  if (inst.ones_ == 0) {
    throw Error(ErrorCode::kNoOnes, "matrix contains no ones");
  }
  return inst;
}

std::vector<std::vector<int>> Instance::ToRows() const {
  std::vector<std::vector<int>> rows(machines_, std::vector<int>(parts_, 0));
  for (int i = 0; i < machines_; ++i) {
    for (int j = 0; j < parts_; ++j) rows[i][j] = at(i, j) ? 1 : 0;
  }
  return rows;
}

namespace {

// Splits a line on spaces/tabs/CR.
std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() &&
           (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
      ++pos;
    }
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
           line[end] != '\r') {
      ++end;
    }
    if (end > pos) out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

bool ParsePositive(std::string_view token, int& value) {
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last && value > 0;
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  int line_no = 0;
  int rows_expected = -1;
  int cols_expected = -1;
  std::vector<std::vector<int>> rows;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    if (!line.empty() && line.front() == '#') continue;
    const auto tokens = Tokens(line);
    if (tokens.empty()) continue;

    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (rows_expected < 0) {
      if (tokens.size() != 2 || !ParsePositive(tokens[0], rows_expected) ||
          !ParsePositive(tokens[1], cols_expected)) {
        throw Error(ErrorCode::kBadHeader,
                    where + "expected header \"<machines> <parts>\"");
      }
      rows.reserve(rows_expected);
      continue;
    }
    if (static_cast<int>(rows.size()) == rows_expected) {
      throw Error(ErrorCode::kShapeMismatch,
                  where + "more than " + std::to_string(rows_expected) + " rows");
    }
    if (static_cast<int>(tokens.size()) != cols_expected) {
      throw Error(ErrorCode::kShapeMismatch,
                  where + "expected " + std::to_string(cols_expected) +
                      " entries, found " + std::to_string(tokens.size()));
    }
    std::vector<int> row;
    row.reserve(cols_expected);
    for (std::string_view t : tokens) {
      if (t == "0") {
        row.push_back(0);
      } else if (t == "1") {
        row.push_back(1);
      } else {
        throw Error(ErrorCode::kBadToken,
                    where + "token \"" + std::string(t) + "\" is not 0 or 1");
      }
    }
    rows.push_back(std::move(row));
  }

  if (rows_expected < 0) {
    throw Error(ErrorCode::kBadHeader, "missing header line");
  }
  if (static_cast<int>(rows.size()) != rows_expected) {
    throw Error(ErrorCode::kShapeMismatch,
                "expected " + std::to_string(rows_expected) + " rows, found " +
                    std::to_string(rows.size()));
  }
  return Instance::FromRows(rows);
}

Instance LoadInstance(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseInstance(buf.str());
}

Instance LoadInstanceFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
  return LoadInstance(in);
}

}  // namespace cellform
