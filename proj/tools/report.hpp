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

#ifndef CELLFORM_TOOLS_REPORT_HPP_
#define CELLFORM_TOOLS_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cellform::tools {

// One row of a results table.
struct Record {
  std::string name;
  bool ok = true;  // false: the instance could not be loaded or solved
  std::string error;
  int rows = 0;
  int cols = 0;
  std::optional<std::int64_t> efficacy_num;
  std::optional<std::int64_t> efficacy_den;
  bool proven_optimal = false;
  std::int64_t nodes_explored = 0;
  double time_s = 0.0;

  friend bool operator==(const Record&, const Record&) = default;
};

inline constexpr std::string_view kCsvHeader =
    "name,m,p,efficacy_num,efficacy_den,efficacy_decimal,proven_optimal,nodes_explored,time_s";

// num/den rounded to `places` decimals, ties to even.
std::string FormatDecimal(std::int64_t num, std::int64_t den, int places = 4);

// Parses a non-negative decimal such as "0.8235" into an exact fraction.
// Returns false on malformed input.
bool ParseDecimalFraction(std::string_view text, std::int64_t& num, std::int64_t& den);

// time_s is written in shortest round-trip form so ParseCsv(ToCsv(r)) == r.
// Error records leave m..efficacy_den empty and put "error" in
// efficacy_decimal.
std::string ToCsv(const std::vector<Record>& records);
std::vector<Record> ParseCsv(std::string_view text);

// Same as ToCsv without the time_s column.
std::string ToCsvWithoutTime(const std::vector<Record>& records);

std::string ToJson(const std::vector<Record>& records);
std::string ToText(const Record& record);

}  // namespace cellform::tools

#endif  // CELLFORM_TOOLS_REPORT_HPP_
