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

#include "report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cellform::tools {
namespace {

std::string ShortestDouble(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("cannot format double");
  return std::string(buf, end);
}

std::vector<std::string_view> SplitCommas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
}

template <typename T>
T ParseNumber(std::string_view field) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::runtime_error("bad numeric field \"" + std::string(field) + "\"");
  }
  return value;
}

std::string CsvRow(const Record& r, bool with_time) {
  std::ostringstream out;
  out << r.name << ',';
  if (r.ok) {
    out << r.rows << ',' << r.cols << ',';
    if (r.efficacy_num && r.efficacy_den) {
      out << *r.efficacy_num << ',' << *r.efficacy_den << ','
          << FormatDecimal(*r.efficacy_num, *r.efficacy_den);
    } else {
      out << ",,none";
    }
  } else {
    out << ",,,,error";
  }
  out << ',' << (r.proven_optimal ? "true" : "false") << ',' << r.nodes_explored;
  if (with_time) out << ',' << ShortestDouble(r.time_s);
  out << '\n';
  return out.str();
}

std::string Csv(const std::vector<Record>& records, bool with_time) {
  std::string out(kCsvHeader.substr(0, with_time ? kCsvHeader.size()
                                                 : kCsvHeader.rfind(',')));
  out += '\n';
  for (const Record& r : records) out += CsvRow(r, with_time);
  return out;
}

}  // namespace

std::string FormatDecimal(std::int64_t num, std::int64_t den, int places) {
  if (den <= 0 || num < 0 || places < 0) throw std::invalid_argument("FormatDecimal");
  __int128 scale = 1;
  for (int t = 0; t < places; ++t) scale *= 10;
  const __int128 scaled = static_cast<__int128>(num) * scale;
  __int128 q = scaled / den;
  const __int128 twice_rem = 2 * (scaled % den);
  if (twice_rem > den || (twice_rem == den && q % 2 == 1)) ++q;

  const auto whole = static_cast<std::int64_t>(q / scale);
  auto frac = static_cast<std::int64_t>(q % scale);
  std::string out = std::to_string(whole);
  if (places > 0) {
    std::string digits = std::to_string(frac);
    out += '.';
    out += std::string(places - digits.size(), '0') + digits;
  }
  return out;
}

bool ParseDecimalFraction(std::string_view text, std::int64_t& num, std::int64_t& den) {
  if (text.empty()) return false;
  const std::size_t dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) return false;
  if (frac.size() > 12) return false;
  std::int64_t n = 0;
  for (char ch : whole) {
    if (ch < '0' || ch > '9' || n > 1'000'000) return false;
    n = n * 10 + (ch - '0');
  }
  std::int64_t d = 1;
  for (char ch : frac) {
    if (ch < '0' || ch > '9') return false;
    n = n * 10 + (ch - '0');
    d *= 10;
  }
  num = n;
  den = d;
  return true;
}

std::string ToCsv(const std::vector<Record>& records) { return Csv(records, true); }

std::string ToCsvWithoutTime(const std::vector<Record>& records) {
  return Csv(records, false);
}

std::vector<Record> ParseCsv(std::string_view text) {
  std::vector<Record> records;
  bool header = true;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.empty()) continue;
    if (header) {
      if (line != kCsvHeader) throw std::runtime_error("unexpected CSV header");
      header = false;
      continue;
    }
    const auto f = SplitCommas(line);
    if (f.size() != 9) throw std::runtime_error("CSV row must have 9 fields");
    Record r;
    r.name = std::string(f[0]);
    r.ok = f[5] != "error";
    if (r.ok) {
      r.rows = ParseNumber<int>(f[1]);
      r.cols = ParseNumber<int>(f[2]);
      if (!f[3].empty()) {
        r.efficacy_num = ParseNumber<std::int64_t>(f[3]);
        r.efficacy_den = ParseNumber<std::int64_t>(f[4]);
      }
    }
    r.proven_optimal = f[6] == "true";
    r.nodes_explored = ParseNumber<std::int64_t>(f[7]);
    r.time_s = ParseNumber<double>(f[8]);
    records.push_back(std::move(r));
  }
  return records;
}

std::string ToJson(const std::vector<Record>& records) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const Record& r : records) {
    nlohmann::ordered_json row;
    row["name"] = r.name;
    if (r.ok) {
      row["m"] = r.rows;
      row["p"] = r.cols;
      if (r.efficacy_num && r.efficacy_den) {
        row["efficacy_num"] = *r.efficacy_num;
        row["efficacy_den"] = *r.efficacy_den;
        row["efficacy_decimal"] = FormatDecimal(*r.efficacy_num, *r.efficacy_den);
      } else {
        row["efficacy_num"] = nullptr;
        row["efficacy_den"] = nullptr;
        row["efficacy_decimal"] = nullptr;
      }
    } else {
      row["m"] = nullptr;
      row["p"] = nullptr;
      row["efficacy_num"] = nullptr;
      row["efficacy_den"] = nullptr;
      row["efficacy_decimal"] = "error";
      row["error"] = r.error;
    }
    row["proven_optimal"] = r.proven_optimal;
    row["nodes_explored"] = r.nodes_explored;
    row["time_s"] = r.time_s;
    out.push_back(std::move(row));
  }
  return out.dump(2) + "\n";
}

std::string ToText(const Record& r) {
  std::ostringstream out;
  out << "name: " << r.name << '\n';
  if (!r.ok) {
    out << "error: " << r.error << '\n';
    return out.str();
  }
  out << "size: " << r.rows << " × " << r.cols << '\n';
  if (r.efficacy_num && r.efficacy_den) {
    out << "efficacy: " << *r.efficacy_num << '/' << *r.efficacy_den << " ("
        << FormatDecimal(*r.efficacy_num, *r.efficacy_den) << ")\n";
  } else {
    out << "efficacy: none\n";
  }
  out << "proven_optimal: " << (r.proven_optimal ? "true" : "false") << '\n'
      << "nodes: " << r.nodes_explored << '\n';
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", r.time_s);
  out << "time_s: " << buf << '\n';
  return out.str();
}

}  // namespace cellform::tools
