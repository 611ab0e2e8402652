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

#ifndef CELLFORM_INSTANCE_HPP_
#define CELLFORM_INSTANCE_HPP_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string_view>
#include <vector>

namespace cellform {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

inline int WordsFor(int bits) { return (bits + kWordBits - 1) / kWordBits; }

// Immutable machine x part incidence matrix.
//
// Instances are always stored with machines() <= parts(). A matrix with more
// rows than columns is transposed on construction and transposed() reports
// it, so callers can map solutions back to the original orientation.
//
// Rows and columns are both kept as packed bitsets: row i is a set of parts
// and column j is a set of machines. Unused high bits of the last word are
// always zero.
class Instance {
 public:
  // `rows` is a rectangular 0/1 matrix in the caller's orientation.
  // Throws Error{kShapeMismatch} for ragged or empty input, Error{kBadToken}
  // for entries outside {0,1} and Error{kNoOnes} for an all-zero matrix.
  static Instance FromRows(const std::vector<std::vector<int>>& rows);

  int machines() const { return machines_; }
  int parts() const { return parts_; }
  int ones() const { return ones_; }
  int zeros() const { return machines_ * parts_ - ones_; }
  int max_cells() const { return machines_; }
  bool transposed() const { return transposed_; }

  bool at(int machine, int part) const {
    return (RowBits(machine)[part / kWordBits] >> (part % kWordBits)) & 1U;
  }
  int row_ones(int machine) const { return row_ones_[machine]; }
  int col_ones(int part) const { return col_ones_[part]; }

  std::span<const Word> RowBits(int machine) const {
    return {row_bits_.data() + static_cast<std::size_t>(machine) * row_words_,
            static_cast<std::size_t>(row_words_)};
  }
  std::span<const Word> ColBits(int part) const {
    return {col_bits_.data() + static_cast<std::size_t>(part) * col_words_,
            static_cast<std::size_t>(col_words_)};
  }
  int row_words() const { return row_words_; }
  int col_words() const { return col_words_; }

  // The matrix in canonical (machines x parts) orientation.
  std::vector<std::vector<int>> ToRows() const;

 private:
  Instance() = default;

  int machines_ = 0;
  int parts_ = 0;
  int ones_ = 0;
  bool transposed_ = false;
  int row_words_ = 0;
  int col_words_ = 0;
  std::vector<Word> row_bits_;
  std::vector<Word> col_bits_;
  std::vector<int> row_ones_;
  std::vector<int> col_ones_;
};

// Text format: '#' lines are comments, blank lines are skipped, the first
// significant line is "m p", followed by m lines of p tokens from {0,1}.
Instance ParseInstance(std::string_view text);
Instance LoadInstance(std::istream& in);
Instance LoadInstanceFile(const std::filesystem::path& path);

}  // namespace cellform

#endif  // CELLFORM_INSTANCE_HPP_
