// Copyright 2026 The permlo Authors
//
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

#ifndef PERMLO_IO_HPP
#define PERMLO_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permlo/core/instance.hpp"
#include "permlo/gap.hpp"
#include "permlo/rational.hpp"

namespace permlo {

/// An instance file: {"n": k, "w": [...], "v": [...]} or {"a": [[...], ...]}. Entries are
/// "p/q" strings, integers, or decimal literals (read exactly from their text). "n" is optional
/// and checked when present.
struct InstanceFile {
  std::optional<WeightValuePair> pair;  // present for the w/v form
  SquareArray array;                    // always filled
};

InstanceFile parse_instance(std::string_view json_text);
InstanceFile load_instance(const std::string& path);

/// {"g0": "p/q", "generators": [...], "dims": [[lower, upper], ...]}.
Gap parse_gap(std::string_view json_text);
Gap load_gap(const std::string& path);

/// A weight file: a JSON array of rationals or an object with a "w" array.
std::vector<Rational> parse_weights(std::string_view json_text);
std::vector<Rational> load_weights(const std::string& path);

std::string read_text_file(const std::string& path);

/// Writes to a sibling temporary and renames it over path, so readers never see a partial file.
void write_file_atomic(const std::string& path, std::string_view content);

/// Shortest round-trip decimal text for a double; "nan", "inf", "-inf" for non-finite values.
std::string format_double(double x);

/// Comma-separated rows; fields containing a comma, quote or newline are quoted.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void add_comment(const std::string& line);  // "# " prefix, emitted before the header
  void add_row(const std::vector<std::string>& fields);
  std::size_t rows() const { return rows_; }
  std::string str() const;

 private:
  std::size_t width_;
  std::string comments_, header_, body_;
  std::size_t rows_ = 0;
};

}  // namespace permlo

#endif  // PERMLO_IO_HPP
