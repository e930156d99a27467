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

#include "permlo/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include <nlohmann/json.hpp>
#include "permlo/error.hpp"

namespace permlo {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ArgumentError(std::string("invalid JSON: ") + e.what());
  }
}

Rational rational_of(const json& x, const std::string& where) {
  if (x.is_string()) return parse_rational(x.get<std::string>());
  if (x.is_number_integer()) return parse_rational(x.dump());
  // Floating literals go through their shortest decimal text, so 0.1 is read as 1/10.
  if (x.is_number_float()) return parse_rational(x.dump());
  throw ArgumentError(where + ": expected a rational, got " + x.dump());
}

std::vector<Rational> rational_array(const json& x, const std::string& where) {
  if (!x.is_array()) throw ArgumentError(where + ": expected an array");
  std::vector<Rational> out;
  out.reserve(x.size());
  for (const auto& e : x) out.push_back(rational_of(e, where));
  return out;
}

long integer_of(const json& x, const std::string& where) {
  if (!x.is_number_integer()) throw ArgumentError(where + ": expected an integer, got " + x.dump());
  return x.get<long>();
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InstanceFile parse_instance(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) throw ArgumentError("instance: expected a JSON object");
  InstanceFile out;
  if (doc.contains("a")) {
    const json& a = doc["a"];
    if (!a.is_array()) throw ArgumentError("instance.a: expected an array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : a) rows.push_back(rational_array(row, "instance.a"));
    out.array = SquareArray(rows);
  } else if (doc.contains("w") && doc.contains("v")) {
    out.pair = make_pair(rational_array(doc["w"], "instance.w"), rational_array(doc["v"], "instance.v"));
    out.array = SquareArray::from_pair(*out.pair);
  } else {
    throw ArgumentError("instance: needs either \"a\" or both \"w\" and \"v\"");
  }
  if (doc.contains("n")) {
    const long n = integer_of(doc["n"], "instance.n");
    if (n != static_cast<long>(out.array.n()))
      throw ArgumentError("instance.n = " + std::to_string(n) + " but the data has size " +
                          std::to_string(out.array.n()));
  }
  return out;
}

InstanceFile load_instance(const std::string& path) { return parse_instance(read_text_file(path)); }

Gap parse_gap(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) throw ArgumentError("gap: expected a JSON object");
  const Rational g0 = doc.contains("g0") ? rational_of(doc["g0"], "gap.g0") : Rational(0);
  if (!doc.contains("generators") || !doc.contains("dims")) throw ArgumentError("gap: needs generators and dims");
  std::vector<Rational> gens = rational_array(doc["generators"], "gap.generators");
  const json& dims = doc["dims"];
  if (!dims.is_array()) throw ArgumentError("gap.dims: expected an array");
  std::vector<std::pair<long, long>> bounds;
  for (const auto& d : dims) {
    if (!d.is_array() || d.size() != 2) throw ArgumentError("gap.dims: each entry must be [lower, upper]");
    bounds.emplace_back(integer_of(d[0], "gap.dims"), integer_of(d[1], "gap.dims"));
  }
  return make_gap(g0, std::move(gens), std::move(bounds));
}

Gap load_gap(const std::string& path) { return parse_gap(read_text_file(path)); }

std::vector<Rational> parse_weights(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (doc.is_array()) return rational_array(doc, "weights");
  if (doc.is_object() && doc.contains("w")) return rational_array(doc["w"], "weights.w");
  throw ArgumentError("weights: expected an array or an object with \"w\"");
}

std::vector<Rational> load_weights(const std::string& path) { return parse_weights(read_text_file(path)); }

void write_file_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ArgumentError("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw ArgumentError("write failed for '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ArgumentError("cannot move output into place at '" + path + "'");
  }
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line += ',';
    line += csv_field(fields[i]);
  }
  return line + "\n";
}

}  // namespace

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()), header_(csv_line(header)) {}

void CsvWriter::add_comment(const std::string& line) { comments_ += "# " + line + "\n"; }

void CsvWriter::add_row(const std::vector<std::string>& fields) {
  if (fields.size() != width_)
    throw std::logic_error("CSV row has " + std::to_string(fields.size()) + " fields, header has " +
                           std::to_string(width_));
  body_ += csv_line(fields);
  ++rows_;
}

std::string CsvWriter::str() const { return comments_ + header_ + body_; }

}  // namespace permlo
