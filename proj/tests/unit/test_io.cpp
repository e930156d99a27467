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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <stdexcept>

#include "permlo/error.hpp"
#include "permlo/io.hpp"

namespace permlo {
namespace {

namespace fs = std::filesystem;

TEST(Instance, PairForm) {
  const InstanceFile f = parse_instance(R"({"n": 3, "w": ["1/2", -1, 0.25], "v": ["1", "2", "3"]})");
  ASSERT_TRUE(f.pair.has_value());
  EXPECT_EQ(f.pair->w, (std::vector<Rational>{Rational(1, 2), -1, Rational(1, 4)}));
  EXPECT_EQ(f.array.n(), 3u);
  EXPECT_EQ(f.array(0, 2), Rational(3, 2));
}

TEST(Instance, DecimalLiteralsAreReadExactly) {
  const InstanceFile f = parse_instance(R"({"w": [0.1, -0.1], "v": [1, 2]})");
  EXPECT_EQ(f.pair->w[0], Rational(1, 10));
}

TEST(Instance, ArrayForm) {
  const InstanceFile f = parse_instance(R"({"a": [["0", "1"], ["1", "0"]]})");
  EXPECT_FALSE(f.pair.has_value());
  EXPECT_EQ(f.array(0, 1), 1);
}

TEST(Instance, Errors) {
  EXPECT_THROW(parse_instance("{"), ArgumentError);
  EXPECT_THROW(parse_instance("[]"), ArgumentError);
  EXPECT_THROW(parse_instance(R"({"w": [1]})"), ArgumentError);
  EXPECT_THROW(parse_instance(R"({"n": 3, "w": [1, 2], "v": [1, 2]})"), ArgumentError);
  EXPECT_THROW(parse_instance(R"({"w": ["x"], "v": [1]})"), ArgumentError);
  EXPECT_THROW(parse_instance(R"({"a": [[1, 2], [3]]})"), ArgumentError);
  EXPECT_THROW(load_instance("/nonexistent/instance.json"), ArgumentError);
}

TEST(GapFile, ParsesWithOptionalOffset) {
  const Gap q = parse_gap(R"({"generators": ["2", 3], "dims": [[-1, 1], [-1, 1]]})");
  EXPECT_EQ(q.g0, 0);
  EXPECT_TRUE(q.symmetric());
  const Gap r = parse_gap(R"({"g0": "1/2", "generators": [1], "dims": [[0, 4]]})");
  EXPECT_EQ(r.g0, Rational(1, 2));
  EXPECT_THROW(parse_gap(R"({"generators": [1], "dims": [[0]]})"), ArgumentError);
  EXPECT_THROW(parse_gap(R"({"generators": [1], "dims": [[2, 0]]})"), ArgumentError);
}

TEST(WeightsFile, BothForms) {
  EXPECT_EQ(parse_weights(R"([1, "-1/3"])"), (std::vector<Rational>{1, Rational(-1, 3)}));
  EXPECT_EQ(parse_weights(R"({"w": [2]})"), (std::vector<Rational>{2}));
  EXPECT_THROW(parse_weights(R"({"x": [2]})"), ArgumentError);
}

TEST(AtomicWrite, ReplacesWholeFile) {
  const fs::path dir = fs::temp_directory_path() / "permlo_io_test";
  fs::create_directories(dir);
  const std::string path = (dir / "out.txt").string();
  write_file_atomic(path, "first version\n");
  write_file_atomic(path, "second\n");
  EXPECT_EQ(read_text_file(path), "second\n");
  EXPECT_FALSE(fs::exists(path + ".tmp"));
  EXPECT_THROW(write_file_atomic((dir / "missing" / "x.txt").string(), "x"), ArgumentError);
  fs::remove_all(dir);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(1e-20), "1e-20");
  EXPECT_EQ(format_double(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
  const double x = 0.1 + 0.2;
  EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST(Csv, CommentsHeaderAndQuoting) {
  CsvWriter w({"a", "b"});
  w.add_comment("made by test");
  w.add_row({"1", "x,y"});
  w.add_row({"say \"hi\"", ""});
  EXPECT_EQ(w.rows(), 2u);
  EXPECT_EQ(w.str(), "# made by test\na,b\n1,\"x,y\"\n\"say \"\"hi\"\"\",\n");
  EXPECT_THROW(w.add_row({"only one"}), std::logic_error);
}

}  // namespace
}  // namespace permlo
