// Copyright 2026 The bimatrix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include "bimatrix/io.hpp"
#include "bimatrix/rng.hpp"
#include "oracles.hpp"

using namespace bimatrix;
using testing::example_2x2;
using testing::example_3x3;

TEST_CASE("json round trip is exact") {
  const BimatrixGame g = example_3x3();
  const BimatrixGame back = parse_game_json(emit_game_json(g));
  CHECK(back.row_payoffs == g.row_payoffs);
  CHECK(back.col_payoffs == g.col_payoffs);

  // Awkward doubles survive too.
  const BimatrixGame r = random_game(4, 7, 2718);
  const BimatrixGame r_back = parse_game_json(emit_game_json(r));
  CHECK(r_back.row_payoffs == r.row_payoffs);
  CHECK(r_back.col_payoffs == r.col_payoffs);
}

TEST_CASE("json parse errors carry field context") {
  CHECK_THROWS_WITH_AS(
      parse_game_json(R"({"n":1,"m":1,"R":[[1]]})"),
      doctest::Contains("'C'"), ParseError);
  CHECK_THROWS_AS(parse_game_json("not json at all"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_game_json(R"({"n":2,"m":2,"R":[[1,2],[3]],"C":[[1,2],[3,4]]})"),
      doctest::Contains("'R'"), ParseError);
  CHECK_THROWS_AS(
      parse_game_json(R"({"n":2,"m":2,"R":[[1,2]],"C":[[1,2]]})"), ParseError);
  CHECK_THROWS_AS(parse_game_json(R"({"n":0,"m":1,"R":[],"C":[]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_game_json(R"({"n":1,"m":1,"R":[["x"]],"C":[[1]]})"), ParseError);
}

TEST_CASE("nfg reference file reproduces the 2x2 example") {
  const std::string path =
      std::string(BIMATRIX_TEST_DATA) + "/example_2x2.nfg";
  const BimatrixGame g = load_game(path);
  const BimatrixGame want = example_2x2();
  CHECK(g.row_payoffs == want.row_payoffs);
  CHECK(g.col_payoffs == want.col_payoffs);
}

TEST_CASE("nfg rejects malformed inputs") {
  CHECK_THROWS_AS(parse_nfg("NFG 2 R \"x\" { \"a\" \"b\" } { 2 2 } 1 2 3 4"),
                  ParseError);
  CHECK_THROWS_WITH_AS(
      parse_nfg("NFG 1 R \"x\" { \"a\" \"b\" \"c\" } { 2 2 2 } 1 2 3"),
      doctest::Contains("two players"), ParseError);
  CHECK_THROWS_AS(
      parse_nfg("NFG 1 R \"x\" { \"a\" \"b\" } { 2 2 } 5 3 3 2 3 2 4"),
      ParseError);  // truncated payoffs
  CHECK_THROWS_AS(parse_nfg(""), ParseError);
}

TEST_CASE("nfg emit/parse round trip") {
  const BimatrixGame g = random_game(3, 2, 11);
  const BimatrixGame back = parse_nfg(emit_nfg(g, "round trip"));
  CHECK(back.row_payoffs == g.row_payoffs);
  CHECK(back.col_payoffs == g.col_payoffs);
}

TEST_CASE("format_double round trips") {
  UnitUniformRng rng(33);
  for (int k = 0; k < 200; ++k) {
    const double v = (rng.next() - 0.5) * std::pow(10.0, k % 7);
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(3.0) == "3");
}

TEST_CASE("load and save by extension") {
  const std::string dir = "/tmp/bimatrix_io_test";
  std::remove((dir + "/g.json").c_str());
  const BimatrixGame g = example_2x2();
  save_game(g, "/tmp/bimatrix_io_g.json");
  save_game(g, "/tmp/bimatrix_io_g.nfg");
  const BimatrixGame a = load_game("/tmp/bimatrix_io_g.json");
  const BimatrixGame b = load_game("/tmp/bimatrix_io_g.nfg");
  CHECK(a.row_payoffs == g.row_payoffs);
  CHECK(b.col_payoffs == g.col_payoffs);
  CHECK_THROWS_AS(load_game("/tmp/definitely_missing_game.json"), IoError);
}
