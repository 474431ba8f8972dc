// Copyright 2026 The nasheq Authors
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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "doctest.h"
#include "nasheq/equilibrium_solvers.hpp"
#include "nasheq/errors.hpp"
#include "nasheq/exact_oracle.hpp"
#include "nasheq/game_io.hpp"
#include "nasheq/game_model.hpp"

using nasheq::BimatrixGame;
using nasheq::Certificate;
using nasheq::CertificateKind;
using nasheq::EquilibriumEntry;
using nasheq::EquilibriumList;
using nasheq::Error;
using nasheq::JointStrategy;
using nasheq::Matrix;
using nasheq::ParsedGame;
using nasheq::ParseError;
using nasheq::SolutionMethod;
using nasheq::SolveResult;
using nasheq::SupportPair;
using nasheq::Vec;
using nasheq::ZeroSumGame;

namespace {

void expect_parse_error(const std::string& text, int line, const std::string& reason) {
  try {
    nasheq::parse_game(text);
    FAIL_CHECK("expected ParseError '" << reason << "', but parse succeeded");
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.reason() == reason);
  }
}

// Wraps a single payoff token in a minimal 1x1 game.
std::string one_entry_game(const std::string& token) {
  return "zerosum 1 1\nA\n" + token + "\n";
}

double parse_one_entry(const std::string& token) {
  const ParsedGame parsed = nasheq::parse_game(one_entry_game(token));
  return std::get<ZeroSumGame>(parsed).a()(0, 0);
}

double random_entry(std::mt19937_64& rng) {
  if (rng() % 10 == 0) {
    static const double specials[] = {0.0, -0.0, 1.0, -1.0, 0.1, 1e308, 5e-324, -2.5e-7};
    return specials[rng() % (sizeof specials / sizeof specials[0])];
  }
  std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
  std::uniform_int_distribution<int> exponent(-40, 40);
  return std::ldexp(mantissa(rng), exponent(rng));
}

Matrix random_game_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  for (int k = 0; k < rows * cols; ++k) data.push_back(random_entry(rng));
  return Matrix(rows, cols, std::move(data));
}

double reparse(const std::string& text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  REQUIRE(ec == std::errc());
  REQUIRE(ptr == text.data() + text.size());
  return value;
}

}  // namespace

TEST_CASE("parsing skips comments and blank lines and accepts CRLF endings") {
  const std::string text =
      "# matching pennies\r\n"
      "\r\n"
      "zerosum 2 2\r\n"
      "A\r\n"
      "  1\t-1  \r\n"
      "\r\n"
      "-1 1\r\n"
      "# end\r\n";
  const ParsedGame parsed = nasheq::parse_game(text);
  REQUIRE(std::holds_alternative<ZeroSumGame>(parsed));
  const ZeroSumGame& game = std::get<ZeroSumGame>(parsed);
  CHECK(game.rows() == 2);
  CHECK(game.cols() == 2);
  CHECK(game.a()(0, 0) == 1.0);
  CHECK(game.a()(0, 1) == -1.0);
  CHECK(game.a()(1, 0) == -1.0);
  CHECK(game.a()(1, 1) == 1.0);
}

TEST_CASE("parsing a bimatrix game reads both payoff blocks") {
  const std::string text =
      "bimatrix 2 3\n"
      "A\n"
      "1 2 3\n"
      "4 5 6\n"
      "B\n"
      "7 8\n"
      "9 10\n"
      "11 12\n";
  const ParsedGame parsed = nasheq::parse_game(text);
  REQUIRE(std::holds_alternative<BimatrixGame>(parsed));
  const BimatrixGame& game = std::get<BimatrixGame>(parsed);
  CHECK(game.rows() == 2);
  CHECK(game.cols() == 3);
  CHECK(game.a()(0, 0) == 1.0);
  CHECK(game.a()(1, 2) == 6.0);
  // B is stored column-player first: cols x rows.
  CHECK(game.b().rows() == 3);
  CHECK(game.b().cols() == 2);
  CHECK(game.b()(0, 0) == 7.0);
  CHECK(game.b()(2, 1) == 12.0);
}

TEST_CASE("malformed headers are rejected on line one") {
  const std::string bad_header = "header must be 'bimatrix <m> <n>' or 'zerosum <m> <n>'";
  expect_parse_error("zerosum  2 2\nA\n1 1\n1 1\n", 1, bad_header);
  expect_parse_error(" zerosum 2 2\nA\n1 1\n1 1\n", 1, bad_header);
  expect_parse_error("zerosum\t2\t2\nA\n1 1\n1 1\n", 1, bad_header);
  expect_parse_error("matrixgame 2 2\n", 1, bad_header);
  expect_parse_error("zerosum 2\n", 1, bad_header);
  expect_parse_error("zerosum 2 2 junk\n", 1, bad_header);

  const std::string bad_dims = "dimensions must be positive integers";
  expect_parse_error("zerosum 0 2\n", 1, bad_dims);
  expect_parse_error("zerosum 2 -3\n", 1, bad_dims);
  expect_parse_error("zerosum 2.5 2\n", 1, bad_dims);
  expect_parse_error("zerosum two 2\n", 1, bad_dims);

  expect_parse_error("zerosum 2049 1\n", 1, "dimension exceeds limit 2048");
  expect_parse_error("bimatrix 1 2049\n", 1, "dimension exceeds limit 2048");

  // The limit itself is accepted.
  std::string wide = "zerosum 1 2048\nA\n";
  for (int j = 0; j < 2048; ++j) wide += (j == 0) ? "0" : " 0";
  wide += "\n";
  CHECK(std::get<ZeroSumGame>(nasheq::parse_game(wide)).cols() == 2048);
}

TEST_CASE("parse errors report raw line numbers") {
  expect_parse_error("", 1, "missing header");
  expect_parse_error("\n# only a comment\n\n", 4, "missing header");
  expect_parse_error("zerosum 2 2\n", 2, "missing section 'A'");
  expect_parse_error("# game\nzerosum 2 2\nrows\n", 3, "expected section 'A', got 'rows'");
  expect_parse_error("zerosum 2 2\nA \n1 -1\n-1 1\n", 2, "expected section 'A', got 'A '");
  expect_parse_error("zerosum 2 2\nA\n# first row\n1 -1\n-1\n", 5, "expected 2 values, found 1");
  expect_parse_error("zerosum 2 2\nA\n1 -1 3\n-1 1\n", 3, "expected 2 values, found 3");
  expect_parse_error("zerosum 2 2\nA\n1 foo\n-1 1\n", 3, "bad number 'foo'");
  expect_parse_error("zerosum 2 2\nA\n1 -1\n", 4, "missing row 2 of section 'A'");
  expect_parse_error("zerosum 1 1\nA\n4\n7\n", 4, "trailing content '7'");
  expect_parse_error("bimatrix 1 1\nA\n2\n", 4, "missing section 'B'");

  try {
    nasheq::parse_game("zerosum 2 2\nA\n# first row\n1 -1\n-1\n");
    FAIL_CHECK("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) == "parse error at line 5: expected 2 values, found 1");
  }
}

TEST_CASE("numeric tokens accept signs, exponents, and bare dots only") {
  CHECK(parse_one_entry("+1.5") == 1.5);
  CHECK(parse_one_entry("1e2") == 100.0);
  CHECK(parse_one_entry("-3.25E-1") == -0.325);
  CHECK(parse_one_entry(".5") == 0.5);
  CHECK(parse_one_entry("5.") == 5.0);
  CHECK(parse_one_entry("+.25") == 0.25);

  for (const std::string token :
       {"1e", "inf", "nan", "-inf", "NaN", "0x10", "1.5x", "1,5", "++1", "1.5e+"}) {
    expect_parse_error(one_entry_game(token), 3, "bad number '" + token + "'");
  }
}

TEST_CASE("serialize_game writes canonical block text") {
  const ZeroSumGame pennies(Matrix::from_rows({{1.0, -1.0}, {-1.0, 1.0}}));
  CHECK(nasheq::serialize_game(pennies) ==
        "zerosum 2 2\n"
        "A\n"
        "1 -1\n"
        "-1 1\n");

  const ZeroSumGame awkward(Matrix::from_rows({{0.1, 1.0 / 3.0}, {1e20, 1.5e-7}}));
  CHECK(nasheq::serialize_game(awkward) ==
        "zerosum 2 2\n"
        "A\n"
        "0.1 0.3333333333333333\n"
        "1e+20 1.5e-07\n");

  const BimatrixGame wide(Matrix::from_rows({{0.5, 100.0}}),
                          Matrix::from_rows({{-0.0}, {2.0}}));
  CHECK(nasheq::serialize_game(wide) ==
        "bimatrix 1 2\n"
        "A\n"
        "0.5 100\n"
        "B\n"
        "-0\n"
        "2\n");
}

TEST_CASE("parse inverts serialize exactly") {
  std::mt19937_64 rng(20260819ull);
  for (int trial = 0; trial < 250; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 5);
    const int n = 1 + static_cast<int>(rng() % 5);
    const ZeroSumGame game(random_game_matrix(rng, m, n));
    const ParsedGame parsed = nasheq::parse_game(nasheq::serialize_game(game));
    REQUIRE(std::holds_alternative<ZeroSumGame>(parsed));
    CHECK(std::get<ZeroSumGame>(parsed).a() == game.a());
  }
  for (int trial = 0; trial < 250; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 5);
    const int n = 1 + static_cast<int>(rng() % 5);
    const BimatrixGame game(random_game_matrix(rng, m, n), random_game_matrix(rng, n, m));
    const ParsedGame parsed = nasheq::parse_game(nasheq::serialize_game(game));
    REQUIRE(std::holds_alternative<BimatrixGame>(parsed));
    CHECK(std::get<BimatrixGame>(parsed).a() == game.a());
    CHECK(std::get<BimatrixGame>(parsed).b() == game.b());
  }
}

TEST_CASE("solver results serialize with full precision") {
  const SolveResult result{
      JointStrategy{Vec{0.5, 0.5}, Vec{0.5, 0.5}},
      2.0 / 3.0,
      0.0,
      Certificate{CertificateKind::DualityGap, 0.25, 1e-6, 42, SolutionMethod::Extragradient},
      true,
      std::nullopt,
  };
  CHECK(nasheq::serialize_result(result) ==
        "p: 0.5 0.5\n"
        "q: 0.5 0.5\n"
        "u1: 0.66666666666666663\n"
        "u2: 0\n"
        "certificate: DualityGap 0.25 42 Extragradient\n");
}

TEST_CASE("equilibrium lists serialize as blank-line separated blocks") {
  const EquilibriumEntry pure{JointStrategy{Vec{1.0, 0.0}, Vec{1.0, 0.0}},
                              50.0,
                              50.0,
                              SupportPair{{0}, {0}},
                              0.0};
  const EquilibriumEntry mixed{JointStrategy{Vec{0.5, 0.5}, Vec{0.5, 0.5}},
                               0.5,
                               0.5,
                               SupportPair{{0, 1}, {0, 1}},
                               0.25};
  const std::string pure_block =
      "p: 1 0\n"
      "q: 1 0\n"
      "u1: 50\n"
      "u2: 50\n"
      "certificate: NashResidual 0 0 SupportEnumeration\n";
  const std::string mixed_block =
      "p: 0.5 0.5\n"
      "q: 0.5 0.5\n"
      "u1: 0.5\n"
      "u2: 0.5\n"
      "certificate: NashResidual 0.25 0 SupportEnumeration\n";

  CHECK(nasheq::serialize_result(EquilibriumList{{pure}, 0}) == pure_block);
  CHECK(nasheq::serialize_result(EquilibriumList{{pure, mixed}, 0}) ==
        pure_block + "\n" + mixed_block);
  CHECK(nasheq::serialize_result(EquilibriumList{{}, 3}) ==
        "# no equilibria found (degenerate skips: 3)\n");
  CHECK(nasheq::serialize_result(EquilibriumList{}) ==
        "# no equilibria found (degenerate skips: 0)\n");
}

TEST_CASE("format helpers emit stable spellings") {
  CHECK(nasheq::format_shortest(1.0) == "1");
  CHECK(nasheq::format_shortest(-1.0) == "-1");
  CHECK(nasheq::format_shortest(0.5) == "0.5");
  CHECK(nasheq::format_shortest(0.1) == "0.1");
  CHECK(nasheq::format_shortest(100.0) == "100");
  CHECK(nasheq::format_shortest(1.0 / 3.0) == "0.3333333333333333");
  CHECK(nasheq::format_shortest(1e20) == "1e+20");
  CHECK(nasheq::format_shortest(1.5e-7) == "1.5e-07");

  CHECK(nasheq::format_sig17(50.0) == "50");
  CHECK(nasheq::format_sig17(0.0) == "0");
  CHECK(nasheq::format_sig17(0.5) == "0.5");
  CHECK(nasheq::format_sig17(0.25) == "0.25");
  CHECK(nasheq::format_sig17(0.1) == "0.10000000000000001");
  CHECK(nasheq::format_sig17(2.0 / 3.0) == "0.66666666666666663");
  CHECK(nasheq::format_sig17(2.5e-7) == "2.4999999999999999e-07");

  std::mt19937_64 rng(424242ull);
  for (int trial = 0; trial < 500; ++trial) {
    const double value = random_entry(rng);
    CHECK(reparse(nasheq::format_shortest(value)) == value);
    CHECK(reparse(nasheq::format_sig17(value)) == value);
  }
}

TEST_CASE("parse_game_file reads games from disk") {
  const std::string path = "/tmp/nasheq_io_roundtrip.game";
  {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << "# saved game\nzerosum 2 2\nA\n0.1 -0.3\n7 2\n";
  }
  const ParsedGame parsed = nasheq::parse_game_file(path);
  std::remove(path.c_str());
  REQUIRE(std::holds_alternative<ZeroSumGame>(parsed));
  CHECK(std::get<ZeroSumGame>(parsed).a()(0, 0) == 0.1);
  CHECK(std::get<ZeroSumGame>(parsed).a()(1, 0) == 7.0);

  CHECK_THROWS_WITH_AS(nasheq::parse_game_file("/tmp/nasheq_io_no_such_file.game"),
                       "cannot read file: /tmp/nasheq_io_no_such_file.game", Error);
}
