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

#pragma once

#include <string>
#include <variant>

#include "nasheq/equilibrium_solvers.hpp"
#include "nasheq/exact_oracle.hpp"
#include "nasheq/game_model.hpp"

namespace nasheq {

using ParsedGame = std::variant<ZeroSumGame, BimatrixGame>;

// Parser guard against absurd headers; desk-scale games are tiny.
inline constexpr int kMaxParseDim = 2048;

// Parses the line-oriented game format:
//
//   # comment lines and blank lines are ignored
//   bimatrix <m> <n>     (or: zerosum <m> <n>; single spaces)
//   A
//   <m rows of n whitespace-separated decimal literals>
//   B                    (bimatrix only)
//   <n rows of m literals>
//
// Lines end with '\n' or '\r\n'. Anything after the last matrix row is an
// error. Throws ParseError carrying the 1-based line number.
ParsedGame parse_game(const std::string& text);

// Reads the file and parses it; unreadable path -> Error.
ParsedGame parse_game_file(const std::string& path);

// Inverse of parse_game. Entries are written as shortest round-trip
// decimals, so parse(serialize(g)) reproduces g bit-exactly.
std::string serialize_game(const BimatrixGame& game);
std::string serialize_game(const ZeroSumGame& game);

// Line-oriented result report:
//
//   p: <entries>
//   q: <entries>
//   u1: <value>
//   u2: <value>
//   certificate: <kind> <value> <iterations> <method>
//
// Numbers carry 17 significant digits so the report reproduces the doubles
// exactly. Lists print one block per equilibrium separated by blank lines; an
// empty list prints a single comment line with the degenerate-skip count.
std::string serialize_result(const SolveResult& result);
std::string serialize_result(const EquilibriumList& list);

// Shortest decimal string that parses back to exactly this value.
std::string format_shortest(double value);

// 17 significant digits, printf %g style; also parses back exactly.
std::string format_sig17(double value);

}  // namespace nasheq
