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

#include "nasheq/game_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <utility>
#include <vector>

namespace nasheq {
namespace {

struct Line {
  int number;  // 1-based position in the raw text
  std::string text;
};

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

// Splits the text into significant lines, dropping comments and blanks but
// keeping raw line numbers for error reporting. Returns the total number of
// raw lines through eof_line (one past the last raw line).
std::vector<Line> significant_lines(const std::string& text, int& eof_line) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line(text.data() + start,
                          (end == std::string::npos ? text.size() : end) - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number;
    if (!is_blank(line) && line.front() != '#') out.push_back({number, std::string(line)});
    if (end == std::string::npos) break;
    start = end + 1;
  }
  eof_line = number + 1;
  return out;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const std::size_t begin = line.find_first_not_of(" \t", pos);
    if (begin == std::string_view::npos) break;
    std::size_t end = line.find_first_of(" \t", begin);
    if (end == std::string_view::npos) end = line.size();
    tokens.push_back(line.substr(begin, end - begin));
    pos = end;
  }
  return tokens;
}

// Decimal literal with optional sign, fraction, and exponent. Rejects
// partial parses and non-finite spellings.
bool parse_number(std::string_view token, double& out) {
  std::string_view body = token;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  if (body.empty()) return false;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc() || ptr != body.data() + body.size()) return false;
  if (!std::isfinite(value)) return false;
  out = value;
  return true;
}

bool parse_dimension(std::string_view token, int& out) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 1) return false;
  out = value;
  return true;
}

class LineCursor {
 public:
  LineCursor(std::vector<Line> lines, int eof_line)
      : lines_(std::move(lines)), eof_line_(eof_line) {}

  const Line& next(const std::string& what) {
    if (idx_ >= lines_.size()) throw ParseError(eof_line_, "missing " + what);
    return lines_[idx_++];
  }

  bool done() const { return idx_ >= lines_.size(); }
  const Line& peek() const { return lines_[idx_]; }

 private:
  std::vector<Line> lines_;
  int eof_line_;
  std::size_t idx_ = 0;
};

Matrix read_matrix(LineCursor& cursor, const std::string& section, int rows, int cols) {
  const Line& marker = cursor.next("section '" + section + "'");
  if (marker.text != section) {
    throw ParseError(marker.number, "expected section '" + section + "', got '" + marker.text + "'");
  }
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  for (int r = 0; r < rows; ++r) {
    const Line& line = cursor.next("row " + std::to_string(r + 1) + " of section '" + section + "'");
    const std::vector<std::string_view> tokens = split_whitespace(line.text);
    if (static_cast<int>(tokens.size()) != cols) {
      throw ParseError(line.number, "expected " + std::to_string(cols) + " values, found " +
                                        std::to_string(tokens.size()));
    }
    for (const std::string_view token : tokens) {
      double value = 0.0;
      if (!parse_number(token, value)) {
        throw ParseError(line.number, "bad number '" + std::string(token) + "'");
      }
      data.push_back(value);
    }
  }
  return Matrix(rows, cols, std::move(data));
}

void append_rows(std::string& out, const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      out += format_shortest(m(i, j));
      out += (j + 1 < m.cols()) ? ' ' : '\n';
    }
  }
}

void append_strategy(std::string& out, const char* label, const Vec& v) {
  out += label;
  for (int i = 0; i < v.dim(); ++i) {
    out += ' ';
    out += format_sig17(v[i]);
  }
  out += '\n';
}

void append_block(std::string& out, const JointStrategy& z, double u1, double u2,
                  CertificateKind kind, double value, long iterations, SolutionMethod method) {
  append_strategy(out, "p:", z.p);
  append_strategy(out, "q:", z.q);
  out += "u1: " + format_sig17(u1) + '\n';
  out += "u2: " + format_sig17(u2) + '\n';
  out += "certificate: " + to_string(kind) + ' ' + format_sig17(value) + ' ' +
         std::to_string(iterations) + ' ' + to_string(method) + '\n';
}

}  // namespace

ParsedGame parse_game(const std::string& text) {
  int eof_line = 1;
  // Split first: eof_line must be written before the cursor reads it, and
  // argument evaluation order would not guarantee that.
  std::vector<Line> lines = significant_lines(text, eof_line);
  LineCursor cursor(std::move(lines), eof_line);

  const Line& header = cursor.next("header");
  const std::vector<std::string_view> tokens = split_whitespace(header.text);
  const bool single_spaced = tokens.size() == 3 &&
                             header.text == std::string(tokens[0]) + " " + std::string(tokens[1]) +
                                                " " + std::string(tokens[2]);
  if (!single_spaced || (tokens[0] != "bimatrix" && tokens[0] != "zerosum")) {
    throw ParseError(header.number, "header must be 'bimatrix <m> <n>' or 'zerosum <m> <n>'");
  }
  int m = 0;
  int n = 0;
  if (!parse_dimension(tokens[1], m) || !parse_dimension(tokens[2], n)) {
    throw ParseError(header.number, "dimensions must be positive integers");
  }
  if (m > kMaxParseDim || n > kMaxParseDim) {
    throw ParseError(header.number, "dimension exceeds limit " + std::to_string(kMaxParseDim));
  }

  Matrix a = read_matrix(cursor, "A", m, n);
  ParsedGame game = tokens[0] == "zerosum"
                        ? ParsedGame(ZeroSumGame(std::move(a)))
                        : ParsedGame(BimatrixGame(std::move(a), read_matrix(cursor, "B", n, m)));
  if (!cursor.done()) {
    throw ParseError(cursor.peek().number, "trailing content '" + cursor.peek().text + "'");
  }
  return game;
}

ParsedGame parse_game_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error("cannot read file: " + path);
  return parse_game(buffer.str());
}

std::string serialize_game(const BimatrixGame& game) {
  std::string out =
      "bimatrix " + std::to_string(game.rows()) + " " + std::to_string(game.cols()) + "\nA\n";
  append_rows(out, game.a());
  out += "B\n";
  append_rows(out, game.b());
  return out;
}

std::string serialize_game(const ZeroSumGame& game) {
  std::string out =
      "zerosum " + std::to_string(game.rows()) + " " + std::to_string(game.cols()) + "\nA\n";
  append_rows(out, game.a());
  return out;
}

std::string serialize_result(const SolveResult& result) {
  std::string out;
  append_block(out, result.z, result.u1, result.u2, result.certificate.kind,
               result.certificate.value, result.certificate.iterations, result.certificate.method);
  return out;
}

std::string serialize_result(const EquilibriumList& list) {
  if (list.entries.empty()) {
    return "# no equilibria found (degenerate skips: " + std::to_string(list.degenerate_skips) +
           ")\n";
  }
  std::string out;
  bool first = true;
  for (const EquilibriumEntry& entry : list.entries) {
    if (!first) out += '\n';
    first = false;
    append_block(out, entry.z, entry.u1, entry.u2, CertificateKind::NashResidual, entry.residual,
                 0, SolutionMethod::SupportEnumeration);
  }
  return out;
}

std::string format_shortest(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string format_sig17(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

}  // namespace nasheq
