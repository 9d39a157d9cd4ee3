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

#include "bimatrix/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace bimatrix {

namespace {

using nlohmann::ordered_json;

Matrix parse_matrix(const ordered_json& j, const char* field,
                    Eigen::Index rows, Eigen::Index cols) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows) {
    std::ostringstream os;
    os << "field '" << field << "' must be an array of " << rows << " rows";
    throw ParseError(os.str());
  }
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const ordered_json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      std::ostringstream os;
      os << "row " << i << " of '" << field << "' must have " << cols
         << " entries";
      throw ParseError(os.str());
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const ordered_json& cell = row[static_cast<std::size_t>(k)];
      if (!cell.is_number()) {
        std::ostringstream os;
        os << "entry (" << i << ", " << k << ") of '" << field
           << "' is not a number";
        throw ParseError(os.str());
      }
      m(i, k) = cell.get<double>();
    }
  }
  return m;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  // %.17g always round-trips; prefer the shorter %.15g when it does too.
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  double back = 0.0;
  std::sscanf(buf, "%lf", &back);
  if (back != v) std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

BimatrixGame parse_game_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top-level JSON value must be an object");
  for (const char* field : {"n", "m", "R", "C"}) {
    if (!j.contains(field)) {
      throw ParseError(std::string("missing field '") + field + "'");
    }
  }
  if (!j["n"].is_number_integer() || !j["m"].is_number_integer()) {
    throw ParseError("fields 'n' and 'm' must be integers");
  }
  const auto n = j["n"].get<Eigen::Index>();
  const auto m = j["m"].get<Eigen::Index>();
  if (n < 1 || m < 1) throw ParseError("fields 'n' and 'm' must be positive");
  Matrix r = parse_matrix(j["R"], "R", n, m);
  Matrix c = parse_matrix(j["C"], "C", n, m);
  try {
    return make_game(std::move(r), std::move(c));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string emit_game_json(const BimatrixGame& g) {
  ordered_json j;
  j["n"] = g.rows();
  j["m"] = g.cols();
  const auto emit_matrix = [&](const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["R"] = emit_matrix(g.row_payoffs);
  j["C"] = emit_matrix(g.col_payoffs);
  return j.dump(2) + "\n";
}

namespace {

// Tokenizer for the .nfg header/payload: quoted strings, braces and bare
// tokens separated by whitespace.
struct NfgLexer {
  std::string_view text;
  std::size_t pos = 0;

  std::string next() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos >= text.size()) return {};
    if (text[pos] == '"') {
      const std::size_t end = text.find('"', pos + 1);
      if (end == std::string_view::npos) {
        throw ParseError("nfg: unterminated string literal");
      }
      std::string out(text.substr(pos, end - pos + 1));
      pos = end + 1;
      return out;
    }
    if (text[pos] == '{' || text[pos] == '}') {
      return std::string(1, text[pos++]);
    }
    std::size_t end = pos;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end])) &&
           text[end] != '{' && text[end] != '}' && text[end] != '"') {
      ++end;
    }
    std::string out(text.substr(pos, end - pos));
    pos = end;
    return out;
  }
};

long parse_count(const std::string& token, const char* what) {
  long value = 0;
  const auto res =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size() ||
      value < 1) {
    throw ParseError(std::string("nfg: bad ") + what + " '" + token + "'");
  }
  return value;
}

}  // namespace

BimatrixGame parse_nfg(std::string_view text) {
  NfgLexer lex{text};
  if (lex.next() != "NFG" || lex.next() != "1" || lex.next() != "R") {
    throw ParseError("nfg: expected header 'NFG 1 R'");
  }
  std::string tok = lex.next();
  if (tok.empty() || tok.front() != '"') {
    throw ParseError("nfg: expected a quoted game title");
  }
  if (lex.next() != "{") throw ParseError("nfg: expected '{' before players");
  std::vector<std::string> players;
  while (true) {
    tok = lex.next();
    if (tok == "}") break;
    if (tok.empty() || tok.front() != '"') {
      throw ParseError("nfg: expected quoted player names");
    }
    players.push_back(tok);
  }
  if (players.size() != 2) throw ParseError("nfg: two players required");
  if (lex.next() != "{") {
    throw ParseError("nfg: expected '{' before strategy counts");
  }
  std::vector<long> counts;
  while (true) {
    tok = lex.next();
    if (tok == "}") break;
    if (tok.empty()) throw ParseError("nfg: unterminated strategy counts");
    counts.push_back(parse_count(tok, "strategy count"));
  }
  if (counts.size() != 2) {
    throw ParseError("nfg: strategy counts must list two players");
  }
  const Eigen::Index n = counts[0];
  const Eigen::Index m = counts[1];

  // Optional comment string between the header and the payoffs.
  std::vector<double> payoffs;
  payoffs.reserve(static_cast<std::size_t>(2 * n * m));
  while (true) {
    tok = lex.next();
    if (tok.empty()) break;
    if (tok.front() == '"' && payoffs.empty()) continue;
    if (tok == "{") {
      throw ParseError("nfg: outcome-format files are not supported");
    }
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("nfg: bad payoff token '" + tok + "'");
    }
    payoffs.push_back(v);
  }
  if (static_cast<Eigen::Index>(payoffs.size()) != 2 * n * m) {
    std::ostringstream os;
    os << "nfg: expected " << 2 * n * m << " payoffs, found "
       << payoffs.size();
    throw ParseError(os.str());
  }

  Matrix r(n, m);
  Matrix c(n, m);
  std::size_t k = 0;
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      r(i, j) = payoffs[k++];
      c(i, j) = payoffs[k++];
    }
  }
  try {
    return make_game(std::move(r), std::move(c));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string emit_nfg(const BimatrixGame& g, const std::string& title) {
  std::ostringstream os;
  os << "NFG 1 R \"" << title << "\" { \"Row\" \"Column\" } { " << g.rows()
     << " " << g.cols() << " }\n\n";
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      os << format_double(g.row_payoffs(i, j)) << " "
         << format_double(g.col_payoffs(i, j));
      if (j + 1 < g.cols() || i + 1 < g.rows()) os << " ";
    }
  }
  os << "\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return os.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("error while writing '" + path + "'");
}

BimatrixGame load_game(const std::string& path) {
  const std::string text = read_file(path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".nfg") {
    return parse_nfg(text);
  }
  return parse_game_json(text);
}

void save_game(const BimatrixGame& g, const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".nfg") {
    write_file(path, emit_nfg(g));
  } else {
    write_file(path, emit_game_json(g));
  }
}

}  // namespace bimatrix
