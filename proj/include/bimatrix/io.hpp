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

#ifndef BIMATRIX_IO_HPP_
#define BIMATRIX_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "bimatrix/game.hpp"

namespace bimatrix {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical JSON game object: {"n": .., "m": .., "R": [[..]], "C": [[..]]}
// with row-major arrays of arrays. emit followed by parse is the identity
// on double-representable values.
BimatrixGame parse_game_json(std::string_view text);
std::string emit_game_json(const BimatrixGame& g);

// Gambit .nfg payoff format, two players only. Outcomes vary player 1's
// strategy fastest; each outcome lists the row payoff then the column
// payoff.
BimatrixGame parse_nfg(std::string_view text);
std::string emit_nfg(const BimatrixGame& g, const std::string& title = "");

// File helpers (ParseError for malformed content, IoError for I/O trouble).
BimatrixGame load_game(const std::string& path);  // by extension: .nfg or JSON
void save_game(const BimatrixGame& g, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace bimatrix

#endif  // BIMATRIX_IO_HPP_
