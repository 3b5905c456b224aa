// Copyright 2026 The Snapcode Authors.
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

#ifndef SNAPCODE_REFORMAT_HPP_
#define SNAPCODE_REFORMAT_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snapcode/lexer.hpp"
#include "snapcode/source_text.hpp"

namespace snapcode {

// The visible text window. Columns count characters, not bytes.
struct WindowConfig {
  std::size_t max_rows = 30;
  std::size_t max_cols = 120;
  std::size_t indent_unit = 4;  // spaces per brace depth
  std::size_t tab_width = 4;

  // Throws InvalidConfig.
  void Validate() const;

  friend bool operator==(const WindowConfig&, const WindowConfig&) = default;
};

// Drops line and block comments; everything else is kept in order.
std::vector<Token> StripComments(std::span<const Token> tokens);

// Re-emits each non-blank line at brace_depth * indent_unit spaces.
//
// Whitespace runs outside literals collapse to one space, blank lines and
// trailing whitespace disappear, tabs inside literals expand to tab stops.
// Original line boundaries are kept; nothing is re-wrapped.
//
// Two clamps keep the result stable under a later TruncateWindow: the indent
// never exceeds max_cols - 1 columns, and braces that land at or past
// max_cols do not change the depth (they will be cut off anyway).
SourceText NormalizeLayout(std::span<const Token> tokens, const WindowConfig& cfg);

// First max_rows lines, each cut to max_cols characters. Surviving text is
// untouched.
SourceText TruncateWindow(const SourceText& src, const WindowConfig& cfg);

// Expands '\t' to the next multiple of tab_width, per line.
std::string ExpandTabs(std::string_view text, std::size_t tab_width);

// Removes trailing spaces from every line.
std::string TrimLineEnds(std::string_view text);

// The Reformatted variant:
//   TrimLineEnds(TruncateWindow(NormalizeLayout(StripComments(Lex(src)))))
// The trailing trim only matters when the column cut lands after a space.
// Lexer diagnostics are appended to `diagnostics` when given.
SourceText Reformat(const SourceText& src, const WindowConfig& cfg,
                    std::vector<LexDiagnostic>* diagnostics = nullptr);

// The window applied to the Original variant: tabs expanded, then truncated.
// Comments and blank lines stay.
SourceText OriginalWindow(const SourceText& src, const WindowConfig& cfg);

}  // namespace snapcode

#endif  // SNAPCODE_REFORMAT_HPP_
