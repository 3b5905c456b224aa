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

#include "snapcode/reformat.hpp"

#include <algorithm>

#include "snapcode/error.hpp"
#include "snapcode/utf8.hpp"

namespace snapcode {
namespace {

bool IsBlank(char c) {
  return c == ' ' || c == '\t' || c == '\f' || c == '\v' || c == '\r';
}

std::string_view TrimLeft(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && IsBlank(s[i])) ++i;
  return s.substr(i);
}

struct Piece {
  std::string_view text;
  bool space = false;
  bool literal = false;  // copied verbatim apart from tab expansion
  bool continuation = false;
  int brace = 0;  // +1 for '{', -1 for '}'
};

using Line = std::vector<Piece>;

std::vector<Line> SplitIntoLines(std::span<const Token> tokens) {
  std::vector<Line> lines(1);
  for (const Token& tok : tokens) {
    switch (tok.kind) {
      case TokenKind::kNewline:
        lines.emplace_back();
        continue;
      case TokenKind::kWhitespace:
        lines.back().push_back({.text = tok.lexeme, .space = true});
        continue;
      case TokenKind::kPunctuation:
        if (tok.lexeme == "{" || tok.lexeme == "}") {
          lines.back().push_back({.text = tok.lexeme, .brace = tok.lexeme == "{" ? 1 : -1});
          continue;
        }
        break;
      default:
        break;
    }
    const bool literal = tok.kind == TokenKind::kStringLiteral ||
                         tok.kind == TokenKind::kCharLiteral || tok.kind == TokenKind::kRaw ||
                         tok.IsComment();
    // Only block comments span lines; they are normally stripped already.
    std::string_view rest = tok.lexeme;
    bool continuation = false;
    for (;;) {
      const std::size_t nl = rest.find('\n');
      lines.back().push_back(
          {.text = rest.substr(0, nl), .literal = literal, .continuation = continuation});
      if (nl == std::string_view::npos) break;
      rest = rest.substr(nl + 1);
      lines.emplace_back();
      continuation = true;
    }
  }
  return lines;
}

}  // namespace

void WindowConfig::Validate() const {
  if (max_rows < 1) throw InvalidConfig("max_rows must be >= 1");
  if (max_cols < 1) throw InvalidConfig("max_cols must be >= 1");
  if (tab_width < 1) throw InvalidConfig("tab_width must be >= 1");
}

std::vector<Token> StripComments(std::span<const Token> tokens) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  std::copy_if(tokens.begin(), tokens.end(), std::back_inserter(out),
               [](const Token& t) { return !t.IsComment(); });
  return out;
}

SourceText NormalizeLayout(std::span<const Token> tokens, const WindowConfig& cfg) {
  SourceText result;
  result.variant = TextVariant::kReformatted;

  std::size_t depth = 0;
  bool first_line = true;
  for (Line& line : SplitIntoLines(tokens)) {
    // Find the first piece with visible content.
    std::size_t first = 0;
    for (; first < line.size(); ++first) {
      Piece& p = line[first];
      if (p.space) continue;
      if (p.continuation) p.text = TrimLeft(p.text);
      if (!p.text.empty()) break;
    }
    if (first == line.size()) continue;

    const std::size_t indent_depth = (line[first].brace < 0 && depth > 0) ? depth - 1 : depth;
    const std::size_t indent = std::min(indent_depth * cfg.indent_unit, cfg.max_cols - 1);

    std::string out(indent, ' ');
    std::size_t col = indent;
    bool pending_space = false;
    for (std::size_t i = first; i < line.size(); ++i) {
      const Piece& p = line[i];
      if (p.space) {
        pending_space = true;
        continue;
      }
      if (p.text.empty()) continue;
      if (pending_space) {
        out.push_back(' ');
        ++col;
        pending_space = false;
      }
      if (p.brace != 0 && col < cfg.max_cols) {
        if (p.brace > 0) {
          ++depth;
        } else if (depth > 0) {
          --depth;
        }
      }
      if (!p.literal) {
        out += p.text;
        col += utf8::Length(p.text);
        continue;
      }
      for (std::size_t pos = 0; pos < p.text.size();) {
        if (p.text[pos] == '\t') {
          const std::size_t stop = (col / cfg.tab_width + 1) * cfg.tab_width;
          out.append(stop - col, ' ');
          col = stop;
          ++pos;
          continue;
        }
        const std::size_t len = utf8::DecodeAt(p.text, pos).length;
        out.append(p.text.substr(pos, len));
        ++col;
        pos += len;
      }
    }
    while (!out.empty() && IsBlank(out.back())) out.pop_back();

    if (!first_line) result.text.push_back('\n');
    result.text += out;
    first_line = false;
  }
  return result;
}

SourceText TruncateWindow(const SourceText& src, const WindowConfig& cfg) {
  SourceText out;
  out.language = src.language;
  out.variant = src.variant;
  const auto lines = src.Lines();
  const std::size_t keep = std::min(lines.size(), cfg.max_rows);
  for (std::size_t i = 0; i < keep; ++i) {
    if (i > 0) out.text.push_back('\n');
    out.text += lines[i].substr(0, utf8::PrefixBytes(lines[i], cfg.max_cols));
  }
  if (keep == lines.size() && !src.text.empty() && src.text.back() == '\n') {
    out.text.push_back('\n');
  }
  return out;
}

std::string ExpandTabs(std::string_view text, std::size_t tab_width) {
  std::string out;
  out.reserve(text.size());
  std::size_t col = 0;
  for (std::size_t pos = 0; pos < text.size();) {
    const char c = text[pos];
    if (c == '\n') {
      out.push_back(c);
      col = 0;
      ++pos;
    } else if (c == '\t') {
      const std::size_t stop = (col / tab_width + 1) * tab_width;
      out.append(stop - col, ' ');
      col = stop;
      ++pos;
    } else {
      const std::size_t len = utf8::DecodeAt(text, pos).length;
      out.append(text.substr(pos, len));
      ++col;
      pos += len;
    }
  }
  return out;
}

std::string TrimLineEnds(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t start = 0;
  for (;;) {
    const std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
    while (!line.empty() && IsBlank(line.back())) line.remove_suffix(1);
    out += line;
    if (nl == std::string_view::npos) break;
    out.push_back('\n');
    start = nl + 1;
  }
  return out;
}

SourceText Reformat(const SourceText& src, const WindowConfig& cfg,
                    std::vector<LexDiagnostic>* diagnostics) {
  cfg.Validate();
  LexResult lexed = Lex(src.text);
  if (diagnostics != nullptr) {
    diagnostics->insert(diagnostics->end(), lexed.diagnostics.begin(), lexed.diagnostics.end());
  }
  const auto stripped = StripComments(lexed.tokens);
  SourceText out = TruncateWindow(NormalizeLayout(stripped, cfg), cfg);
  out.text = TrimLineEnds(out.text);
  out.language = src.language;
  return out;
}

SourceText OriginalWindow(const SourceText& src, const WindowConfig& cfg) {
  cfg.Validate();
  SourceText expanded = src;
  expanded.text = ExpandTabs(src.text, cfg.tab_width);
  return TruncateWindow(expanded, cfg);
}

}  // namespace snapcode
