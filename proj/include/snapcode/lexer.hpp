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

// Lossless lexer for Java-like source. Every byte of the input lands in
// exactly one token, so concatenating the lexemes reproduces the input.
//
// Malformed input never stops the lexer:
//   - a string or char literal that reaches the end of its line becomes a
//     kRaw token running to (not including) the newline;
//   - a block comment with no closing "*/" runs to the end of the input and
//     is still reported as kBlockComment.
// Both cases add a LexDiagnostic.

#ifndef SNAPCODE_LEXER_HPP_
#define SNAPCODE_LEXER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "snapcode/source_text.hpp"

namespace snapcode {

enum class TokenKind {
  kIdentifier,
  kKeyword,
  kNumber,
  kStringLiteral,
  kCharLiteral,
  kPunctuation,
  kOperator,
  kLineComment,
  kBlockComment,
  kWhitespace,
  kNewline,
  kRaw,  // unterminated literal, kept verbatim
};

std::string_view ToString(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t line = 0;    // 0-based
  std::size_t col = 0;     // 0-based, in characters
  std::size_t offset = 0;  // byte offset into the lexed text

  bool IsComment() const {
    return kind == TokenKind::kLineComment || kind == TokenKind::kBlockComment;
  }
  bool IsTrivia() const {
    return IsComment() || kind == TokenKind::kWhitespace || kind == TokenKind::kNewline;
  }
  bool Is(TokenKind k, std::string_view text) const { return kind == k && lexeme == text; }

  friend bool operator==(const Token&, const Token&) = default;
};

enum class LexErrorKind {
  kUnterminatedString,
  kUnterminatedChar,
  kUnterminatedBlockComment,
};

struct LexDiagnostic {
  LexErrorKind kind;
  std::size_t line;
  std::size_t col;

  // "line:col: what", 1-based.
  std::string Message() const;
};

std::string_view Describe(LexErrorKind kind);

struct LexResult {
  std::vector<Token> tokens;
  std::vector<LexDiagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

LexResult Lex(std::string_view text);
inline LexResult Lex(const SourceText& src) { return Lex(src.text); }

bool IsJavaKeyword(std::string_view word);

// Ordered concatenation of lexemes.
std::string Concat(const std::vector<Token>& tokens);

}  // namespace snapcode

#endif  // SNAPCODE_LEXER_HPP_
