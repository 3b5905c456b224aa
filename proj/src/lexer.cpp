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

#include "snapcode/lexer.hpp"

#include <algorithm>
#include <array>

#include "snapcode/utf8.hpp"

namespace snapcode {
namespace {

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract", "assert",     "boolean",   "break",      "byte",      "case",
    "catch",    "char",       "class",     "const",      "continue",  "default",
    "do",       "double",     "else",      "enum",       "extends",   "final",
    "finally",  "float",      "for",       "goto",       "if",        "implements",
    "import",   "instanceof", "int",       "interface",  "long",      "native",
    "new",      "package",    "private",   "protected",  "public",    "return",
    "short",    "static",     "strictfp",  "super",      "switch",    "synchronized",
    "this",     "throw",      "throws",    "transient",  "try",       "void",
    "volatile", "while",      "true",      "false",      "null",
};

// Longest first so the first match wins.
constexpr std::array<std::string_view, 38> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "->", "::", "++", "--", "&&", "||",
    "==",   "!=",  "<=",  ">=",  "+=", "-=", "*=", "/=", "%=", "&=",
    "|=",   "^=",  "<<",  ">>",  "+",  "-",  "*",  "/",  "%",  "=",
    "<",    ">",   "!",   "~",   "?",  ":",  "&",  "|",
};

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\f' || c == '\v' || c == '\r';
}
bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsIdentStart(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' ||
         static_cast<unsigned char>(c) >= 0x80;
}
bool IsIdentPart(char c) { return IsIdentStart(c) || IsDigit(c); }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  LexResult Run() {
    while (pos_ < text_.size()) Next();
    return std::move(result_);
  }

 private:
  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void Emit(TokenKind kind, std::size_t end) {
    std::string_view lexeme = text_.substr(pos_, end - pos_);
    result_.tokens.push_back(Token{kind, std::string(lexeme), line_, col_, pos_});
    const std::size_t last_nl = lexeme.rfind('\n');
    if (last_nl == std::string_view::npos) {
      col_ += utf8::Length(lexeme);
    } else {
      line_ += static_cast<std::size_t>(std::count(lexeme.begin(), lexeme.end(), '\n'));
      col_ = utf8::Length(lexeme.substr(last_nl + 1));
    }
    pos_ = end;
  }

  void Diagnose(LexErrorKind kind) { result_.diagnostics.push_back({kind, line_, col_}); }

  void Next() {
    const char c = Peek();
    if (c == '\n') return Emit(TokenKind::kNewline, pos_ + 1);
    if (IsSpace(c)) {
      std::size_t end = pos_;
      while (end < text_.size() && IsSpace(text_[end])) ++end;
      return Emit(TokenKind::kWhitespace, end);
    }
    if (c == '/' && Peek(1) == '/') {
      const std::size_t nl = text_.find('\n', pos_);
      return Emit(TokenKind::kLineComment, nl == std::string_view::npos ? text_.size() : nl);
    }
    if (c == '/' && Peek(1) == '*') {
      const std::size_t close = text_.find("*/", pos_ + 2);
      if (close == std::string_view::npos) {
        Diagnose(LexErrorKind::kUnterminatedBlockComment);
        return Emit(TokenKind::kBlockComment, text_.size());
      }
      return Emit(TokenKind::kBlockComment, close + 2);
    }
    if (c == '"' || c == '\'') return Quoted(c);
    if (IsDigit(c) || (c == '.' && IsDigit(Peek(1)))) return Number();
    if (IsIdentStart(c)) {
      std::size_t end = pos_;
      while (end < text_.size() && IsIdentPart(text_[end])) ++end;
      const auto word = text_.substr(pos_, end - pos_);
      return Emit(IsJavaKeyword(word) ? TokenKind::kKeyword : TokenKind::kIdentifier, end);
    }
    if (text_.substr(pos_, 3) == "...") return Emit(TokenKind::kPunctuation, pos_ + 3);
    for (std::string_view op : kOperators) {
      if (text_.substr(pos_, op.size()) == op) return Emit(TokenKind::kOperator, pos_ + op.size());
    }
    // Brackets, separators and any byte with no other home.
    Emit(TokenKind::kPunctuation, pos_ + 1);
  }

  // Literals may not span lines. Running into a newline (or the end of input)
  // leaves the rest of the line as one kRaw token.
  void Quoted(char quote) {
    std::size_t end = pos_ + 1;
    while (end < text_.size() && text_[end] != '\n') {
      if (text_[end] == '\\') {
        if (end + 1 >= text_.size() || text_[end + 1] == '\n') {
          ++end;
          break;
        }
        end += 2;
        continue;
      }
      if (text_[end] == quote) {
        return Emit(quote == '"' ? TokenKind::kStringLiteral : TokenKind::kCharLiteral, end + 1);
      }
      ++end;
    }
    Diagnose(quote == '"' ? LexErrorKind::kUnterminatedString : LexErrorKind::kUnterminatedChar);
    Emit(TokenKind::kRaw, std::min(end, text_.size()));
  }

  void Number() {
    const bool hex = Peek() == '0' && (Peek(1) == 'x' || Peek(1) == 'X');
    std::size_t end = pos_;
    while (end < text_.size()) {
      const char ch = text_[end];
      if (IsDigit(ch) || IsIdentStart(ch) || ch == '.') {
        if (static_cast<unsigned char>(ch) >= 0x80) break;
        ++end;
        const bool exponent = hex ? (ch == 'p' || ch == 'P') : (ch == 'e' || ch == 'E');
        if (exponent && end < text_.size() && (text_[end] == '+' || text_[end] == '-')) ++end;
        continue;
      }
      break;
    }
    Emit(TokenKind::kNumber, end);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
  std::size_t col_ = 0;
  LexResult result_;
};

}  // namespace

std::string_view ToString(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kNumber: return "number";
    case TokenKind::kStringLiteral: return "string-literal";
    case TokenKind::kCharLiteral: return "char-literal";
    case TokenKind::kPunctuation: return "punctuation";
    case TokenKind::kOperator: return "operator";
    case TokenKind::kLineComment: return "line-comment";
    case TokenKind::kBlockComment: return "block-comment";
    case TokenKind::kWhitespace: return "whitespace";
    case TokenKind::kNewline: return "newline";
    case TokenKind::kRaw: return "raw";
  }
  return "unknown";
}

std::string_view Describe(LexErrorKind kind) {
  switch (kind) {
    case LexErrorKind::kUnterminatedString: return "unterminated string literal";
    case LexErrorKind::kUnterminatedChar: return "unterminated char literal";
    case LexErrorKind::kUnterminatedBlockComment: return "unterminated block comment";
  }
  return "lexer error";
}

std::string LexDiagnostic::Message() const {
  return std::to_string(line + 1) + ":" + std::to_string(col + 1) + ": " +
         std::string(Describe(kind));
}

bool IsJavaKeyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

LexResult Lex(std::string_view text) { return Lexer(text).Run(); }

std::string Concat(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) out += t.lexeme;
  return out;
}

}  // namespace snapcode
