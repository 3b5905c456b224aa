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

#include <algorithm>
#include <array>
#include <optional>

#include "snapcode/dataset.hpp"
#include "snapcode/lexer.hpp"

namespace snapcode {
namespace {

constexpr std::array<std::string_view, 9> kPrimitiveTypes = {
    "void", "boolean", "byte", "char", "short", "int", "long", "float", "double"};

bool IsPrimitive(const Token& t) {
  return t.kind == TokenKind::kKeyword &&
         std::find(kPrimitiveTypes.begin(), kPrimitiveTypes.end(), t.lexeme) !=
             kPrimitiveTypes.end();
}

bool IsPunct(const Token& t, std::string_view text) {
  return t.kind == TokenKind::kPunctuation && t.lexeme == text;
}

struct Frame {
  bool class_body = false;
  std::string class_name;
};

class MethodScanner {
 public:
  MethodScanner(const SourceText& file, std::string_view path, Split split)
      : file_(file), path_(path), split_(split) {}

  ExtractResult Run() {
    LexResult lexed = Lex(file_.text);
    for (const auto& d : lexed.diagnostics) Warn(d.line, Describe(d.kind));
    for (auto& t : lexed.tokens) {
      if (!t.IsTrivia()) sig_.push_back(std::move(t));
    }
    Scan();
    return std::move(result_);
  }

 private:
  void Warn(std::size_t line, std::string_view what) {
    result_.warnings.push_back(std::string(path_) + ":" + std::to_string(line + 1) + ": " +
                               std::string(what));
  }

  bool AtClassLevel() const { return frames_.empty() || frames_.back().class_body; }
  const std::string& EnclosingClass() const {
    static const std::string kNone;
    return frames_.empty() ? kNone : frames_.back().class_name;
  }

  // Index of the token closing the bracket opened at `open`, if any.
  std::optional<std::size_t> Match(std::size_t open, std::string_view l, std::string_view r) const {
    std::size_t depth = 0;
    for (std::size_t i = open; i < sig_.size(); ++i) {
      if (IsPunct(sig_[i], l)) {
        ++depth;
      } else if (IsPunct(sig_[i], r) && --depth == 0) {
        return i;
      }
    }
    return std::nullopt;
  }

  bool LooksLikeReturnType(std::size_t name) const {
    if (name == 0) return false;
    const Token& prev = sig_[name - 1];
    if (IsPrimitive(prev) || IsPunct(prev, "]")) return true;
    if (prev.kind == TokenKind::kOperator && prev.lexeme == ">") return true;
    if (prev.kind != TokenKind::kIdentifier || prev.lexeme == "record") return false;
    // "@Inject Foo(" is an annotated constructor, not a return type.
    return !(name >= 2 && IsPunct(sig_[name - 2], "@"));
  }

  // Skips "throws A, b.C<D>" and legacy "[]" suffixes after the parameter
  // list; returns the index of the first token after them.
  std::size_t SkipDeclarationTail(std::size_t i) const {
    while (i < sig_.size() && (IsPunct(sig_[i], "[") || IsPunct(sig_[i], "]"))) ++i;
    if (i < sig_.size() && sig_[i].Is(TokenKind::kKeyword, "throws")) {
      ++i;
      while (i < sig_.size()) {
        const Token& t = sig_[i];
        const bool part = t.kind == TokenKind::kIdentifier || IsPunct(t, ".") ||
                          IsPunct(t, ",") || IsPunct(t, "@") ||
                          (t.kind == TokenKind::kOperator &&
                           (t.lexeme == "<" || t.lexeme == ">" || t.lexeme == "?"));
        if (!part) break;
        ++i;
      }
    }
    return i;
  }

  void Scan() {
    std::optional<std::string> pending_class;
    bool saw_new = false;
    for (std::size_t i = 0; i < sig_.size(); ++i) {
      const Token& t = sig_[i];
      if (IsPunct(t, "{")) {
        Frame f;
        if (pending_class && AtClassLevel()) {
          f.class_body = true;
          f.class_name = *pending_class;
        } else if (AtClassLevel() && saw_new && i > 0 && IsPunct(sig_[i - 1], ")")) {
          Warn(t.line, "skipped anonymous class body");
        }
        pending_class.reset();
        saw_new = false;
        frames_.push_back(std::move(f));
        continue;
      }
      if (IsPunct(t, "}")) {
        if (!frames_.empty()) frames_.pop_back();
        saw_new = false;
        continue;
      }
      if (IsPunct(t, ";")) {
        saw_new = false;
        continue;
      }
      if (!AtClassLevel()) continue;

      if (t.Is(TokenKind::kKeyword, "new")) {
        saw_new = true;
        continue;
      }
      const bool class_keyword = t.Is(TokenKind::kKeyword, "class") ||
                                 t.Is(TokenKind::kKeyword, "interface") ||
                                 t.Is(TokenKind::kKeyword, "enum") ||
                                 t.Is(TokenKind::kIdentifier, "record");
      if (class_keyword && i + 1 < sig_.size() && sig_[i + 1].kind == TokenKind::kIdentifier &&
          !(i > 0 && IsPunct(sig_[i - 1], "."))) {
        pending_class = sig_[i + 1].lexeme;
        ++i;
        continue;
      }
      if (t.kind != TokenKind::kIdentifier || i + 1 >= sig_.size() ||
          !IsPunct(sig_[i + 1], "(")) {
        continue;
      }
      if (!LooksLikeReturnType(i)) {
        if (t.lexeme == EnclosingClass()) Warn(t.line, "skipped constructor " + t.lexeme);
        continue;
      }
      const auto close_paren = Match(i + 1, "(", ")");
      if (!close_paren) {
        Warn(t.line, "unbalanced parentheses after " + t.lexeme);
        return;
      }
      const std::size_t after = SkipDeclarationTail(*close_paren + 1);
      if (after >= sig_.size() || !IsPunct(sig_[after], "{")) continue;
      const auto close_brace = Match(after, "{", "}");
      if (!close_brace) {
        Warn(t.line, "unbalanced braces in method " + t.lexeme);
        return;
      }
      const Token& open = sig_[i + 1];
      const Token& close = sig_[*close_brace];
      MethodRecord rec;
      rec.label = t.lexeme;
      rec.body.text = file_.text.substr(open.offset, close.offset + 1 - open.offset);
      rec.body.language = file_.language;
      rec.source_path = std::string(path_);
      rec.start_line = open.line;
      rec.end_line = close.line;
      rec.split = split_;
      result_.records.push_back(std::move(rec));
      i = *close_brace;
    }
  }

  const SourceText& file_;
  std::string_view path_;
  Split split_;
  std::vector<Token> sig_;
  std::vector<Frame> frames_;
  ExtractResult result_;
};

}  // namespace

ExtractResult ExtractMethods(const SourceText& file, std::string_view path, Split split) {
  return MethodScanner(file, path, split).Run();
}

TokenSequence TokenizeBody(const MethodRecord& record) {
  TokenSequence seq;
  seq.label = record.label;
  for (auto& t : Lex(record.body.text).tokens) {
    if (!t.IsTrivia()) seq.tokens.push_back(std::move(t.lexeme));
  }
  return seq;
}

}  // namespace snapcode
