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

#ifndef SNAPCODE_SOURCE_TEXT_HPP_
#define SNAPCODE_SOURCE_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace snapcode {

enum class Language { kJavaLike };

enum class TextVariant { kRaw, kReformatted, kRedacted };

std::string_view ToString(TextVariant variant);

// Program text in one of the three pipeline stages. Lines are separated by a
// single '\n'; carriage returns are folded away on ingestion.
struct SourceText {
  std::string text;
  Language language = Language::kJavaLike;
  TextVariant variant = TextVariant::kRaw;

  // Ingests arbitrary bytes: "\r\n" and lone '\r' become '\n'.
  static SourceText FromRaw(std::string_view bytes);

  // Splits on '\n'. A single trailing newline does not produce an extra
  // empty line; "" has zero lines.
  std::vector<std::string_view> Lines() const;

  friend bool operator==(const SourceText&, const SourceText&) = default;
};

std::vector<std::string_view> SplitLines(std::string_view text);

}  // namespace snapcode

#endif  // SNAPCODE_SOURCE_TEXT_HPP_
