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

#include "snapcode/source_text.hpp"

namespace snapcode {

std::string_view ToString(TextVariant variant) {
  switch (variant) {
    case TextVariant::kRaw:
      return "raw";
    case TextVariant::kReformatted:
      return "reformatted";
    case TextVariant::kRedacted:
      return "redacted";
  }
  return "unknown";
}

SourceText SourceText::FromRaw(std::string_view bytes) {
  SourceText src;
  src.text.reserve(bytes.size());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    if (bytes[i] == '\r') {
      src.text.push_back('\n');
      if (i + 1 < bytes.size() && bytes[i + 1] == '\n') ++i;
    } else {
      src.text.push_back(bytes[i]);
    }
  }
  return src;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::vector<std::string_view> SourceText::Lines() const { return SplitLines(text); }

}  // namespace snapcode
