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

#include "snapcode/redact.hpp"

#include "snapcode/utf8.hpp"

namespace snapcode {

SourceText Redact(const SourceText& src) {
  SourceText out;
  out.language = src.language;
  out.variant = TextVariant::kRedacted;
  out.text.reserve(src.text.size());
  for (std::size_t pos = 0; pos < src.text.size();) {
    const auto [cp, len] = utf8::DecodeAt(src.text, pos);
    utf8::Append(out.text, RedactChar(cp));
    pos += len;
  }
  return out;
}

}  // namespace snapcode
