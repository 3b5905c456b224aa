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

#ifndef SNAPCODE_REDACT_HPP_
#define SNAPCODE_REDACT_HPP_

#include "snapcode/source_text.hpp"

namespace snapcode {

inline constexpr char32_t kRedactionMark = U'x';

// [A-Za-z0-9] and every non-ASCII code point become 'x'. Punctuation,
// operators, underscore and ASCII whitespace pass through.
constexpr char32_t RedactChar(char32_t c) {
  const bool ascii_alnum =
      (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') || (c >= U'0' && c <= U'9');
  return (ascii_alnum || c >= 0x80) ? kRedactionMark : c;
}

// Character-wise RedactChar. Line structure and per-line character counts are
// preserved; the variant becomes kRedacted.
SourceText Redact(const SourceText& src);

}  // namespace snapcode

#endif  // SNAPCODE_REDACT_HPP_
