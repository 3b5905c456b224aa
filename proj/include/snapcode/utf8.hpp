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

// Minimal UTF-8 stepping. Column accounting everywhere in the pipeline is in
// code points; a byte that does not start a well-formed sequence counts as one
// character of its own so that every byte string has a defined width.

#ifndef SNAPCODE_UTF8_HPP_
#define SNAPCODE_UTF8_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace snapcode::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

struct Decoded {
  char32_t code_point;
  std::size_t length;  // bytes consumed, always >= 1
};

// Decodes the sequence starting at text[pos]. Malformed input yields
// kReplacement with length 1.
Decoded DecodeAt(std::string_view text, std::size_t pos);

// Number of characters in `text`.
std::size_t Length(std::string_view text);

// Byte length of the longest prefix of `text` holding at most `max_chars`
// characters.
std::size_t PrefixBytes(std::string_view text, std::size_t max_chars);

void Append(std::string& out, char32_t code_point);

}  // namespace snapcode::utf8

#endif  // SNAPCODE_UTF8_HPP_
