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

#ifndef SNAPCODE_GLYPH_ATLAS_HPP_
#define SNAPCODE_GLYPH_ATLAS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace snapcode {

// cell_width x cell_height binary mask, row-major, 1 = ink.
using GlyphMask = std::vector<std::uint8_t>;

// Immutable map from code point to glyph mask. Safe to share across threads.
class GlyphAtlas {
 public:
  // Takes ownership of the masks. Throws InvalidConfig if any mask has the
  // wrong size or if space is mapped to anything but an empty mask.
  GlyphAtlas(std::string id, std::size_t cell_width, std::size_t cell_height,
             std::unordered_map<char32_t, GlyphMask> glyphs, GlyphMask fallback);

  // The embedded monospace atlas (printable ASCII), resampled with
  // nearest-neighbour when the requested cell differs from the native 10x20.
  static GlyphAtlas Builtin(std::size_t cell_width = 10, std::size_t cell_height = 20);
  static std::string_view BuiltinBaseId();

  const std::string& id() const { return id_; }
  std::size_t cell_width() const { return cell_width_; }
  std::size_t cell_height() const { return cell_height_; }

  bool Contains(char32_t cp) const { return glyphs_.contains(cp); }
  // Unmapped code points get the fallback (a box outline for the builtin).
  const GlyphMask& Mask(char32_t cp) const;
  const GlyphMask& Fallback() const { return fallback_; }

  static std::size_t InkCount(const GlyphMask& mask);

 private:
  std::string id_;
  std::size_t cell_width_;
  std::size_t cell_height_;
  std::unordered_map<char32_t, GlyphMask> glyphs_;
  GlyphMask fallback_;
};

}  // namespace snapcode

#endif  // SNAPCODE_GLYPH_ATLAS_HPP_
