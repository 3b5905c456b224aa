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

#include "snapcode/glyph_atlas.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string_view>

#include "snapcode/error.hpp"

namespace snapcode {
namespace {

#include "glyph_atlas_data.inc"

GlyphMask BoxOutline(std::size_t w, std::size_t h) {
  GlyphMask mask(w * h, 0);
  if (w < 3 || h < 3) {
    std::fill(mask.begin(), mask.end(), 1);
    return mask;
  }
  // One pixel inset so neighbouring boxes stay distinct.
  const std::size_t x0 = 1, y0 = 1, x1 = w - 2, y1 = h - 2;
  for (std::size_t y = y0; y <= y1; ++y) {
    for (std::size_t x = x0; x <= x1; ++x) {
      if (y == y0 || y == y1 || x == x0 || x == x1) mask[y * w + x] = 1;
    }
  }
  return mask;
}

}  // namespace

GlyphAtlas::GlyphAtlas(std::string id, std::size_t cell_width, std::size_t cell_height,
                       std::unordered_map<char32_t, GlyphMask> glyphs, GlyphMask fallback)
    : id_(std::move(id)),
      cell_width_(cell_width),
      cell_height_(cell_height),
      glyphs_(std::move(glyphs)),
      fallback_(std::move(fallback)) {
  const std::size_t area = cell_width_ * cell_height_;
  if (area == 0) throw InvalidConfig("glyph cell must be non-empty");
  if (fallback_.size() != area) throw InvalidConfig("fallback glyph has wrong size");
  for (const auto& [cp, mask] : glyphs_) {
    if (mask.size() != area) throw InvalidConfig("glyph mask has wrong size");
  }
  if (auto it = glyphs_.find(U' '); it != glyphs_.end() && InkCount(it->second) != 0) {
    throw InvalidConfig("space must map to the empty mask");
  }
  glyphs_.try_emplace(U' ', GlyphMask(area, 0));
}

std::string_view GlyphAtlas::BuiltinBaseId() { return kBuiltinAtlasId; }

GlyphAtlas GlyphAtlas::Builtin(std::size_t cell_width, std::size_t cell_height) {
  constexpr std::size_t kW = kBuiltinCellWidth;
  constexpr std::size_t kH = kBuiltinCellHeight;
  std::unordered_map<char32_t, GlyphMask> glyphs;
  for (char32_t cp = kBuiltinFirstCodePoint; cp <= kBuiltinLastCodePoint; ++cp) {
    const auto& rows = kBuiltinGlyphRows[cp - kBuiltinFirstCodePoint];
    GlyphMask mask(cell_width * cell_height, 0);
    for (std::size_t y = 0; y < cell_height; ++y) {
      const std::size_t sy = y * kH / cell_height;
      for (std::size_t x = 0; x < cell_width; ++x) {
        const std::size_t sx = x * kW / cell_width;
        mask[y * cell_width + x] = (rows[sy] >> (kW - 1 - sx)) & 1u;
      }
    }
    glyphs.emplace(cp, std::move(mask));
  }
  std::string id(kBuiltinAtlasId);
  if (cell_width != kW || cell_height != kH) {
    id += "@" + std::to_string(cell_width) + "x" + std::to_string(cell_height);
  }
  return GlyphAtlas(std::move(id), cell_width, cell_height, std::move(glyphs),
                    BoxOutline(cell_width, cell_height));
}

const GlyphMask& GlyphAtlas::Mask(char32_t cp) const {
  auto it = glyphs_.find(cp);
  return it == glyphs_.end() ? fallback_ : it->second;
}

std::size_t GlyphAtlas::InkCount(const GlyphMask& mask) {
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), std::uint8_t{1}));
}

}  // namespace snapcode
