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

#include "snapcode/render.hpp"

#include <cstdint>

#include "snapcode/error.hpp"
#include "snapcode/png.hpp"
#include "snapcode/reformat.hpp"
#include "snapcode/utf8.hpp"

namespace snapcode {

void RenderConfig::Validate() const {
  if (rows * cell_height_px < 1) throw InvalidConfig("canvas height must be >= 1");
  if (cols * cell_width_px < 1) throw InvalidConfig("canvas width must be >= 1");
  if (background == ink) throw InvalidConfig("background and ink must differ");
  if (output_size_px < 1) throw InvalidConfig("output size must be >= 1");
  if (tab_width < 1) throw InvalidConfig("tab_width must be >= 1");
}

SnapshotImage RenderCanvas(const SourceText& text, const RenderConfig& cfg,
                           const GlyphAtlas& atlas) {
  cfg.Validate();
  if (atlas.cell_width() != cfg.cell_width_px || atlas.cell_height() != cfg.cell_height_px) {
    throw InvalidConfig("atlas cell size does not match the render config");
  }
  const auto lines = text.Lines();
  if (lines.size() > cfg.rows) {
    throw WindowOverflow("text has " + std::to_string(lines.size()) + " lines, window holds " +
                         std::to_string(cfg.rows));
  }
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (utf8::Length(lines[r]) > cfg.cols) {
      throw WindowOverflow("line " + std::to_string(r + 1) + " exceeds " +
                           std::to_string(cfg.cols) + " characters");
    }
  }

  const std::size_t cw = cfg.cell_width_px, ch = cfg.cell_height_px;
  SnapshotImage canvas(cfg.canvas_width(), cfg.canvas_height(), cfg.background);
  // Each line owns a disjoint band of pixel rows.
  const auto n = static_cast<std::int64_t>(lines.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < n; ++r) {
    const std::string_view line = lines[r];
    std::size_t c = 0;
    for (std::size_t pos = 0; pos < line.size(); ++c) {
      const auto [cp, len] = utf8::DecodeAt(line, pos);
      pos += len;
      if (cp == U' ') continue;
      const GlyphMask& mask = atlas.Mask(cp);
      for (std::size_t gy = 0; gy < ch; ++gy) {
        std::uint8_t* row = canvas.pixels.data() + (r * ch + gy) * canvas.width + c * cw;
        for (std::size_t gx = 0; gx < cw; ++gx) {
          if (mask[gy * cw + gx]) row[gx] = cfg.ink;
        }
      }
    }
  }
  return canvas;
}

SnapshotImage RenderSnapshot(const SourceText& text, const RenderConfig& cfg,
                             const GlyphAtlas& atlas) {
  cfg.Validate();
  WindowConfig window;
  window.max_rows = cfg.rows;
  window.max_cols = cfg.cols;
  window.tab_width = cfg.tab_width;
  SourceText fitted = text;
  fitted.text = ExpandTabs(text.text, cfg.tab_width);
  fitted = TruncateWindow(fitted, window);
  return ResizeToSquare(RenderCanvas(fitted, cfg, atlas), cfg.output_size_px);
}

std::vector<std::uint8_t> Snapshot(const SourceText& text, const RenderConfig& cfg,
                                   const GlyphAtlas& atlas) {
  return EncodePng(RenderSnapshot(text, cfg, atlas));
}

}  // namespace snapcode
