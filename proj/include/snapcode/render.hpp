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

#ifndef SNAPCODE_RENDER_HPP_
#define SNAPCODE_RENDER_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "snapcode/glyph_atlas.hpp"
#include "snapcode/image.hpp"
#include "snapcode/source_text.hpp"

namespace snapcode {

struct RenderConfig {
  std::size_t rows = 30;
  std::size_t cols = 120;
  std::size_t cell_width_px = 10;
  std::size_t cell_height_px = 20;
  std::size_t output_size_px = 512;
  std::uint8_t background = 255;
  std::uint8_t ink = 0;
  std::size_t tab_width = 4;

  // Throws InvalidConfig.
  void Validate() const;

  std::size_t canvas_width() const { return cols * cell_width_px; }
  std::size_t canvas_height() const { return rows * cell_height_px; }
};

// Stamps the glyph of the character at (line r, column c) into cell (r, c) of
// a background-filled canvas. Throws WindowOverflow when the text has more
// than cfg.rows lines or a line longer than cfg.cols characters, and
// InvalidConfig when the atlas cell size differs from cfg.
SnapshotImage RenderCanvas(const SourceText& text, const RenderConfig& cfg,
                           const GlyphAtlas& atlas);

// Area-weighted box resampling to out_width x out_height.
//
// Output pixel (ox, oy) covers the source rectangle
// [ox*W/out_w, (ox+1)*W/out_w) x [oy*H/out_h, (oy+1)*H/out_h). All overlaps
// are integers after scaling the source axes by out_w and out_h, so the
// weighted mean is an exact fraction; it is rounded half up. Rows are
// processed in parallel with OpenMP; the result does not depend on the
// thread count.
SnapshotImage ResizeBox(const SnapshotImage& img, std::size_t out_width, std::size_t out_height);

inline SnapshotImage ResizeToSquare(const SnapshotImage& img, std::size_t out) {
  return ResizeBox(img, out, out);
}

namespace reference {

// Serial, non-separable version of ResizeBox that evaluates every overlap
// directly. Kept as the test oracle for the parallel kernel.
SnapshotImage ResizeBox(const SnapshotImage& img, std::size_t out_width, std::size_t out_height);

}  // namespace reference

// Tab expansion and window truncation to cfg.rows x cfg.cols, then the canvas
// resized to output_size_px square.
SnapshotImage RenderSnapshot(const SourceText& text, const RenderConfig& cfg,
                             const GlyphAtlas& atlas);

// RenderSnapshot encoded as PNG.
std::vector<std::uint8_t> Snapshot(const SourceText& text, const RenderConfig& cfg,
                                   const GlyphAtlas& atlas);

}  // namespace snapcode

#endif  // SNAPCODE_RENDER_HPP_
