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
#include <cstdint>

#include "snapcode/error.hpp"
#include "snapcode/render.hpp"

namespace snapcode::reference {
namespace {

// Overlap of [a_lo, a_hi) and [b_lo, b_hi), zero when disjoint.
std::uint64_t Overlap(std::uint64_t a_lo, std::uint64_t a_hi, std::uint64_t b_lo,
                      std::uint64_t b_hi) {
  const std::uint64_t lo = std::max(a_lo, b_lo);
  const std::uint64_t hi = std::min(a_hi, b_hi);
  return hi > lo ? hi - lo : 0;
}

}  // namespace

SnapshotImage ResizeBox(const SnapshotImage& img, std::size_t out_width, std::size_t out_height) {
  if (img.empty()) throw InvalidConfig("cannot resize an empty image");
  if (out_width == 0 || out_height == 0) throw InvalidConfig("output size must be >= 1");

  const std::uint64_t w = img.width, h = img.height;
  const std::uint64_t denom = w * h;
  SnapshotImage out(out_width, out_height, 0);
  for (std::uint64_t oy = 0; oy < out_height; ++oy) {
    // Only rows/columns that can overlap are visited; the weight itself is
    // recomputed from scratch for every source pixel.
    const std::uint64_t y_first = oy * h / out_height;
    const std::uint64_t y_last = std::min(h - 1, ((oy + 1) * h) / out_height);
    for (std::uint64_t ox = 0; ox < out_width; ++ox) {
      const std::uint64_t x_first = ox * w / out_width;
      const std::uint64_t x_last = std::min(w - 1, ((ox + 1) * w) / out_width);
      std::uint64_t acc = 0;
      for (std::uint64_t sy = y_first; sy <= y_last; ++sy) {
        const std::uint64_t wy =
            Overlap(oy * h, (oy + 1) * h, sy * out_height, (sy + 1) * out_height);
        if (wy == 0) continue;
        for (std::uint64_t sx = x_first; sx <= x_last; ++sx) {
          const std::uint64_t wx =
              Overlap(ox * w, (ox + 1) * w, sx * out_width, (sx + 1) * out_width);
          acc += wx * wy * img.at(sx, sy);
        }
      }
      out.at(ox, oy) = static_cast<std::uint8_t>(std::min<std::uint64_t>(
          255, (2 * acc + denom) / (2 * denom)));
    }
  }
  return out;
}

}  // namespace snapcode::reference
