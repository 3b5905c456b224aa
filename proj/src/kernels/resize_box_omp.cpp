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

#include <cstdint>
#include <vector>

#include "snapcode/error.hpp"
#include "snapcode/render.hpp"

namespace snapcode {
namespace {

// Source taps of one output pixel along one axis. Weights are overlap lengths
// in units where a source pixel is `out` long and an output pixel `in` long,
// so they always sum to `in`.
struct AxisTaps {
  std::size_t first = 0;
  std::vector<std::uint64_t> weights;
};

std::vector<AxisTaps> ComputeTaps(std::size_t in, std::size_t out) {
  std::vector<AxisTaps> taps(out);
  for (std::size_t o = 0; o < out; ++o) {
    const std::uint64_t lo = static_cast<std::uint64_t>(o) * in;
    const std::uint64_t hi = lo + in;
    const std::size_t first = lo / out;
    const std::size_t last = (hi - 1) / out;
    taps[o].first = first;
    for (std::size_t i = first; i <= last; ++i) {
      const std::uint64_t s_lo = static_cast<std::uint64_t>(i) * out;
      const std::uint64_t s_hi = s_lo + out;
      taps[o].weights.push_back(std::min(hi, s_hi) - std::max(lo, s_lo));
    }
  }
  return taps;
}

}  // namespace

SnapshotImage ResizeBox(const SnapshotImage& img, std::size_t out_width, std::size_t out_height) {
  if (img.empty()) throw InvalidConfig("cannot resize an empty image");
  if (out_width == 0 || out_height == 0) throw InvalidConfig("output size must be >= 1");

  const auto x_taps = ComputeTaps(img.width, out_width);
  const auto y_taps = ComputeTaps(img.height, out_height);
  const std::uint64_t denom = static_cast<std::uint64_t>(img.width) * img.height;

  // Horizontal pass keeps unnormalised sums so no rounding happens until the end.
  std::vector<std::uint64_t> partial(img.height * out_width);
  const auto rows = static_cast<std::int64_t>(img.height);
#pragma omp parallel for schedule(static)
  for (std::int64_t y = 0; y < rows; ++y) {
    const std::uint8_t* src = img.pixels.data() + y * img.width;
    std::uint64_t* dst = partial.data() + y * out_width;
    for (std::size_t ox = 0; ox < out_width; ++ox) {
      const AxisTaps& t = x_taps[ox];
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < t.weights.size(); ++k) acc += t.weights[k] * src[t.first + k];
      dst[ox] = acc;
    }
  }

  SnapshotImage out(out_width, out_height, 0);
  const auto out_rows = static_cast<std::int64_t>(out_height);
#pragma omp parallel for schedule(static)
  for (std::int64_t oy = 0; oy < out_rows; ++oy) {
    const AxisTaps& t = y_taps[oy];
    for (std::size_t ox = 0; ox < out_width; ++ox) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < t.weights.size(); ++k) {
        acc += t.weights[k] * partial[(t.first + k) * out_width + ox];
      }
      const std::uint64_t v = (2 * acc + denom) / (2 * denom);
      out.pixels[oy * out_width + ox] = static_cast<std::uint8_t>(v > 255 ? 255 : v);
    }
  }
  return out;
}

}  // namespace snapcode
