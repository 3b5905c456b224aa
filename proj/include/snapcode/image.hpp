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

#ifndef SNAPCODE_IMAGE_HPP_
#define SNAPCODE_IMAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace snapcode {

// 8-bit grayscale raster, row-major.
struct SnapshotImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;

  SnapshotImage() = default;
  SnapshotImage(std::size_t w, std::size_t h, std::uint8_t fill = 255)
      : width(w), height(h), pixels(w * h, fill) {}

  std::uint8_t at(std::size_t x, std::size_t y) const { return pixels[y * width + x]; }
  std::uint8_t& at(std::size_t x, std::size_t y) { return pixels[y * width + x]; }

  bool empty() const { return pixels.empty(); }

  friend bool operator==(const SnapshotImage&, const SnapshotImage&) = default;
};

}  // namespace snapcode

#endif  // SNAPCODE_IMAGE_HPP_
