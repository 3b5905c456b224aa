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

#ifndef SNAPCODE_PNG_HPP_
#define SNAPCODE_PNG_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "snapcode/image.hpp"

namespace snapcode {

// 8-bit grayscale, no alpha, no interlacing, filter "none" on every row, zlib
// level 6, no ancillary chunks. Identical images give identical bytes.
std::vector<std::uint8_t> EncodePng(const SnapshotImage& img);

// Decodes any non-paletted 8-bit grayscale PNG. Throws Error on anything else
// or on corrupt data.
SnapshotImage DecodePng(std::span<const std::uint8_t> bytes);

// Throws IoFailure.
void WriteFile(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> ReadFileBytes(const std::filesystem::path& path);

}  // namespace snapcode

#endif  // SNAPCODE_PNG_HPP_
