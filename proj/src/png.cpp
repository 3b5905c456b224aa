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

#include "snapcode/png.hpp"

#include <png.h>

#include <algorithm>
#include <csetjmp>
#include <fstream>
#include <iterator>
#include <string>

#include "snapcode/error.hpp"

namespace snapcode {
namespace {

// libpng reports errors with longjmp. The Encode/Decode helpers below keep
// every object with a destructor in the caller's frame so the jump never
// skips one.

void AppendBytes(png_structp png, png_bytep data, png_size_t len) {
  auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + len);
}

void NoFlush(png_structp) {}

void SilentWarning(png_structp, png_const_charp) {}

bool EncodeInto(const SnapshotImage& img, png_bytepp rows, std::vector<std::uint8_t>* out) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, SilentWarning);
  if (png == nullptr) return false;
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    return false;
  }
  png_set_write_fn(png, out, AppendBytes, NoFlush);
  png_set_IHDR(png, info, static_cast<png_uint_32>(img.width),
               static_cast<png_uint_32>(img.height), 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_set_filter(png, PNG_FILTER_TYPE_BASE, PNG_FILTER_NONE);
  png_set_compression_level(png, 6);
  png_write_info(png, info);
  png_write_image(png, rows);
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return true;
}

struct ReadCursor {
  const std::uint8_t* data;
  std::size_t size;
  std::size_t pos;
};

void ReadBytes(png_structp png, png_bytep dst, png_size_t len) {
  auto* cur = static_cast<ReadCursor*>(png_get_io_ptr(png));
  if (len > cur->size - cur->pos) png_error(png, "truncated PNG stream");
  std::copy_n(cur->data + cur->pos, len, dst);
  cur->pos += len;
}

enum class DecodeStatus { kOk, kCorrupt, kUnsupported };

DecodeStatus DecodeInto(ReadCursor* cursor, SnapshotImage* img, std::vector<png_bytep>* rows) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, SilentWarning);
  if (png == nullptr) return DecodeStatus::kCorrupt;
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    return DecodeStatus::kCorrupt;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    return DecodeStatus::kCorrupt;
  }
  png_set_read_fn(png, cursor, ReadBytes);
  png_read_info(png, info);
  if (png_get_color_type(png, info) != PNG_COLOR_TYPE_GRAY ||
      png_get_bit_depth(png, info) != 8) {
    png_destroy_read_struct(&png, &info, nullptr);
    return DecodeStatus::kUnsupported;
  }
  png_set_interlace_handling(png);
  png_read_update_info(png, info);
  img->width = png_get_image_width(png, info);
  img->height = png_get_image_height(png, info);
  img->pixels.assign(img->width * img->height, 0);
  rows->resize(img->height);
  for (std::size_t y = 0; y < img->height; ++y) (*rows)[y] = img->pixels.data() + y * img->width;
  png_read_image(png, rows->data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return DecodeStatus::kOk;
}

}  // namespace

std::vector<std::uint8_t> EncodePng(const SnapshotImage& img) {
  if (img.empty() || img.pixels.size() != img.width * img.height) {
    throw Error("cannot encode an empty or inconsistent image");
  }
  std::vector<png_bytep> rows(img.height);
  for (std::size_t y = 0; y < img.height; ++y) {
    rows[y] = const_cast<png_bytep>(img.pixels.data() + y * img.width);
  }
  std::vector<std::uint8_t> out;
  if (!EncodeInto(img, rows.data(), &out)) throw Error("PNG encoding failed");
  return out;
}

SnapshotImage DecodePng(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0) throw Error("not a PNG stream");
  ReadCursor cursor{bytes.data(), bytes.size(), 0};
  SnapshotImage img;
  std::vector<png_bytep> rows;
  switch (DecodeInto(&cursor, &img, &rows)) {
    case DecodeStatus::kOk:
      return img;
    case DecodeStatus::kUnsupported:
      throw Error("only 8-bit grayscale PNG is supported");
    case DecodeStatus::kCorrupt:
      break;
  }
  throw Error("corrupt PNG stream");
}

void WriteFile(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoFailure("write failed: " + path.string());
}

std::vector<std::uint8_t> ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace snapcode
