/* Copyright 2026 The scenectx Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <png.h>

#include <array>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>

#include "scenectx/error.h"
#include "scenectx/ingestion.h"
#include "scenectx/kernels/mask_kernels.h"

namespace scenectx {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct PngMessage {
  char text[256] = {};
};

void OnPngError(png_structp png, png_const_charp message) {
  auto* sink = static_cast<PngMessage*>(png_get_error_ptr(png));
  std::snprintf(sink->text, sizeof(sink->text), "%s", message);
  png_longjmp(png, 1);
}

void OnPngWarning(png_structp, png_const_charp) {}

struct RawIndexed {
  png_uint_32 width = 0;
  png_uint_32 height = 0;
  int bit_depth = 0;
  int color_type = 0;
  std::vector<std::uint8_t> pixels;
  std::vector<png_bytep> rows;
};

// No C++ objects are constructed between setjmp and the libpng calls that
// may longjmp back; `raw` lives in the caller.
bool ReadRaw(std::FILE* fp, RawIndexed* raw, PngMessage* message) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, message,
                                           OnPngError, OnPngWarning);
  if (png == nullptr) return false;
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    return false;
  }
  png_init_io(png, fp);
  png_read_info(png, info);
  raw->width = png_get_image_width(png, info);
  raw->height = png_get_image_height(png, info);
  raw->bit_depth = png_get_bit_depth(png, info);
  raw->color_type = png_get_color_type(png, info);
  if (raw->color_type != PNG_COLOR_TYPE_PALETTE || raw->bit_depth != 8) {
    png_destroy_read_struct(&png, &info, nullptr);
    return true;
  }
  raw->pixels.resize(static_cast<std::size_t>(raw->width) * raw->height);
  raw->rows.resize(raw->height);
  for (png_uint_32 y = 0; y < raw->height; ++y) {
    raw->rows[y] = raw->pixels.data() + static_cast<std::size_t>(y) * raw->width;
  }
  png_read_image(png, raw->rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return true;
}

std::array<png_color, 256> VocPalette() {
  std::array<png_color, 256> palette{};
  for (int i = 0; i < 256; ++i) {
    int r = 0, g = 0, b = 0, c = i;
    for (int j = 0; j < 8; ++j) {
      r |= ((c >> 0) & 1) << (7 - j);
      g |= ((c >> 1) & 1) << (7 - j);
      b |= ((c >> 2) & 1) << (7 - j);
      c >>= 3;
    }
    palette[i] = {static_cast<png_byte>(r), static_cast<png_byte>(g),
                  static_cast<png_byte>(b)};
  }
  return palette;
}

bool WriteRaw(std::FILE* fp, const SegMask& mask,
              const std::array<png_color, 256>& palette,
              std::vector<png_bytep>& rows, PngMessage* message) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, message,
                                            OnPngError, OnPngWarning);
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
  png_init_io(png, fp);
  png_set_IHDR(png, info, static_cast<png_uint_32>(mask.width),
               static_cast<png_uint_32>(mask.height), 8, PNG_COLOR_TYPE_PALETTE,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_set_PLTE(png, info, palette.data(), static_cast<int>(palette.size()));
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return true;
}

}  // namespace

SegMask ReadIndexedMask(const std::string& path, int num_classes) {
  if (num_classes < 1 || num_classes > 255) {
    throw Error("ingestion", "mask class count must be in [1, 255]");
  }
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) throw Error("ingestion", "cannot open mask \"" + path + "\"");
  png_byte signature[8] = {};
  if (std::fread(signature, 1, 8, fp.get()) != 8 ||
      png_sig_cmp(signature, 0, 8) != 0) {
    throw Error("ingestion", "\"" + path + "\" is not a PNG file");
  }
  std::rewind(fp.get());

  RawIndexed raw;
  PngMessage message;
  if (!ReadRaw(fp.get(), &raw, &message)) {
    throw Error("ingestion", "\"" + path + "\": " + message.text);
  }
  if (raw.color_type != PNG_COLOR_TYPE_PALETTE || raw.bit_depth != 8) {
    throw Error("ingestion",
                "\"" + path + "\" is not an 8-bit indexed-color PNG");
  }
  SegMask mask;
  mask.width = static_cast<int>(raw.width);
  mask.height = static_cast<int>(raw.height);
  mask.values = std::move(raw.pixels);
  const std::size_t bad =
      kernels::FindInvalidIndex(mask.values, num_classes, /*allow_ignore=*/true);
  if (bad != kernels::kNotFound) {
    throw Error("ingestion", "\"" + path + "\": invalid index " +
                                 std::to_string(mask.values[bad]) +
                                 " at pixel " + std::to_string(bad));
  }
  return mask;
}

void WriteIndexedMask(const SegMask& mask, const std::string& path) {
  if (mask.width <= 0 || mask.height <= 0 ||
      mask.values.size() != static_cast<std::size_t>(mask.width) * mask.height) {
    throw Error("ingestion", "mask dimensions do not match its value count");
  }
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) throw Error("ingestion", "cannot open \"" + path + "\" for writing");
  static const std::array<png_color, 256> kPalette = VocPalette();
  // libpng takes non-const row pointers but only reads through them here.
  std::vector<png_bytep> rows(static_cast<std::size_t>(mask.height));
  auto* base = const_cast<std::uint8_t*>(mask.values.data());
  for (int y = 0; y < mask.height; ++y) {
    rows[y] = base + static_cast<std::size_t>(y) * mask.width;
  }
  PngMessage message;
  if (!WriteRaw(fp.get(), mask, kPalette, rows, &message)) {
    throw Error("ingestion", "\"" + path + "\": " + message.text);
  }
}

}  // namespace scenectx
