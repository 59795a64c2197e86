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

#include <cstdio>
#include <random>

#include <gtest/gtest.h>

#include "scenectx/error.h"
#include "scenectx/ingestion.h"
#include "test_util.h"

namespace scenectx {
namespace {

using testing::TempDir;

// Grayscale PNG written directly through libpng, used as a non-indexed input.
void WriteGrayPng(const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  ASSERT_NE(fp, nullptr);
  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  png_init_io(png, fp);
  png_set_IHDR(png, info, 2, 2, 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_byte rows[2][2] = {{0, 0}, {1, 1}};
  png_bytep ptrs[2] = {rows[0], rows[1]};
  png_write_image(png, ptrs);
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  std::fclose(fp);
}

TEST(IndexedMaskTest, TwoByTwoDirectMapping) {
  TempDir dir;
  const SegMask mask{2, 2, {0, 0, 1, 1}};
  WriteIndexedMask(mask, dir.file("m.png"));
  const auto read = ReadIndexedMask(dir.file("m.png"), 21);
  EXPECT_EQ(read.width, 2);
  EXPECT_EQ(read.height, 2);
  EXPECT_EQ(read.values, (std::vector<std::uint8_t>{0, 0, 1, 1}));
}

TEST(IndexedMaskTest, IgnoreIndexIsKept) {
  TempDir dir;
  WriteIndexedMask({3, 1, {0, 255, 2}}, dir.file("m.png"));
  const auto read = ReadIndexedMask(dir.file("m.png"), 21);
  EXPECT_EQ(read.values[1], kIgnoreValue);
}

TEST(IndexedMaskTest, OutOfRangeIndexIsNamed) {
  TempDir dir;
  WriteIndexedMask({2, 1, {0, 200}}, dir.file("m.png"));
  try {
    ReadIndexedMask(dir.file("m.png"), 21);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("invalid index 200"), std::string::npos)
        << e.what();
  }
}

TEST(IndexedMaskTest, NonIndexedAndNonPngAreRejected) {
  TempDir dir;
  WriteGrayPng(dir.file("gray.png"));
  EXPECT_THROW(ReadIndexedMask(dir.file("gray.png"), 21), Error);
  testing::WriteFile(dir.file("text.png"), "not a png at all");
  EXPECT_THROW(ReadIndexedMask(dir.file("text.png"), 21), Error);
  EXPECT_THROW(ReadIndexedMask(dir.file("missing.png"), 21), Error);
}

TEST(IndexedMaskTest, RoundTripIsPixelIdentical) {
  TempDir dir;
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int w = 1 + static_cast<int>(rng() % 70);
    const int h = 1 + static_cast<int>(rng() % 70);
    const auto mask = testing::RandomMask(rng, w, h, 21, 0.1);
    const auto path = dir.file("rt" + std::to_string(trial) + ".png");
    WriteIndexedMask(mask, path);
    const auto once = ReadIndexedMask(path, 21);
    ASSERT_EQ(once, mask);
    WriteIndexedMask(once, path);
    ASSERT_EQ(ReadIndexedMask(path, 21), mask);
  }
}

TEST(IndexedMaskTest, WriterRejectsInconsistentDimensions) {
  TempDir dir;
  EXPECT_THROW(WriteIndexedMask({2, 2, {0, 1, 2}}, dir.file("bad.png")), Error);
}

}  // namespace
}  // namespace scenectx
