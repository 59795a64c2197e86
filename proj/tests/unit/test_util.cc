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

#include "test_util.h"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace scenectx::testing {

namespace fs = std::filesystem;

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = fs::temp_directory_path() /
          ("scenectx_test_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter++));
  fs::remove_all(path_);
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

std::string DataPath(const std::string& name) {
  return (fs::path(SCENECTX_TEST_DATA_DIR) / name).string();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
}

std::string Q(const std::string& text) {
  std::string quoted = "'";
  for (char c : text) {
    if (c == '\'') {
      quoted += "'\\''";
    } else {
      quoted += c;
    }
  }
  return quoted + "'";
}

CliResult RunCli(const std::string& args) {
  TempDir capture;
  const std::string out_path = capture.file("stdout");
  const std::string err_path = capture.file("stderr");
  const std::string command = std::string("\"") + SCENECTX_CLI_PATH + "\" " +
                              args + " >\"" + out_path + "\" 2>\"" + err_path +
                              "\"";
  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = ReadFile(out_path);
  result.err = ReadFile(err_path);
  return result;
}

CooccurrenceMatrix RandomMatrix(std::mt19937_64& rng, std::size_t max_scenes,
                                std::size_t max_objects, int max_count) {
  std::uniform_int_distribution<std::size_t> rows(1, max_scenes);
  std::uniform_int_distribution<std::size_t> cols(1, max_objects);
  std::uniform_int_distribution<int> count(0, max_count);
  std::bernoulli_distribution sparse(0.4);
  const std::size_t h = rows(rng);
  const std::size_t n = cols(rng);
  std::vector<std::string> scenes, objects;
  for (std::size_t i = 0; i < h; ++i) scenes.push_back("s" + std::to_string(i));
  for (std::size_t j = 0; j < n; ++j) objects.push_back("o" + std::to_string(j));
  auto m = CooccurrenceMatrix::Zero(scenes, objects, 5);
  for (auto& c : m.counts) c = sparse(rng) ? 0 : count(rng);
  return m;
}

SegMask RandomMask(std::mt19937_64& rng, int width, int height,
                   int num_classes, double ignore_rate) {
  std::uniform_int_distribution<int> cls(0, num_classes - 1);
  std::bernoulli_distribution ignore(ignore_rate);
  SegMask mask{width, height, {}};
  mask.values.resize(static_cast<std::size_t>(width) * height);
  for (auto& v : mask.values) {
    v = ignore(rng) ? 255 : static_cast<std::uint8_t>(cls(rng));
  }
  return mask;
}

}  // namespace scenectx::testing
