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

#ifndef SCENECTX_TEXT_UTIL_H_
#define SCENECTX_TEXT_UTIL_H_

#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace scenectx {

std::vector<std::string> Split(std::string_view text, char delimiter);
std::string Join(const std::vector<std::string>& parts, std::string_view sep);
std::string_view Trim(std::string_view text);

// Strict numeric parsing: the whole field must be consumed.
bool ParseDouble(std::string_view text, double* value);

std::ifstream OpenForRead(const std::string& path, const char* stage);
std::ofstream OpenForWrite(const std::string& path, const char* stage);

// Shortest representation that parses back to the same double.
std::string FormatDouble(double value);
// Fixed notation with `digits` decimals.
std::string FormatFixed(double value, int digits);

}  // namespace scenectx

#endif  // SCENECTX_TEXT_UTIL_H_
