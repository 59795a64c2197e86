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

#ifndef SCENECTX_ERROR_H_
#define SCENECTX_ERROR_H_

#include <stdexcept>
#include <string>

namespace scenectx {

// All recoverable failures in the library are reported as Error. The stage
// tag names the pipeline step ("ingestion", "cooc", ...) so that CLI
// messages can point at the failing step.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
  Error(std::string stage, const std::string& message)
      : std::runtime_error(stage + ": " + message), stage_(std::move(stage)) {}

  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace scenectx

#endif  // SCENECTX_ERROR_H_
