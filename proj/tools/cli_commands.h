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

#ifndef SCENECTX_TOOLS_CLI_COMMANDS_H_
#define SCENECTX_TOOLS_CLI_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scenectx/curation.h"
#include "scenectx/recommender.h"
#include "scenectx/synth.h"

namespace scenectx::cli {

// Every path and parameter a subcommand may read. Defaults follow the
// published experiment setup where one exists.
struct RunConfig {
  std::string predictions;
  std::string manifest;
  std::string pool;
  std::string scenes;
  std::string cooc;
  std::string candidates;
  std::string clean_sets;
  std::string pred_dir;
  std::string gt_dir;
  std::string table;
  std::string confusion;
  std::string out = ".";

  int top_k = 5;
  double threshold = kDefaultThreshold;
  int top_n = kDefaultTopN;
  int min_clean_size = kDefaultMinCleanSize;
  int cap = kDefaultCap;
  std::uint64_t seed = 0;
  double tol = 0.05;
  int threads = 1;

  bool strict = false;
  std::string ours;
  std::string baseline;

  SynthConfig synth;
  std::vector<std::string> plants;  // "object:scene:strength"
};

// Each returns the process exit code; errors propagate as scenectx::Error.
int RunCooc(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunRecommend(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunClean(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunAugment(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunEval(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunVerifyTable(const RunConfig& config, std::ostream& out,
                   std::ostream& err);
int RunFigure(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunSynth(const RunConfig& config, std::ostream& out, std::ostream& err);

// Exit code used by `verify-table --strict` when a row fails.
inline constexpr int kVerificationFailed = 3;

}  // namespace scenectx::cli

#endif  // SCENECTX_TOOLS_CLI_COMMANDS_H_
