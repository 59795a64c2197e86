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

#include <iostream>

#include "CLI11.hpp"
#include "cli_commands.h"
#include "scenectx/error.h"

int main(int argc, char** argv) {
  using scenectx::cli::RunConfig;
  RunConfig config;

  CLI::App app{"Scene-context recommendation and segmentation evaluation"};
  app.set_config("--config", "", "key=value configuration file");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--predictions", config.predictions, "Scene predictions (TSV)");
  app.add_option("--manifest", config.manifest, "Dataset manifest");
  app.add_option("--pool", config.pool, "Scene-pool metadata (TSV)");
  app.add_option("--scenes", config.scenes, "Scene vocabulary, one per line");
  app.add_option("--cooc", config.cooc, "Co-occurrence CSV");
  app.add_option("--candidates", config.candidates, "Candidates CSV");
  app.add_option("--clean-sets,--clean_sets", config.clean_sets,
                 "Clean-set file written by `clean`");
  app.add_option("--pred-dir,--pred_dir", config.pred_dir,
                 "Directory of predicted masks");
  app.add_option("--gt-dir,--gt_dir", config.gt_dir,
                 "Directory of ground-truth masks");
  app.add_option("--table", config.table, "Published result table");
  app.add_option("--confusion", config.confusion, "Confusion-count CSV");
  app.add_option("--out", config.out, "Output directory")->capture_default_str();

  app.add_option("--top-k,--top_k", config.top_k, "Top-k scene predictions")
      ->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--threshold-T,--threshold_T", config.threshold,
                 "Exclusivity threshold T")
      ->capture_default_str()->check(CLI::Range(0.0, 1.0));
  app.add_option("--top-n,--top_n", config.top_n, "Number of candidates n")
      ->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--min-clean-size,--min_clean_size", config.min_clean_size,
                 "Minimum |G_i| for a target to be accepted")
      ->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--cap", config.cap, "Per-target sample cap")
      ->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
  app.add_option("--tol", config.tol, "Table verification tolerance")
      ->capture_default_str();
  app.add_option("--threads", config.threads, "Worker threads")
      ->capture_default_str()->check(CLI::PositiveNumber);

  auto* cooc = app.add_subcommand("cooc", "Build the scene/object co-occurrence matrix");
  auto* recommend = app.add_subcommand("recommend", "Score scenes and select candidates");
  auto* clean = app.add_subcommand("clean", "Collect and clean candidate scene images");
  auto* augment = app.add_subcommand("augment", "Sample clean sets and emit the augmented manifest");
  auto* eval = app.add_subcommand("eval", "Confusion matrix, per-class IoU and mIoU");
  auto* verify = app.add_subcommand("verify-table", "Recompute published table means");
  verify->add_flag("--strict", config.strict, "Exit 3 when a row fails");
  verify->add_option("--ours", config.ours, "Row to compare");
  verify->add_option("--baseline", config.baseline, "Baseline row");
  auto* figure = app.add_subcommand("figure", "Normalized confusion CSV and SVG heatmap");
  auto* synth = app.add_subcommand("synth", "Write a synthetic corpus with planted scenes");
  synth->add_option("--n-objects", config.synth.n_objects)->capture_default_str();
  synth->add_option("--n-scenes", config.synth.n_scenes)->capture_default_str();
  synth->add_option("--n-images", config.synth.n_images, "Images per object")
      ->capture_default_str();
  synth->add_option("--pool-size", config.synth.pool_size,
                    "Pool images per planted scene")->capture_default_str();
  synth->add_option("--contamination", config.synth.pool_contamination)
      ->capture_default_str();
  synth->add_option("--plant", config.plants, "object:scene:strength (repeatable)");

  CLI11_PARSE(app, argc, argv);

  using namespace scenectx::cli;
  try {
    if (cooc->parsed()) return RunCooc(config, std::cout, std::cerr);
    if (recommend->parsed()) return RunRecommend(config, std::cout, std::cerr);
    if (clean->parsed()) return RunClean(config, std::cout, std::cerr);
    if (augment->parsed()) return RunAugment(config, std::cout, std::cerr);
    if (eval->parsed()) return RunEval(config, std::cout, std::cerr);
    if (verify->parsed()) return RunVerifyTable(config, std::cout, std::cerr);
    if (figure->parsed()) return RunFigure(config, std::cout, std::cerr);
    if (synth->parsed()) return RunSynth(config, std::cout, std::cerr);
  } catch (const scenectx::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
