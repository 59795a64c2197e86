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

// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "recommender_oracle.h"
#include "scenectx/cooccurrence.h"
#include "scenectx/error.h"
#include "scenectx/evaluation.h"
#include "scenectx/ingestion.h"
#include "scenectx/label_space.h"
#include "scenectx/manifest.h"
#include "scenectx/pipeline.h"
#include "scenectx/recommender.h"
#include "scenectx/synth.h"
#include "scenectx/text_util.h"
#include "test_util.h"

namespace scenectx {
namespace {

namespace fs = std::filesystem;
using testing::Q;

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records the first failure message; later ones are counted only.
  void Check(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

int failures = 0;

void Criterion(int id, const std::string& name, double limit_s,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.pass = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && elapsed >= limit_s) {
    outcome.pass = false;
    outcome.detail += " [runtime " + FormatFixed(elapsed, 3) + " s >= " +
                      FormatFixed(limit_s, 0) + " s]";
  }
  if (!outcome.pass) ++failures;
  std::printf("%s  [%d] %-34s %7.3f s  %s\n", outcome.pass ? "PASS" : "FAIL", id,
              name.c_str(), elapsed, outcome.detail.c_str());
  std::fflush(stdout);
}

// ---------------------------------------------------------------------------

Outcome TableMeans() {
  Outcome o;
  std::string summary;
  for (const char* file : {"table1_val.tsv", "table2_test.tsv"}) {
    const auto table = ParsePublishedTableFile(testing::DataPath(file));
    const auto report = VerifyPublishedMeans(table, 0.05);
    summary += std::string(summary.empty() ? "" : "; ") + file + " " +
               std::to_string(report.passed()) + "/" +
               std::to_string(report.rows.size());
    for (const auto& r : report.rows) {
      if (!r.pass) {
        summary += " [" + r.method + ": " + FormatFixed(r.recomputed_mean, 4) +
                   " vs " + FormatFixed(r.published_mean, 1) + "]";
      }
    }
    o.pass = o.pass && report.all_pass();
    const std::size_t expected_rows = std::string(file) == "table1_val.tsv" ? 7 : 6;
    o.pass = o.pass && report.rows.size() == expected_rows;
    // Reference example: the SEC validation row.
    if (std::string(file) == "table1_val.tsv") {
      for (const auto& r : report.rows) {
        if (r.method == "SEC [15]" &&
            (std::abs(r.recomputed_mean - 50.65) > 0.005 || !r.pass)) {
          o.pass = false;
        }
      }
    }
  }
  o.detail = summary;
  return o;
}

Outcome Deltas() {
  Outcome o;
  const auto table = ParsePublishedTableFile(testing::DataPath("table1_val.tsv"));
  const auto d = ComputeDeltas(ToResultRow(table, "Ours"), ToResultRow(table, "SEC-web"));
  auto delta = [&](const std::string& name) {
    const auto it = std::find(d.class_names.begin(), d.class_names.end(), name);
    return d.deltas.at(it - d.class_names.begin());
  };
  const double boat = delta("boat"), train = delta("train");
  o.Check(std::abs(boat - 26.7) <= 0.05, "boat delta off");
  o.Check(std::abs(train - 20.2) <= 0.05, "train delta off");
  o.Check(d.max_class == "boat", "max delta is not boat");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("boat +") +
              FormatFixed(boat, 2) + ", train +" + FormatFixed(train, 2);
  return o;
}

Outcome OracleEquivalence() {
  Outcome o;
  std::mt19937_64 rng(20260301);
  const double thresholds[] = {0.1, 0.3, 0.5};
  std::size_t entries = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto m = testing::RandomMatrix(rng, 20, 10, 100);
    const double t = thresholds[rng() % 3];
    const int n = 1 + static_cast<int>(rng() % 25);
    const auto main = SelectCandidates(ScoreScenes(m, t), n);
    const auto ref = oracle::OracleScoreScenes(m, t, n);
    const std::string where = "trial " + std::to_string(trial);
    if (main.entries.size() != ref.entries.size()) {
      o.Check(false, where + ": size mismatch");
      continue;
    }
    for (std::size_t r = 0; r < ref.entries.size(); ++r) {
      const auto& a = main.entries[r];
      const auto& b = ref.entries[r];
      o.Check(a.scene_id == b.scene_id && a.object_id == b.object_id,
              where + ": order mismatch");
      o.Check(std::abs(a.score - b.score) <= 1e-12 &&
                  std::abs(a.exclusivity - b.exclusivity) <= 1e-12,
              where + ": score mismatch");
    }
    entries += ref.entries.size();
  }
  if (o.pass) o.detail = "1000/1000 matrices, " + std::to_string(entries) + " ranked entries";
  return o;
}

Outcome Invariances() {
  Outcome o;
  std::mt19937_64 rng(20260302);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = testing::RandomMatrix(rng, 20, 10, 100);
    auto scaled = m;
    const std::uint64_t factor = 2 + rng() % 1000;
    for (auto& c : scaled.counts) c *= factor;
    const auto a = SelectCandidates(ScoreScenes(m, 0.3), 11);
    const auto b = SelectCandidates(ScoreScenes(scaled, 0.3), 11);
    bool same = a.entries.size() == b.entries.size();
    for (std::size_t r = 0; same && r < a.entries.size(); ++r) {
      same = a.entries[r].scene_id == b.entries[r].scene_id &&
             a.entries[r].object_id == b.entries[r].object_id &&
             std::abs(a.entries[r].score - b.entries[r].score) <= 1e-12;
    }
    o.Check(same, "scale invariance broken at trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = testing::RandomMatrix(rng, 20, 10, 100);
    double t1 = (rng() % 1000) / 1000.0, t2 = (rng() % 1000) / 1000.0;
    if (t1 > t2) std::swap(t1, t2);
    std::vector<std::pair<std::size_t, std::size_t>> low, high;
    for (const auto& e : ScoreScenes(m, t1).entries) low.push_back({e.scene_id, e.object_id});
    for (const auto& e : ScoreScenes(m, t2).entries) high.push_back({e.scene_id, e.object_id});
    std::sort(low.begin(), low.end());
    std::sort(high.begin(), high.end());
    o.Check(std::includes(low.begin(), low.end(), high.begin(), high.end()),
            "threshold monotonicity broken at trial " + std::to_string(trial));
  }
  if (o.pass) o.detail = "200 scale + 200 threshold trials";
  return o;
}

Outcome PlantedRecovery() {
  Outcome o;
  int recovered = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SynthConfig c;
    c.n_images = 500;
    c.pool_size = 2000;
    c.pool_contamination = 0.05;
    c.seed = seed;
    c.affinity[3] = {41, 0.95};   // object_03 <- scene_041
    c.affinity[18] = {277, 0.95};  // object_18 <- scene_277
    const auto corpus = GenerateCorpus(c);
    PipelineParams p;
    p.threshold = 0.3;
    p.top_n = 11;
    p.seed = seed;
    const auto r = RunPipeline(corpus.predictions, corpus.manifest, corpus.scenes,
                               corpus.pool, p);
    const std::string where = "seed " + std::to_string(seed);
    bool ok = corpus.expected.size() == 2;
    for (const auto& [scene, object] : corpus.expected) {
      ok = ok && std::any_of(r.candidates.entries.begin(), r.candidates.entries.end(),
                             [&](const SceneScoreEntry& e) {
                               return r.candidates.scene_name(e) == scene &&
                                      r.candidates.object_name(e) == object;
                             });
    }
    o.Check(ok, where + ": planted pair missing from candidates");
    std::size_t added = 0;
    int accepted = 0;
    for (const auto& t : r.plan.targets) {
      if (t.object != "object_03" && t.object != "object_18") continue;
      accepted += t.accepted;
      added += std::min<std::size_t>(t.cleaned.size(), p.cap);
    }
    o.Check(accepted == 2, where + ": plan did not accept both targets");
    o.Check(r.augmented.space.num_classes() == corpus.manifest.space.num_classes() + 2,
            where + ": class count");
    o.Check(r.augmented.records.size() == corpus.manifest.records.size() + added &&
                r.plan.TotalSampled() == added,
            where + ": added record count");
    recovered += ok;
  }
  o.detail = std::to_string(recovered) + "/50 seeds recovered both pairs" +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome ConfusionProperties() {
  Outcome o;
  ConfusionMatrix hand({"c0", "c1"});
  hand.Accumulate(SegMask{2, 2, {0, 1, 1, 1}}, SegMask{2, 2, {0, 0, 1, 1}});
  o.Check(hand.at(0, 0) == 1 && hand.at(0, 1) == 1 && hand.at(1, 0) == 0 &&
              hand.at(1, 1) == 2,
          "hand counts");
  const auto iou = ComputeIoU(hand);
  o.Check(*iou.per_class[0] == 0.5 && *iou.per_class[1] == 2.0 / 3.0 &&
              *iou.mean_iou == (0.5 + 2.0 / 3.0) / 2.0 &&
              std::abs(*iou.mean_iou - 0.5833) < 1e-4,
          "hand IoU");

  std::mt19937_64 rng(20260306);
  std::size_t rows = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int c = 2 + static_cast<int>(rng() % 22);
    ConfusionMatrix cm(std::vector<std::string>(VocClassNames().begin(),
                                                VocClassNames().begin() + std::min(c, 21)));
    for (int i = 0; i < cm.num_classes(); ++i) {
      if (rng() % 6 == 0) continue;
      for (int j = 0; j < cm.num_classes(); ++j) {
        cm.set(i, j, rng() % 4 == 0 ? rng() % 100000000 : rng() % 10);
      }
    }
    const auto n = NormalizeConfusion(cm);
    for (int i = 0; i < cm.num_classes(); ++i) {
      if (!n.row_defined[i]) continue;
      double sum = 0.0;
      for (int j = 0; j < cm.num_classes(); ++j) sum += *n.at(i, j);
      worst = std::max(worst, std::abs(sum - 1.0));
      ++rows;
    }
  }
  o.Check(worst <= 1e-9, "row sum off by " + FormatDouble(worst));
  if (o.pass) {
    o.detail = "hand 2x2 exact; " + std::to_string(rows) +
               " defined rows, max |sum-1| = " + FormatDouble(worst);
  }
  return o;
}

Outcome IdentityEvaluation() {
  Outcome o;
  testing::TempDir dir;
  fs::create_directories(dir.file("gt"));
  fs::create_directories(dir.file("pred"));
  std::mt19937_64 rng(20260307);
  std::uint64_t non_ignored = 0;
  std::vector<bool> present(21, false);
  for (int i = 0; i < 50; ++i) {
    const int w = 4 + static_cast<int>(rng() % 20), h = 4 + static_cast<int>(rng() % 20);
    const auto gt = testing::RandomMask(rng, w, h, 21, 0.1);
    auto pred = gt;
    // Ignored pixels still need a prediction; any class will do.
    for (auto& v : pred.values) {
      if (v == kIgnoreValue) v = static_cast<std::uint8_t>(rng() % 21);
    }
    for (auto v : gt.values) {
      if (v != kIgnoreValue) {
        ++non_ignored;
        present[v] = true;
      }
    }
    char name[32];
    std::snprintf(name, sizeof(name), "/m%02d.png", i);
    WriteIndexedMask(gt, dir.file("gt") + name);
    WriteIndexedMask(pred, dir.file("pred") + name);
  }
  const std::string out = dir.file("eval");
  const auto r = testing::RunCli("eval --gt-dir " + Q(dir.file("gt")) + " --pred-dir " +
                                 Q(dir.file("pred")) + " --out " + Q(out));
  o.Check(r.exit_code == 0, "eval exited " + std::to_string(r.exit_code) + ": " + r.err);
  if (!o.pass) return o;
  o.Check(r.out.find("mIoU: 1.0000") != std::string::npos, "mIoU line missing");

  const auto counts = ReadConfusionCsvFile(out + "/confusion.csv");
  o.Check(counts.total() == non_ignored,
          "evaluated " + std::to_string(counts.total()) + " pixels, expected " +
              std::to_string(non_ignored));
  const auto iou = ComputeIoU(counts);
  for (int c = 0; c < 21; ++c) {
    if (present[c]) o.Check(iou.per_class[c] && *iou.per_class[c] == 1.0, "class IoU != 1");
  }
  o.Check(iou.mean_iou && *iou.mean_iou == 1.0, "mIoU != 1");
  if (o.pass) {
    o.detail = "50 masks, " + std::to_string(non_ignored) +
               " non-ignored pixels counted, mIoU 1.0";
  }
  return o;
}

Outcome ParallelDeterminism() {
  Outcome o;
  std::mt19937_64 rng(20260308);

  SynthConfig c;
  c.n_images = 150;
  c.pool_size = 100;
  c.affinity[2] = {5, 0.9};
  auto corpus = GenerateCorpus(c);
  const auto ref = BuildCooccurrence(corpus.predictions, corpus.manifest, corpus.scenes, 5, 1);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(corpus.predictions.begin(), corpus.predictions.end(), rng);
    std::shuffle(corpus.manifest.records.begin(), corpus.manifest.records.end(), rng);
    o.Check(BuildCooccurrence(corpus.predictions, corpus.manifest, corpus.scenes, 5, 4) == ref,
            "co-occurrence differs with 4 threads");
    o.Check(BuildCooccurrence(corpus.predictions, corpus.manifest, corpus.scenes, 5, 1) == ref,
            "co-occurrence differs after shuffling");
    const std::size_t cut = rng() % corpus.manifest.records.size();
    DatasetManifest a = corpus.manifest, b = corpus.manifest;
    a.records.resize(cut);
    b.records.erase(b.records.begin(), b.records.begin() + cut);
    o.Check(MergeCooccurrence(
                BuildCooccurrence(corpus.predictions, a, corpus.scenes, 5, 1),
                BuildCooccurrence(corpus.predictions, b, corpus.scenes, 5, 4)) == ref,
            "partitioned co-occurrence differs");
  }

  testing::TempDir dir;
  std::vector<MaskPairPaths> pairs;
  for (int i = 0; i < 40; ++i) {
    MaskPairPaths p{dir.file("p" + std::to_string(i) + ".png"),
                    dir.file("g" + std::to_string(i) + ".png")};
    WriteIndexedMask(testing::RandomMask(rng, 16, 12, 21, 0.0), p.pred);
    WriteIndexedMask(testing::RandomMask(rng, 16, 12, 21, 0.05), p.gt);
    pairs.push_back(p);
  }
  const auto one = EvaluateMaskFiles(pairs, VocClassNames(), 1);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    o.Check(EvaluateMaskFiles(pairs, VocClassNames(), 4) == one,
            "confusion differs with 4 threads");
    const std::size_t cut = rng() % pairs.size();
    auto left = EvaluateMaskFiles({pairs.begin(), pairs.begin() + cut}, VocClassNames(), 1);
    left.Merge(EvaluateMaskFiles({pairs.begin() + cut, pairs.end()}, VocClassNames(), 4));
    o.Check(left == one, "partitioned confusion differs");
  }

  // Same check through the command line.
  WriteCorpus(corpus, dir.file("corpus"));
  std::string files[2];
  for (int i = 0; i < 2; ++i) {
    const std::string threads = i == 0 ? "1" : "4";
    const std::string out = dir.file("cli" + threads);
    const auto r = testing::RunCli(
        "cooc --threads " + threads + " --predictions " +
        Q(dir.file("corpus") + "/predictions.tsv") + " --scenes " +
        Q(dir.file("corpus") + "/scenes.txt") + " --manifest " +
        Q(dir.file("corpus") + "/manifest.tsv") + " --out " + Q(out));
    o.Check(r.exit_code == 0, "cooc failed: " + r.err);
    files[i] = testing::ReadFile(out + "/" + kCooccurrenceFile);
  }
  o.Check(files[0] == files[1], "CLI --threads 1/4 co-occurrence files differ");
  if (o.pass) o.detail = "co-occurrence and confusion bit-identical across shards/threads";
  return o;
}

Outcome RoundTrips() {
  Outcome o;
  std::mt19937_64 rng(20260309);
  for (int trial = 0; trial < 100; ++trial) {
    DatasetManifest m;
    std::vector<std::string> objects{"background"};
    for (int i = 1; i < 2 + static_cast<int>(rng() % 20); ++i) {
      objects.push_back("class" + std::to_string(i));
    }
    m.space = LabelSpace::Build(objects, {"scene_for_class1"});
    for (int r = 0; r < static_cast<int>(rng() % 50); ++r) {
      ImageRecord rec{"img" + std::to_string(r), {}, "", ImageSource::kTargetDataset};
      rec.labels.insert(1 + static_cast<int>(rng() % (objects.size() - 1)));
      if (rng() % 2) rec.mask_path = "m/" + rec.image_id + ".png";
      m.records.push_back(rec);
    }
    std::stringstream io;
    WriteManifest(m, io);
    const auto once = ReadManifest(io);
    std::stringstream io2;
    WriteManifest(once, io2);
    o.Check(once == m && ReadManifest(io2) == m, "manifest round trip");
  }

  testing::TempDir dir;
  for (int trial = 0; trial < 30; ++trial) {
    const auto mask = testing::RandomMask(rng, 1 + static_cast<int>(rng() % 40),
                                          1 + static_cast<int>(rng() % 40), 21, 0.1);
    const std::string path = dir.file("m" + std::to_string(trial) + ".png");
    WriteIndexedMask(mask, path);
    const auto back = ReadIndexedMask(path, 21);
    WriteIndexedMask(back, path);
    o.Check(back == mask && ReadIndexedMask(path, 21) == mask, "mask round trip");
  }

  // Synthetic corpus through every consuming subcommand.
  const std::string corpus = dir.file("corpus"), out = dir.file("out");
  const std::string manifest = " --manifest " + Q(corpus + "/manifest.tsv");
  const std::vector<std::string> commands = {
      "synth --n-images 120 --pool-size 1200 --plant 6:20:0.95 --out " + Q(corpus),
      "cooc --predictions " + Q(corpus + "/predictions.tsv") + " --scenes " +
          Q(corpus + "/scenes.txt") + manifest + " --out " + Q(out),
      "recommend --out " + Q(out),
      "clean --pool " + Q(corpus + "/pool.tsv") + manifest + " --out " + Q(out),
      "augment" + manifest + " --out " + Q(out),
  };
  for (const auto& cmd : commands) {
    const auto r = testing::RunCli(cmd);
    o.Check(r.exit_code == 0, "`" + cmd.substr(0, cmd.find(' ')) + "` failed: " + r.err);
  }
  if (o.pass) {
    const auto augmented = ReadManifestFile(out + "/" + kAugmentedManifestFile);
    o.Check(ValidateManifest(augmented).empty(), "augmented manifest invalid");
    o.Check(augmented.space.num_classes() == 22, "augmented manifest class count");
  }
  if (o.pass) o.detail = "100 manifests, 30 masks, synth -> cooc/recommend/clean/augment";
  return o;
}

}  // namespace
}  // namespace scenectx

int main() {
  using namespace scenectx;
  Criterion(1, "table-mean reproduction", 1.0, TableMeans);
  Criterion(2, "improvement deltas", 1.0, Deltas);
  Criterion(3, "scene scoring oracle equivalence", 5.0, OracleEquivalence);
  Criterion(4, "scene scoring invariances", 2.0, Invariances);
  Criterion(5, "planted-structure recovery", 10.0, PlantedRecovery);
  Criterion(6, "confusion normalization and IoU", 0, ConfusionProperties);
  Criterion(7, "identity evaluation", 0, IdentityEvaluation);
  Criterion(8, "parallel determinism", 0, ParallelDeterminism);
  Criterion(9, "format round-trips", 0, RoundTrips);
  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
