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

#include "scenectx/report.h"

#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "scenectx/evaluation.h"
#include "scenectx/label_space.h"
#include "test_util.h"

namespace scenectx {
namespace {

std::size_t Count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

NormalizedConfusion Identity(const std::vector<std::string>& names) {
  ConfusionMatrix cm(names);
  for (int i = 0; i < cm.num_classes(); ++i) cm.set(i, i, 9);
  return NormalizeConfusion(cm);
}

std::string Svg(const NormalizedConfusion& m) {
  std::ostringstream out;
  WriteHeatmapSvg(m, "confusion", out);
  return out.str();
}

TEST(HeatmapColorTest, LinearEndpointsAndMidpoint) {
  EXPECT_EQ(HeatmapColor(0.0), "#ffffff");
  EXPECT_EQ(HeatmapColor(1.0), "#08306b");
  EXPECT_EQ(HeatmapColor(0.7), "#526e97");
  EXPECT_EQ(HeatmapColor(-1.0), HeatmapColor(0.0));
  EXPECT_EQ(HeatmapColor(2.0), HeatmapColor(1.0));
}

TEST(HeatmapSvgTest, IdentityHasDarkDiagonalOnly) {
  const std::string svg = Svg(Identity(VocClassNames()));
  EXPECT_EQ(Count(svg, "fill=\"#08306b\""), 21u);
  EXPECT_EQ(Count(svg, "fill=\"#ffffff\" data-value"), 21u * 20u);
  EXPECT_EQ(Count(svg, "class=\"row-label\""), 21u);
  EXPECT_EQ(Count(svg, "class=\"col-label\""), 21u);
  for (const auto& name : VocClassNames()) {
    EXPECT_NE(svg.find(">" + name + "</text>"), std::string::npos) << name;
  }
}

TEST(HeatmapSvgTest, BackgroundToBoatCellShadedAtPointSeven) {
  ConfusionMatrix cm(VocClassNames());
  cm.set(0, 0, 3);
  cm.set(0, 4, 7);  // boat
  const std::string svg = Svg(NormalizeConfusion(cm));
  const std::regex cell(
      "<rect x=\"(\\d+)\" y=\"110\" [^>]*fill=\"#526e97\" data-value=\"0.7000\"");
  std::smatch m;
  ASSERT_TRUE(std::regex_search(svg, m, cell));
  EXPECT_EQ(std::stoi(m[1]), 110 + 4 * 28);
}

TEST(HeatmapSvgTest, UndefinedRowsAreHatched) {
  ConfusionMatrix cm(VocClassNames());
  cm.set(0, 0, 1);
  const std::string svg = Svg(NormalizeConfusion(cm));
  EXPECT_EQ(Count(svg, "data-value=\"undefined\""), 20u * 21u);
  EXPECT_NE(svg.find("<pattern id=\"undefined\""), std::string::npos);
}

TEST(HeatmapSvgTest, NamesAreEscaped) {
  const std::string svg = Svg(Identity({"a<b", "c&d"}));
  EXPECT_NE(svg.find("a&lt;b"), std::string::npos);
  EXPECT_NE(svg.find("c&amp;d"), std::string::npos);
}

TEST(NormalizedCsvTest, UndefinedRowsAreNan) {
  ConfusionMatrix cm({"x", "y"});
  cm.set(0, 0, 1);
  cm.set(0, 1, 3);
  std::ostringstream out;
  WriteNormalizedCsv(NormalizeConfusion(cm), out);
  EXPECT_EQ(out.str(), "gt\\pred,x,y\nx,0.25,0.75\ny,nan,nan\n");
}

TEST(IoUReportTest, TableAndCsv) {
  ConfusionMatrix cm({"background", "boat", "cat"});
  cm.set(0, 0, 1);
  cm.set(0, 1, 1);
  cm.set(1, 1, 2);
  const auto iou = ComputeIoU(cm);

  std::ostringstream table;
  WriteIoUTable(iou, "mine", table);
  EXPECT_NE(table.str().find("50.0"), std::string::npos) << table.str();
  EXPECT_NE(table.str().find("66.7"), std::string::npos) << table.str();
  EXPECT_NE(table.str().find("mean"), std::string::npos);

  std::ostringstream csv;
  WriteIoUCsv(iou, csv);
  EXPECT_NE(csv.str().find("cat,nan"), std::string::npos) << csv.str();
  EXPECT_NE(csv.str().find("background,0.5"), std::string::npos) << csv.str();
}

TEST(VerificationReportTest, PassAndFailLines) {
  const auto table = ParsePublishedTableFile(testing::DataPath("table1_val.tsv"));
  std::ostringstream out;
  WriteVerificationReport(VerifyPublishedMeans(table, 0.05), out);
  EXPECT_EQ(Count(out.str(), "PASS"), 6u) << out.str();
  EXPECT_EQ(Count(out.str(), "FAIL"), 1u) << out.str();
  EXPECT_NE(out.str().find("6/7 rows within tolerance"), std::string::npos);
}

TEST(DeltaReportTest, NamesMaxClass) {
  const auto table = ParsePublishedTableFile(testing::DataPath("table1_val.tsv"));
  std::ostringstream out;
  WriteDeltaReport(ComputeDeltas(ToResultRow(table, "Ours"), ToResultRow(table, "SEC-web")),
                   "Ours", "SEC-web", out);
  EXPECT_NE(out.str().find("boat"), std::string::npos);
  EXPECT_NE(out.str().find("+26.7"), std::string::npos) << out.str();
}

}  // namespace
}  // namespace scenectx
