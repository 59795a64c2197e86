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

#ifndef SCENECTX_REPORT_H_
#define SCENECTX_REPORT_H_

#include <iosfwd>
#include <string>

#include "scenectx/evaluation.h"

namespace scenectx {

// Aligned text table in published-table layout: one column per class
// followed by "mean", values in percent with one decimal.
void WriteIoUTable(const IoUReport& report, const std::string& row_name,
                   std::ostream& out);
// class,iou lines plus a final mean line; undefined classes are "nan".
void WriteIoUCsv(const IoUReport& report, std::ostream& out);

void WriteVerificationReport(const VerificationReport& report,
                             std::ostream& out);
void WriteDeltaReport(const DeltaReport& report, const std::string& ours,
                      const std::string& baseline, std::ostream& out);

// c_ij as CSV; undefined rows are written as "nan".
void WriteNormalizedCsv(const NormalizedConfusion& matrix, std::ostream& out);

// Heatmap with labeled axes, cells shaded linearly by value (white = 0,
// full blue = 1). Undefined rows are drawn hatched gray.
void WriteHeatmapSvg(const NormalizedConfusion& matrix, const std::string& title,
                     std::ostream& out);

// Fill color used for a cell value in [0, 1], as "#rrggbb".
std::string HeatmapColor(double value);

}  // namespace scenectx

#endif  // SCENECTX_REPORT_H_
