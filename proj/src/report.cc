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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>

#include "scenectx/text_util.h"

namespace scenectx {

namespace {

std::string EscapeXml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::size_t ColumnWidth(const std::vector<std::string>& names) {
  std::size_t width = 5;
  for (const auto& n : names) width = std::max(width, n.size());
  return width + 1;
}

}  // namespace

void WriteIoUTable(const IoUReport& report, const std::string& row_name,
                   std::ostream& out) {
  const std::size_t width = ColumnWidth(report.class_names);
  const std::size_t label = std::max<std::size_t>(row_name.size(), 6) + 2;
  out << std::left << std::setw(static_cast<int>(label)) << "method";
  for (const auto& name : report.class_names) {
    out << std::right << std::setw(static_cast<int>(width)) << name;
  }
  out << std::right << std::setw(static_cast<int>(width)) << "mean" << '\n';
  out << std::left << std::setw(static_cast<int>(label)) << row_name;
  for (const auto& v : report.per_class) {
    out << std::right << std::setw(static_cast<int>(width))
        << (v ? FormatFixed(*v * 100.0, 1) : std::string("-"));
  }
  out << std::right << std::setw(static_cast<int>(width))
      << (report.mean_iou ? FormatFixed(*report.mean_iou * 100.0, 1)
                          : std::string("-"))
      << '\n';
}

void WriteIoUCsv(const IoUReport& report, std::ostream& out) {
  out << "class,iou\n";
  for (std::size_t c = 0; c < report.class_names.size(); ++c) {
    out << report.class_names[c] << ','
        << (report.per_class[c] ? FormatDouble(*report.per_class[c]) : "nan")
        << '\n';
  }
  out << "mean," << (report.mean_iou ? FormatDouble(*report.mean_iou) : "nan")
      << '\n';
}

void WriteVerificationReport(const VerificationReport& report,
                             std::ostream& out) {
  std::size_t label = 6;
  for (const auto& r : report.rows) label = std::max(label, r.method.size());
  label += 2;
  out << std::left << std::setw(static_cast<int>(label)) << "method"
      << std::right << std::setw(11) << "recomputed" << std::setw(11)
      << "published" << std::setw(9) << "diff" << "  result\n";
  for (const auto& r : report.rows) {
    out << std::left << std::setw(static_cast<int>(label)) << r.method
        << std::right << std::setw(11) << FormatFixed(r.recomputed_mean, 4)
        << std::setw(11) << FormatFixed(r.published_mean, 2) << std::setw(9)
        << FormatFixed(r.difference, 4) << "  " << (r.pass ? "PASS" : "FAIL")
        << '\n';
  }
  out << report.passed() << "/" << report.rows.size()
      << " rows within tolerance " << FormatDouble(report.tolerance) << '\n';
}

void WriteDeltaReport(const DeltaReport& report, const std::string& ours,
                      const std::string& baseline, std::ostream& out) {
  out << "deltas: " << ours << " - " << baseline << '\n';
  for (std::size_t c = 0; c < report.class_names.size(); ++c) {
    out << "  " << std::left << std::setw(12) << report.class_names[c]
        << std::right << std::setw(8)
        << (report.deltas[c] >= 0 ? "+" : "") + FormatFixed(report.deltas[c], 1)
        << '\n';
  }
  out << "max delta: " << report.max_class << " "
      << (report.max_delta >= 0 ? "+" : "") << FormatFixed(report.max_delta, 1)
      << '\n';
}

void WriteNormalizedCsv(const NormalizedConfusion& matrix, std::ostream& out) {
  const int n = static_cast<int>(matrix.class_names.size());
  out << "gt\\pred";
  for (const auto& name : matrix.class_names) out << ',' << name;
  out << '\n';
  for (int i = 0; i < n; ++i) {
    out << matrix.class_names[i];
    for (int j = 0; j < n; ++j) {
      const auto v = matrix.at(i, j);
      out << ',' << (v ? FormatDouble(*v) : "nan");
    }
    out << '\n';
  }
}

std::string HeatmapColor(double value) {
  const double v = std::clamp(value, 0.0, 1.0);
  // Linear blend from white to (8, 48, 107).
  auto channel = [v](int dark) {
    return static_cast<int>(std::lround(255.0 + (dark - 255.0) * v));
  };
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", channel(8), channel(48),
                channel(107));
  return buf;
}

void WriteHeatmapSvg(const NormalizedConfusion& matrix, const std::string& title,
                     std::ostream& out) {
  const int n = static_cast<int>(matrix.class_names.size());
  constexpr int kCell = 28;
  constexpr int kMargin = 110;
  const int size = kMargin + n * kCell + 20;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
      << "\" height=\"" << size + 20 << "\" font-family=\"sans-serif\" "
      << "font-size=\"10\">\n"
      << "<defs><pattern id=\"undefined\" width=\"6\" height=\"6\" "
      << "patternUnits=\"userSpaceOnUse\"><rect width=\"6\" height=\"6\" "
      << "fill=\"#d9d9d9\"/><path d=\"M0,6 L6,0\" stroke=\"#808080\"/>"
      << "</pattern></defs>\n"
      << "<text x=\"" << size / 2 << "\" y=\"14\" text-anchor=\"middle\" "
      << "font-size=\"12\">" << EscapeXml(title) << "</text>\n";
  for (int j = 0; j < n; ++j) {
    const int x = kMargin + j * kCell + kCell / 2;
    out << "<text class=\"col-label\" transform=\"translate(" << x << ","
        << kMargin - 4 << ") rotate(-60)\">"
        << EscapeXml(matrix.class_names[j]) << "</text>\n";
  }
  for (int i = 0; i < n; ++i) {
    const int y = kMargin + i * kCell;
    out << "<text class=\"row-label\" x=\"" << kMargin - 4 << "\" y=\""
        << y + kCell / 2 + 3 << "\" text-anchor=\"end\">"
        << EscapeXml(matrix.class_names[i]) << "</text>\n";
    for (int j = 0; j < n; ++j) {
      const int x = kMargin + j * kCell;
      const auto v = matrix.at(i, j);
      out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell
          << "\" height=\"" << kCell << "\" ";
      if (v) {
        out << "fill=\"" << HeatmapColor(*v) << "\" data-value=\""
            << FormatFixed(*v, 4) << "\"";
      } else {
        out << "fill=\"url(#undefined)\" data-value=\"undefined\"";
      }
      out << " stroke=\"#ffffff\" stroke-width=\"0.5\"/>\n";
    }
  }
  out << "</svg>\n";
}

}  // namespace scenectx
