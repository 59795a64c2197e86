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

#include <algorithm>
#include <istream>

#include "scenectx/error.h"
#include "scenectx/ingestion.h"
#include "scenectx/text_util.h"

namespace scenectx {

const PublishedRow& PublishedTable::row(std::string_view method) const {
  for (const auto& r : rows) {
    if (r.method == method) return r;
  }
  throw Error("ingestion", "no table row named \"" + std::string(method) + "\"");
}

PublishedTable ParsePublishedTable(std::istream& in) {
  PublishedTable table;
  std::string line;
  char delimiter = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line.front() == '#') continue;
    if (delimiter == 0) {
      delimiter = line.find('\t') != std::string::npos ? '\t' : ',';
    }
    auto fields = Split(line, delimiter);
    for (auto& f : fields) f = std::string(Trim(f));
    if (!have_header) {
      if (fields.size() != kPublishedClassColumns + 2 ||
          fields.back() != "mean") {
        throw Error("ingestion",
                    "table header must be: method, 21 class names, mean");
      }
      table.class_names.assign(fields.begin() + 1, fields.end() - 1);
      have_header = true;
      continue;
    }
    PublishedRow row;
    row.method = fields.front();
    const auto cells = static_cast<int>(fields.size()) - 2;
    if (cells != kPublishedClassColumns) {
      throw Error("ingestion", "table row \"" + row.method + "\" has " +
                                   std::to_string(std::max(cells, 0)) +
                                   " class values, expected 21");
    }
    for (std::size_t i = 1; i + 1 < fields.size(); ++i) {
      double v = 0.0;
      if (!ParseDouble(fields[i], &v)) {
        throw Error("ingestion", "table row \"" + row.method +
                                     "\": malformed value \"" + fields[i] + "\"");
      }
      row.values.push_back(v);
    }
    if (!ParseDouble(fields.back(), &row.published_mean)) {
      throw Error("ingestion", "table row \"" + row.method +
                                   "\": malformed mean \"" + fields.back() + "\"");
    }
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw Error("ingestion", "table has no header row");
  return table;
}

PublishedTable ParsePublishedTableFile(const std::string& path) {
  auto in = OpenForRead(path, "ingestion");
  return ParsePublishedTable(in);
}

}  // namespace scenectx
