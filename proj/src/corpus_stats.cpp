// Copyright 2026 The Snapcode Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "snapcode/corpus_stats.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <vector>

#include "snapcode/error.hpp"

namespace snapcode {

std::size_t LengthBucketIndex(std::size_t lines) {
  for (std::size_t i = 0; i < kLengthBuckets.size(); ++i) {
    if (lines >= kLengthBuckets[i].min_lines && lines <= kLengthBuckets[i].max_lines) return i;
  }
  return 0;
}

CorpusStats ComputeCorpusStats(const std::filesystem::path& corpus_root, int jobs) {
  std::error_code ec;
  if (!std::filesystem::is_directory(corpus_root, ec)) {
    throw IoFailure("corpus root is not a directory: " + corpus_root.string());
  }
  if (jobs <= 0) jobs = std::max(1, omp_get_num_procs());

  CorpusStats stats;
  for (Split split : kAllSplits) {
    const auto files = ListCorpusFiles(corpus_root, split);
    std::vector<ExtractResult> mined(files.size());
    const auto n = static_cast<std::int64_t>(files.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        mined[i] = ExtractMethods(SourceText::FromRaw(ReadTextFile(corpus_root / files[i])),
                                  files[i], split);
      } catch (const std::exception& e) {
        mined[i].warnings.push_back(files[i] + ": " + e.what());
      }
    }
    SplitStats& s = stats.splits[static_cast<std::size_t>(split)];
    s.files = files.size();
    for (const auto& m : mined) {
      s.warnings += m.warnings.size();
      s.methods += m.records.size();
      for (const auto& r : m.records) {
        ++s.label_counts[r.label];
        ++s.length_histogram[LengthBucketIndex(r.end_line - r.start_line + 1)];
      }
    }
  }
  return stats;
}

std::string FormatCorpusStats(const CorpusStats& stats) {
  std::ostringstream out;
  for (Split split : kAllSplits) {
    const SplitStats& s = stats.of(split);
    out << "[" << ToString(split) << "] files=" << s.files << " methods=" << s.methods
        << " labels=" << s.label_counts.size() << " warnings=" << s.warnings << "\n";

    std::vector<std::pair<std::string, std::size_t>> rows(s.label_counts.begin(),
                                                          s.label_counts.end());
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    out << "  label frequency:\n";
    for (const auto& [label, count] : rows) out << "    " << count << "\t" << label << "\n";
    out << "  method length (lines):\n";
    for (std::size_t b = 0; b < kLengthBuckets.size(); ++b) {
      out << "    " << kLengthBuckets[b].name << "\t" << s.length_histogram[b] << "\n";
    }
  }
  return out.str();
}

}  // namespace snapcode
