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

#ifndef SNAPCODE_CORPUS_STATS_HPP_
#define SNAPCODE_CORPUS_STATS_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "snapcode/dataset.hpp"

namespace snapcode {

struct LengthBucket {
  std::size_t min_lines;
  std::size_t max_lines;  // inclusive; SIZE_MAX for the open bucket
  std::string_view name;
};

// Histogram buckets for method length in source lines.
inline constexpr std::array<LengthBucket, 8> kLengthBuckets = {{
    {1, 1, "1"},
    {2, 5, "2-5"},
    {6, 10, "6-10"},
    {11, 20, "11-20"},
    {21, 30, "21-30"},
    {31, 50, "31-50"},
    {51, 100, "51-100"},
    {101, static_cast<std::size_t>(-1), ">100"},
}};

struct SplitStats {
  std::size_t files = 0;
  std::size_t methods = 0;
  std::size_t warnings = 0;
  std::map<std::string, std::size_t> label_counts;
  std::array<std::size_t, kLengthBuckets.size()> length_histogram{};
};

struct CorpusStats {
  std::array<SplitStats, 3> splits;

  const SplitStats& of(Split split) const { return splits[static_cast<std::size_t>(split)]; }
};

std::size_t LengthBucketIndex(std::size_t lines);

// Throws IoFailure when corpus_root is not a directory. Missing split
// directories count as empty.
CorpusStats ComputeCorpusStats(const std::filesystem::path& corpus_root, int jobs = 0);

// Plain-text report: per-split totals, label frequency tables (descending
// count, ties by name), length histogram, warning counts.
std::string FormatCorpusStats(const CorpusStats& stats);

}  // namespace snapcode

#endif  // SNAPCODE_CORPUS_STATS_HPP_
