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

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

#include "snapcode/dataset.hpp"
#include "snapcode/error.hpp"
#include "snapcode/sampling.hpp"

namespace snapcode {
namespace {

bool CanonicalLess(const MethodRecord& a, const MethodRecord& b) {
  return std::tie(a.split, a.label, a.source_path, a.start_line, a.end_line) <
         std::tie(b.split, b.label, b.source_path, b.start_line, b.end_line);
}

}  // namespace

bool LabelVocab::Contains(std::string_view label) const {
  return frequency.find(std::string(label)) != frequency.end();
}

LabelVocab BuildVocab(std::span<const MethodRecord> train_records, std::size_t k) {
  if (k == 0) throw InvalidConfig("top-k must be >= 1");
  std::map<std::string, std::size_t> counts;
  for (const auto& r : train_records) ++counts[r.label];
  if (counts.size() < k) throw InsufficientLabels(k, counts.size());

  std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  LabelVocab vocab;
  for (std::size_t i = 0; i < k; ++i) {
    vocab.labels.push_back(ranked[i].first);
    vocab.frequency.emplace(ranked[i].first, ranked[i].second);
  }
  return vocab;
}

std::vector<MethodRecord> CapPerLabel(std::vector<MethodRecord> records, std::size_t cap,
                                      std::uint64_t seed) {
  if (cap == 0) throw InvalidConfig("cap must be >= 1");
  std::sort(records.begin(), records.end(), CanonicalLess);

  std::vector<MethodRecord> kept;
  kept.reserve(records.size());
  for (auto begin = records.begin(); begin != records.end();) {
    auto end = std::find_if(begin, records.end(), [&](const MethodRecord& r) {
      return r.label != begin->label || r.split != begin->split;
    });
    const auto count = static_cast<std::size_t>(end - begin);
    if (count > cap) {
      // A label's sample depends only on its own records and the seed.
      std::span<MethodRecord> group(&*begin, count);
      DeterministicShuffle(group, seed ^ Fnv1a64(begin->label));
      std::sort(begin, begin + static_cast<std::ptrdiff_t>(cap), CanonicalLess);
      std::move(begin, begin + static_cast<std::ptrdiff_t>(cap), std::back_inserter(kept));
    } else {
      std::move(begin, end, std::back_inserter(kept));
    }
    begin = end;
  }
  return kept;
}

std::string ToHex(std::uint64_t value) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, value >>= 4) out[static_cast<std::size_t>(i)] = kDigits[value & 0xF];
  return out;
}

}  // namespace snapcode
