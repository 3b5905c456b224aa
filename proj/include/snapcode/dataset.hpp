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

#ifndef SNAPCODE_DATASET_HPP_
#define SNAPCODE_DATASET_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snapcode/reformat.hpp"
#include "snapcode/render.hpp"
#include "snapcode/source_text.hpp"

namespace snapcode {

enum class Split { kTrain, kValidation, kTest };
inline constexpr std::array<Split, 3> kAllSplits = {Split::kTrain, Split::kValidation,
                                                    Split::kTest};
std::string_view ToString(Split split);
std::optional<Split> ParseSplit(std::string_view name);

enum class ImageVariant { kOriginal, kReformatted, kRedacted };
inline constexpr std::array<ImageVariant, 3> kAllVariants = {
    ImageVariant::kOriginal, ImageVariant::kReformatted, ImageVariant::kRedacted};
std::string_view ToString(ImageVariant variant);
std::optional<ImageVariant> ParseVariant(std::string_view name);

// Text that feeds the renderer for one variant:
//   original    -> tabs expanded, window truncated, comments kept
//   reformatted -> Reformat
//   redacted    -> Redact(Reformat)
SourceText VariantText(const SourceText& body, ImageVariant variant, const WindowConfig& cfg,
                       std::vector<LexDiagnostic>* diagnostics = nullptr);

struct MethodRecord {
  std::string label;
  SourceText body;  // from '(' of the parameter list to the closing '}'
  std::string source_path;
  std::size_t start_line = 0;  // 0-based, inclusive
  std::size_t end_line = 0;
  Split split = Split::kTrain;
};

struct ExtractResult {
  std::vector<MethodRecord> records;
  std::vector<std::string> warnings;
};

// Finds method declarations with a body by matching a declaration shape
// (type-like token, name, parameter list, optional throws clause, '{') over
// the comment-free token stream, then matching braces. Only declarations
// directly inside a class/interface/enum/record body (or at top level, for
// bare snippets) count, so methods of anonymous and local classes never
// produce a second record. Constructors are skipped with a warning.
ExtractResult ExtractMethods(const SourceText& file, std::string_view path, Split split);

struct LabelVocab {
  std::vector<std::string> labels;           // descending frequency, ties lexicographic
  std::map<std::string, std::size_t> frequency;  // training-split counts of `labels`

  std::size_t k() const { return labels.size(); }
  bool Contains(std::string_view label) const;
};

// Throws InsufficientLabels when fewer than k distinct labels exist and
// InvalidConfig when k == 0.
LabelVocab BuildVocab(std::span<const MethodRecord> train_records, std::size_t k);

// Keeps every label with at most `cap` records; larger groups are shuffled
// with a seed derived from (seed, label) and cut to `cap`. The result is in
// canonical (label, source_path, span) order, whatever the input order.
std::vector<MethodRecord> CapPerLabel(std::vector<MethodRecord> records, std::size_t cap,
                                      std::uint64_t seed);

struct TokenSequence {
  std::string label;
  std::vector<std::string> tokens;
};

// Every lexeme of the body that is not whitespace, a newline or a comment.
TokenSequence TokenizeBody(const MethodRecord& record);

struct BuildOptions {
  std::size_t top_k = 10;
  std::size_t cap = 1000;
  std::vector<ImageVariant> variants = {ImageVariant::kOriginal, ImageVariant::kReformatted,
                                        ImageVariant::kRedacted};
  WindowConfig window;
  RenderConfig render;
  std::uint64_t seed = 0;
  int jobs = 0;  // 0 = number of processors
};

struct ManifestEntry {
  std::optional<std::string> image_path;    // absent for token-only builds
  std::optional<ImageVariant> variant;
  std::string label;
  Split split = Split::kTrain;
  std::string source_path;
  std::size_t start_line = 0;
  std::size_t end_line = 0;
  std::string tokens_path;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct DatasetManifest {
  std::vector<ManifestEntry> entries;
  std::string config_fingerprint;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;
  LabelVocab vocab;
  std::string config_json;  // canonical JSON of every output-affecting setting
  std::size_t io_failures = 0;

  // Number of distinct records per split and label.
  std::map<Split, std::map<std::string, std::size_t>> RecordCounts() const;
};

inline constexpr std::string_view kManifestFileName = "manifest.jsonl";

// Mines <corpus_root>/{train,validation,test}/**/*.java and writes
//   <out>/<variant>/<split>/<label>/<id>.png
//   <out>/tokens/<split>/<id>.json
//   <out>/manifest.jsonl
// Paths in the manifest are relative to `out_dir`. The bytes of every output
// depend only on the corpus and the options (not on jobs).
//
// Throws InsufficientLabels, InvalidConfig, or IoFailure when the corpus
// root or the output directory is unusable. Per-file IO problems become
// warnings and are counted in io_failures.
DatasetManifest BuildDataset(const std::filesystem::path& corpus_root,
                             const std::filesystem::path& out_dir, const BuildOptions& options);

// One JSON object per line: a header ({"kind":"header",...}) then entries.
std::string SerializeManifest(const DatasetManifest& manifest);
DatasetManifest ParseManifest(std::string_view jsonl);
DatasetManifest ReadManifest(const std::filesystem::path& path);

// Corpus files of one split, relative to the corpus root, sorted.
std::vector<std::string> ListCorpusFiles(const std::filesystem::path& corpus_root, Split split);

std::string ReadTextFile(const std::filesystem::path& path);

}  // namespace snapcode

#endif  // SNAPCODE_DATASET_HPP_
