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

#include "snapcode/dataset.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <tuple>

#include "json.hpp"
#include "snapcode/error.hpp"
#include "snapcode/png.hpp"
#include "snapcode/redact.hpp"
#include "snapcode/sampling.hpp"

namespace snapcode {
namespace fs = std::filesystem;
using nlohmann::json;

std::string_view ToString(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kValidation: return "validation";
    case Split::kTest: return "test";
  }
  return "unknown";
}

std::optional<Split> ParseSplit(std::string_view name) {
  for (Split s : kAllSplits) {
    if (ToString(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view ToString(ImageVariant variant) {
  switch (variant) {
    case ImageVariant::kOriginal: return "original";
    case ImageVariant::kReformatted: return "reformatted";
    case ImageVariant::kRedacted: return "redacted";
  }
  return "unknown";
}

std::optional<ImageVariant> ParseVariant(std::string_view name) {
  for (ImageVariant v : kAllVariants) {
    if (ToString(v) == name) return v;
  }
  return std::nullopt;
}

SourceText VariantText(const SourceText& body, ImageVariant variant, const WindowConfig& cfg,
                       std::vector<LexDiagnostic>* diagnostics) {
  switch (variant) {
    case ImageVariant::kOriginal:
      return OriginalWindow(body, cfg);
    case ImageVariant::kReformatted:
      return Reformat(body, cfg, diagnostics);
    case ImageVariant::kRedacted:
      return Redact(Reformat(body, cfg, diagnostics));
  }
  return body;
}

std::string ReadTextFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path.string());
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoFailure("read failed: " + path.string());
  return text;
}

std::vector<std::string> ListCorpusFiles(const fs::path& corpus_root, Split split) {
  std::vector<std::string> files;
  const fs::path dir = corpus_root / ToString(split);
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return files;
  for (auto it = fs::recursive_directory_iterator(dir, ec); !ec && it != fs::end(it);
       it.increment(ec)) {
    if (it->is_regular_file(ec) && it->path().extension() == ".java") {
      files.push_back(it->path().lexically_relative(corpus_root).generic_string());
    }
  }
  if (ec) throw IoFailure("cannot list " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());
  return files;
}

std::map<Split, std::map<std::string, std::size_t>> DatasetManifest::RecordCounts() const {
  std::set<std::tuple<Split, std::string, std::string, std::size_t, std::size_t>> seen;
  std::map<Split, std::map<std::string, std::size_t>> counts;
  for (const auto& e : entries) {
    if (seen.emplace(e.split, e.label, e.source_path, e.start_line, e.end_line).second) {
      ++counts[e.split][e.label];
    }
  }
  return counts;
}

namespace {

int ResolveJobs(int jobs) { return jobs > 0 ? jobs : std::max(1, omp_get_num_procs()); }

struct CorpusFile {
  Split split;
  std::string relative;
};

json ConfigJson(const BuildOptions& opt, const RenderConfig& render, const GlyphAtlas& atlas,
                const std::vector<ImageVariant>& variants) {
  json variant_names = json::array();
  for (auto v : variants) variant_names.push_back(ToString(v));
  return json{
      {"top_k", opt.top_k},
      {"cap", opt.cap},
      {"variants", variant_names},
      {"window",
       {{"max_rows", opt.window.max_rows},
        {"max_cols", opt.window.max_cols},
        {"indent_unit", opt.window.indent_unit},
        {"tab_width", opt.window.tab_width}}},
      {"render",
       {{"rows", render.rows},
        {"cols", render.cols},
        {"cell_width_px", render.cell_width_px},
        {"cell_height_px", render.cell_height_px},
        {"output_size_px", render.output_size_px},
        {"background", render.background},
        {"ink", render.ink},
        {"atlas_id", atlas.id()}}},
  };
}

std::string DumpJson(const json& j) { return j.dump(-1, ' ', false, json::error_handler_t::replace); }

// Record output bookkeeping filled in by the parallel render pass.
struct RecordOutput {
  std::array<bool, 3> image_ok{};
  bool tokens_ok = false;
  std::vector<std::string> warnings;
};

}  // namespace

DatasetManifest BuildDataset(const fs::path& corpus_root, const fs::path& out_dir,
                             const BuildOptions& options) {
  options.window.Validate();
  if (options.top_k == 0) throw InvalidConfig("top-k must be >= 1");
  if (options.cap == 0) throw InvalidConfig("cap must be >= 1");
  std::error_code ec;
  if (!fs::is_directory(corpus_root, ec)) {
    throw IoFailure("corpus root is not a directory: " + corpus_root.string());
  }

  // The render window always follows the text window.
  RenderConfig render = options.render;
  render.rows = options.window.max_rows;
  render.cols = options.window.max_cols;
  render.tab_width = options.window.tab_width;
  render.Validate();
  const GlyphAtlas atlas = GlyphAtlas::Builtin(render.cell_width_px, render.cell_height_px);

  std::vector<ImageVariant> variants = options.variants;
  std::sort(variants.begin(), variants.end());
  variants.erase(std::unique(variants.begin(), variants.end()), variants.end());

  const int jobs = ResolveJobs(options.jobs);
  DatasetManifest manifest;
  manifest.seed = options.seed;

  // Mine methods file by file.
  std::vector<CorpusFile> files;
  for (Split split : kAllSplits) {
    for (auto& rel : ListCorpusFiles(corpus_root, split)) files.push_back({split, std::move(rel)});
  }
  std::vector<ExtractResult> mined(files.size());
  std::vector<char> read_failed(files.size(), 0);
  const auto n_files = static_cast<std::int64_t>(files.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::int64_t i = 0; i < n_files; ++i) {
    const CorpusFile& f = files[i];
    try {
      const SourceText src = SourceText::FromRaw(ReadTextFile(corpus_root / f.relative));
      mined[i] = ExtractMethods(src, f.relative, f.split);
    } catch (const std::exception& e) {
      mined[i].warnings.push_back(f.relative + ": " + e.what());
      read_failed[i] = 1;
    }
  }

  std::array<std::vector<MethodRecord>, 3> by_split;
  for (std::size_t i = 0; i < files.size(); ++i) {
    auto& result = mined[i];
    manifest.io_failures += static_cast<std::size_t>(read_failed[i]);
    std::move(result.warnings.begin(), result.warnings.end(), std::back_inserter(manifest.warnings));
    auto& dst = by_split[static_cast<std::size_t>(files[i].split)];
    std::move(result.records.begin(), result.records.end(), std::back_inserter(dst));
  }
  mined.clear();

  manifest.vocab = BuildVocab(by_split[0], options.top_k);

  // Out-of-vocabulary records leave every split; only train is capped.
  std::vector<MethodRecord> records;
  for (Split split : kAllSplits) {
    auto& group = by_split[static_cast<std::size_t>(split)];
    std::erase_if(group, [&](const MethodRecord& r) { return !manifest.vocab.Contains(r.label); });
    // A cap above the group size only puts it in canonical order.
    const std::size_t cap = split == Split::kTrain ? options.cap : group.size() + 1;
    group = CapPerLabel(std::move(group), cap, options.seed);
    std::move(group.begin(), group.end(), std::back_inserter(records));
  }

  // Ids number records within their split in canonical order.
  std::vector<std::string> ids(records.size());
  {
    std::array<std::size_t, 3> next{};
    char buf[32];
    for (std::size_t i = 0; i < records.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%06zu", next[static_cast<std::size_t>(records[i].split)]++);
      ids[i] = buf;
    }
  }
  auto image_rel = [&](std::size_t i, ImageVariant v) {
    return (fs::path(ToString(v)) / ToString(records[i].split) / records[i].label / (ids[i] + ".png"))
        .generic_string();
  };
  auto tokens_rel = [&](std::size_t i) {
    return (fs::path("tokens") / ToString(records[i].split) / (ids[i] + ".json")).generic_string();
  };

  fs::create_directories(out_dir, ec);
  if (ec) throw IoFailure("cannot create " + out_dir.string() + ": " + ec.message());
  {
    std::set<fs::path> dirs;
    for (std::size_t i = 0; i < records.size(); ++i) {
      dirs.insert((out_dir / tokens_rel(i)).parent_path());
      for (auto v : variants) dirs.insert((out_dir / image_rel(i, v)).parent_path());
    }
    for (const auto& d : dirs) {
      fs::create_directories(d, ec);
      if (ec) throw IoFailure("cannot create " + d.string() + ": " + ec.message());
    }
  }

  std::vector<RecordOutput> outputs(records.size());
  const auto n_records = static_cast<std::int64_t>(records.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::int64_t i = 0; i < n_records; ++i) {
    const MethodRecord& rec = records[i];
    RecordOutput& out = outputs[i];
    try {
      const TokenSequence seq = TokenizeBody(rec);
      const std::string doc = DumpJson(json{{"label", seq.label}, {"tokens", seq.tokens}}) + "\n";
      WriteFile(out_dir / tokens_rel(i),
                std::span(reinterpret_cast<const std::uint8_t*>(doc.data()), doc.size()));
      out.tokens_ok = true;
    } catch (const std::exception& e) {
      out.warnings.push_back(tokens_rel(i) + ": " + e.what());
    }
    for (auto v : variants) {
      try {
        const auto png = Snapshot(VariantText(rec.body, v, options.window), render, atlas);
        WriteFile(out_dir / image_rel(i, v), png);
        out.image_ok[static_cast<std::size_t>(v)] = true;
      } catch (const std::exception& e) {
        out.warnings.push_back(image_rel(i, v) + ": " + e.what());
      }
    }
  }

  for (std::size_t i = 0; i < records.size(); ++i) {
    const MethodRecord& rec = records[i];
    RecordOutput& out = outputs[i];
    manifest.io_failures += out.warnings.size();
    std::move(out.warnings.begin(), out.warnings.end(), std::back_inserter(manifest.warnings));
    if (!out.tokens_ok) continue;
    ManifestEntry base;
    base.label = rec.label;
    base.split = rec.split;
    base.source_path = rec.source_path;
    base.start_line = rec.start_line;
    base.end_line = rec.end_line;
    base.tokens_path = tokens_rel(i);
    if (variants.empty()) {
      manifest.entries.push_back(base);
      continue;
    }
    for (auto v : variants) {
      if (!out.image_ok[static_cast<std::size_t>(v)]) continue;
      ManifestEntry e = base;
      e.variant = v;
      e.image_path = image_rel(i, v);
      manifest.entries.push_back(std::move(e));
    }
  }

  manifest.config_json = DumpJson(ConfigJson(options, render, atlas, variants));
  manifest.config_fingerprint = ToHex(Fnv1a64(manifest.config_json));

  const std::string text = SerializeManifest(manifest);
  WriteFile(out_dir / kManifestFileName,
            std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  return manifest;
}

std::string SerializeManifest(const DatasetManifest& manifest) {
  json vocab = json::array();
  for (const auto& label : manifest.vocab.labels) {
    vocab.push_back({{"label", label}, {"train_count", manifest.vocab.frequency.at(label)}});
  }
  json header = {
      {"kind", "header"},
      {"format", "snapcode-manifest/1"},
      {"config", manifest.config_json.empty() ? json::object() : json::parse(manifest.config_json)},
      {"config_fingerprint", manifest.config_fingerprint},
      {"seed", manifest.seed},
      {"vocab", vocab},
      {"warnings", manifest.warnings},
      {"io_failures", manifest.io_failures},
  };
  std::string out = DumpJson(header) + "\n";
  for (const auto& e : manifest.entries) {
    json j = {
        {"kind", "entry"},
        {"image_path", e.image_path ? json(*e.image_path) : json(nullptr)},
        {"label", e.label},
        {"split", ToString(e.split)},
        {"variant", e.variant ? json(ToString(*e.variant)) : json(nullptr)},
        {"source_path", e.source_path},
        {"span", {e.start_line, e.end_line}},
        {"tokens_path", e.tokens_path},
    };
    out += DumpJson(j) + "\n";
  }
  return out;
}

DatasetManifest ParseManifest(std::string_view jsonl) {
  DatasetManifest manifest;
  bool have_header = false;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(jsonl)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error("manifest line " + std::to_string(line_no) + ": " + e.what());
    }
    try {
      const std::string kind = j.is_object() ? j.value("kind", "") : "";
      if (kind == "header") {
        have_header = true;
        manifest.config_json = DumpJson(j.at("config"));
        manifest.config_fingerprint = j.at("config_fingerprint").get<std::string>();
        manifest.seed = j.at("seed").get<std::uint64_t>();
        manifest.warnings = j.at("warnings").get<std::vector<std::string>>();
        manifest.io_failures = j.value("io_failures", std::size_t{0});
        for (const auto& v : j.at("vocab")) {
          const auto label = v.at("label").get<std::string>();
          manifest.vocab.labels.push_back(label);
          manifest.vocab.frequency[label] = v.at("train_count").get<std::size_t>();
        }
      } else if (kind == "entry") {
        ManifestEntry e;
        if (!j.at("image_path").is_null()) e.image_path = j.at("image_path").get<std::string>();
        if (!j.at("variant").is_null()) {
          e.variant = ParseVariant(j.at("variant").get<std::string>());
          if (!e.variant) throw Error("manifest line " + std::to_string(line_no) + ": bad variant");
        }
        e.label = j.at("label").get<std::string>();
        const auto split = ParseSplit(j.at("split").get<std::string>());
        if (!split) throw Error("manifest line " + std::to_string(line_no) + ": bad split");
        e.split = *split;
        e.source_path = j.at("source_path").get<std::string>();
        e.start_line = j.at("span").at(0).get<std::size_t>();
        e.end_line = j.at("span").at(1).get<std::size_t>();
        e.tokens_path = j.at("tokens_path").get<std::string>();
        manifest.entries.push_back(std::move(e));
      } else {
        throw Error("manifest line " + std::to_string(line_no) + ": unknown kind '" + kind + "'");
      }
    } catch (const json::exception& e) {
      throw Error("manifest line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) throw Error("manifest has no header line");
  return manifest;
}

DatasetManifest ReadManifest(const fs::path& path) { return ParseManifest(ReadTextFile(path)); }

}  // namespace snapcode
