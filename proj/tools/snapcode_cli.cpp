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

// snapcode: reformat, redact and snapshot single files; build datasets and
// print corpus statistics.

#include <omp.h>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "snapcode/corpus_stats.hpp"
#include "snapcode/dataset.hpp"
#include "snapcode/error.hpp"
#include "snapcode/png.hpp"
#include "snapcode/redact.hpp"
#include "snapcode/reformat.hpp"
#include "snapcode/render.hpp"

namespace fs = std::filesystem;
using namespace snapcode;

namespace {

struct Flags {
  int jobs = 0;
  std::uint64_t seed = 0;
  std::size_t max_rows = 30;
  std::size_t max_cols = 120;
  std::size_t indent_unit = 4;
  std::size_t tab_width = 4;
  std::size_t out_size = 512;
  std::string variant = "reformatted";
  std::string variants = "original,reformatted,redacted";
  std::size_t top_k = 10;
  std::size_t cap = 1000;
  std::string out;
  std::string input;
};

WindowConfig Window(const Flags& f) {
  WindowConfig w;
  w.max_rows = f.max_rows;
  w.max_cols = f.max_cols;
  w.indent_unit = f.indent_unit;
  w.tab_width = f.tab_width;
  w.Validate();
  return w;
}

RenderConfig Render(const Flags& f) {
  RenderConfig r;
  r.rows = f.max_rows;
  r.cols = f.max_cols;
  r.tab_width = f.tab_width;
  r.output_size_px = f.out_size;
  r.Validate();
  return r;
}

ImageVariant VariantOrThrow(const std::string& name) {
  auto v = ParseVariant(name);
  if (!v) throw InvalidConfig("unknown variant '" + name + "' (original, reformatted, redacted)");
  return *v;
}

std::vector<ImageVariant> VariantList(const std::string& csv) {
  std::vector<ImageVariant> out;
  std::stringstream in(csv);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(VariantOrThrow(item));
  }
  return out;
}

SourceText LoadSource(const std::string& path) {
  return SourceText::FromRaw(ReadTextFile(path));
}

void PrintDiagnostics(const std::string& path, const std::vector<LexDiagnostic>& diags) {
  for (const auto& d : diags) std::cerr << path << ":" << d.Message() << "\n";
}

void PrintText(const SourceText& text) {
  std::cout << text.text;
  if (!text.text.empty() && text.text.back() != '\n') std::cout << '\n';
}

int CmdReformat(const Flags& f) {
  std::vector<LexDiagnostic> diags;
  const SourceText out = Reformat(LoadSource(f.input), Window(f), &diags);
  PrintDiagnostics(f.input, diags);
  PrintText(out);
  return 0;
}

int CmdRedact(const Flags& f) {
  std::vector<LexDiagnostic> diags;
  const SourceText out = Redact(Reformat(LoadSource(f.input), Window(f), &diags));
  PrintDiagnostics(f.input, diags);
  PrintText(out);
  return 0;
}

int CmdSnapshot(const Flags& f) {
  const RenderConfig render = Render(f);
  const ImageVariant variant = VariantOrThrow(f.variant);
  std::vector<LexDiagnostic> diags;
  const SourceText text = VariantText(LoadSource(f.input), variant, Window(f), &diags);
  PrintDiagnostics(f.input, diags);
  const GlyphAtlas atlas = GlyphAtlas::Builtin(render.cell_width_px, render.cell_height_px);
  fs::path out = f.out;
  if (out.empty()) out = fs::path(f.input).filename().replace_extension(".png");
  WriteFile(out, Snapshot(text, render, atlas));
  std::cout << out.string() << "\n";
  return 0;
}

int CmdBuild(const Flags& f) {
  BuildOptions opt;
  opt.top_k = f.top_k;
  opt.cap = f.cap;
  opt.variants = VariantList(f.variants);
  opt.window = Window(f);
  opt.render = Render(f);
  opt.seed = f.seed;
  opt.jobs = f.jobs;
  const fs::path out = f.out.empty() ? fs::path("dataset") : fs::path(f.out);

  const DatasetManifest m = BuildDataset(f.input, out, opt);
  for (const auto& w : m.warnings) std::cerr << "warning: " << w << "\n";

  std::cout << "manifest: " << (out / kManifestFileName).string() << "\n"
            << "config_fingerprint: " << m.config_fingerprint << "\n"
            << "seed: " << m.seed << "\n"
            << "entries: " << m.entries.size() << "\n"
            << "warnings: " << m.warnings.size() << "\n";
  const auto counts = m.RecordCounts();
  std::cout << "label";
  for (Split s : kAllSplits) std::cout << "\t" << ToString(s);
  std::cout << "\n";
  for (const auto& label : m.vocab.labels) {
    std::cout << label;
    for (Split s : kAllSplits) {
      std::size_t n = 0;
      if (auto it = counts.find(s); it != counts.end()) {
        if (auto jt = it->second.find(label); jt != it->second.end()) n = jt->second;
      }
      std::cout << "\t" << n;
    }
    std::cout << "\n";
  }
  if (m.io_failures > 0) {
    std::cerr << "error: " << m.io_failures << " artifact(s) could not be written\n";
    return 1;
  }
  return 0;
}

int CmdStats(const Flags& f) {
  std::cout << FormatCorpusStats(ComputeCorpusStats(f.input, f.jobs));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Flags f;
  CLI::App app{"Code snapshot pipeline: reformat, redact, render and build datasets."};
  app.require_subcommand(1);

  app.add_option("--jobs", f.jobs, "Worker threads for build and stats (0 = all processors)")
      ->capture_default_str();
  app.add_option("--seed", f.seed, "Seed for per-label sampling")->capture_default_str();
  app.add_option("--max-rows", f.max_rows, "Window rows")->capture_default_str();
  app.add_option("--max-cols", f.max_cols, "Window columns")->capture_default_str();
  app.add_option("--indent-unit", f.indent_unit, "Spaces per brace depth")->capture_default_str();
  app.add_option("--tab-width", f.tab_width, "Tab stop width")->capture_default_str();
  app.add_option("--out-size", f.out_size, "Output image side in pixels")->capture_default_str();
  app.add_option("--variant", f.variant, "snapshot: original, reformatted or redacted")
      ->capture_default_str();
  app.add_option("--variants", f.variants, "build: comma-separated variants (may be empty)")
      ->capture_default_str();
  app.add_option("--top-k", f.top_k, "build: number of labels")->capture_default_str();
  app.add_option("--cap", f.cap, "build: max train records per label")->capture_default_str();
  app.add_option("-o,--out", f.out, "snapshot: PNG path; build: output directory (default dataset)");

  auto* reformat = app.add_subcommand("reformat", "Print the reformatted window of a file");
  auto* redact = app.add_subcommand("redact", "Print the redacted window of a file");
  auto* snapshot = app.add_subcommand("snapshot", "Render one file to PNG");
  auto* build = app.add_subcommand("build", "Build a dataset from <root>/{train,validation,test}");
  auto* stats = app.add_subcommand("stats", "Print corpus statistics");
  for (auto* sub : {reformat, redact, snapshot}) {
    sub->fallthrough();
    sub->add_option("input", f.input, "Source file")->required();
  }
  for (auto* sub : {build, stats}) {
    sub->fallthrough();
    sub->add_option("corpus_root", f.input, "Corpus root")->required();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return CmdBuild(f);
    if (stats->parsed()) return CmdStats(f);
    omp_set_num_threads(1);
    if (reformat->parsed()) return CmdReformat(f);
    if (redact->parsed()) return CmdRedact(f);
    if (snapshot->parsed()) return CmdSnapshot(f);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
