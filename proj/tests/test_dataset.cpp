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
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "doctest.h"
#include "json.hpp"
#include "snapcode/corpus_stats.hpp"
#include "snapcode/dataset.hpp"
#include "snapcode/error.hpp"
#include "snapcode/lexer.hpp"
#include "snapcode/png.hpp"
#include "support/corpus_gen.hpp"
#include "support/oracles.hpp"
#include "support/temp_dir.hpp"

using namespace snapcode;
namespace fs = std::filesystem;

namespace {

std::vector<MethodRecord> Extract(std::string_view src) {
  return ExtractMethods(SourceText::FromRaw(src), "F.java", Split::kTrain).records;
}

std::vector<std::string> Labels(const std::vector<MethodRecord>& records) {
  std::vector<std::string> out;
  for (const auto& r : records) out.push_back(r.label);
  return out;
}

MethodRecord Rec(std::string label, std::string path, std::size_t line,
                 Split split = Split::kTrain) {
  MethodRecord r;
  r.label = std::move(label);
  r.source_path = std::move(path);
  r.start_line = line;
  r.end_line = line;
  r.split = split;
  return r;
}

}  // namespace

TEST_CASE("extract the swap-shaped method") {
  const auto recs = Extract("void f(int a,int b){int t=a;a=b;b=t;}");
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].label == "f");
  CHECK(recs[0].body.text == "(int a,int b){int t=a;a=b;b=t;}");
  CHECK(recs[0].start_line == 0);
  CHECK(recs[0].end_line == 0);
}

TEST_CASE("extract methods of a class") {
  const std::string src =
      "class C {\n"
      "  int f() {\n"
      "    return 1;\n"
      "  }\n"
      "  static <T> List<T> g(List<T> xs) throws IOException, Bad { return xs; }\n"
      "}\n";
  const auto recs = Extract(src);
  CHECK(Labels(recs) == std::vector<std::string>{"f", "g"});
  CHECK(recs[0].start_line == 1);
  CHECK(recs[0].end_line == 3);
  CHECK(recs[0].split == Split::kTrain);
  CHECK(recs[0].source_path == "F.java");
}

TEST_CASE("interfaces and abstract declarations have no records") {
  CHECK(Extract("interface I {\n  void a();\n  int b(int x);\n}\n").empty());
  CHECK(Extract("abstract class A { abstract void a(); }").empty());
}

TEST_CASE("constructors are skipped with a warning") {
  const auto result = ExtractMethods(
      SourceText::FromRaw("class Point {\n  Point(int x) { this.x = x; }\n  int x() { return x; }\n}"),
      "P.java", Split::kTest);
  CHECK(Labels(result.records) == std::vector<std::string>{"x"});
  REQUIRE(result.warnings.size() == 1);
  CHECK(result.warnings[0] == "P.java:2: skipped constructor Point");
}

TEST_CASE("methods of anonymous and local classes are not counted") {
  const std::string src =
      "class A {\n"
      "  void outer() {\n"
      "    Runnable r = new Runnable() { public void run() { go(); } };\n"
      "    class Local { int inner() { return 1; } }\n"
      "  }\n"
      "  Object field = new Object() { public String toString() { return \"\"; } };\n"
      "  int last() { return 0; }\n"
      "}\n";
  const auto result = ExtractMethods(SourceText::FromRaw(src), "A.java", Split::kTrain);
  CHECK(Labels(result.records) == std::vector<std::string>{"outer", "last"});
  CHECK(std::count(result.warnings.begin(), result.warnings.end(),
                   "A.java:6: skipped anonymous class body") == 1);
}

TEST_CASE("nested and enum classes contribute their methods") {
  const std::string src =
      "class A {\n"
      "  static class B { void b() {} }\n"
      "  enum E { X, Y; int e() { return 1; } }\n"
      "  record R(int v) { int twice() { return 2 * v; } }\n"
      "  void a() { if (x) { y(); } }\n"
      "}\n";
  CHECK(Labels(Extract(src)) == std::vector<std::string>{"b", "e", "twice", "a"});
}

TEST_CASE("calls, control flow and annotations are not declarations") {
  const std::string src =
      "class A {\n"
      "  @Test(timeout = 5) public void t() { foo(1); if (a) { } while (b) { } }\n"
      "  @Inject A(Dep d) { }\n"
      "  int[] arr()[] { return null; }\n"
      "}\n";
  CHECK(Labels(Extract(src)) == std::vector<std::string>{"t", "arr"});
}

TEST_CASE("commented and quoted signatures are ignored") {
  const std::string src =
      "class A {\n"
      "  // void hidden() {}\n"
      "  /* int alsoHidden() { return 1; } */\n"
      "  String s = \"void quoted() {}\";\n"
      "  void real() {}\n"
      "}\n";
  CHECK(Labels(Extract(src)) == std::vector<std::string>{"real"});
}

TEST_CASE("lexer degradation and unbalanced input become warnings") {
  auto result = ExtractMethods(SourceText::FromRaw("class A {\n  void f() { s = \"open; }\n}\n"),
                               "D.java", Split::kTrain);
  CHECK(std::find(result.warnings.begin(), result.warnings.end(),
                  "D.java:2: unterminated string literal") != result.warnings.end());

  result = ExtractMethods(SourceText::FromRaw("class A {\n  void f() {\n    x();\n"), "U.java",
                          Split::kTrain);
  CHECK(result.records.empty());
  CHECK(std::find(result.warnings.begin(), result.warnings.end(),
                  "U.java:2: unbalanced braces in method f") != result.warnings.end());
}

TEST_CASE("tokenize body") {
  MethodRecord r;
  r.label = "m";
  r.body.text = "int i = 2;";
  CHECK(TokenizeBody(r).tokens == std::vector<std::string>{"int", "i", "=", "2", ";"});
  r.body.text = "";
  CHECK(TokenizeBody(r).tokens.empty());
  r.body.text = "(int a) { // c\n  return /* x */ a; }";
  CHECK(TokenizeBody(r).tokens ==
        std::vector<std::string>{"(", "int", "a", ")", "{", "return", "a", ";", "}"});

  testing::Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    r.body.text = testing::FuzzJavaFile(rng);
    std::vector<std::string> want;
    for (const auto& t : Lex(r.body.text).tokens) {
      if (t.kind != TokenKind::kWhitespace && t.kind != TokenKind::kNewline && !t.IsComment()) {
        want.push_back(t.lexeme);
      }
    }
    CHECK(TokenizeBody(r).tokens == want);
  }
}

TEST_CASE("build vocab orders by frequency then name") {
  std::vector<MethodRecord> recs;
  for (int i = 0; i < 5; ++i) recs.push_back(Rec("a", "x", i));
  for (int i = 0; i < 3; ++i) recs.push_back(Rec("b", "x", i));
  recs.push_back(Rec("c", "x", 0));
  const LabelVocab v = BuildVocab(recs, 2);
  CHECK(v.labels == std::vector<std::string>{"a", "b"});
  CHECK(v.k() == 2);
  CHECK(v.frequency.at("a") == 5);
  CHECK_FALSE(v.Contains("c"));

  std::vector<MethodRecord> tie = {Rec("b", "x", 0), Rec("b", "x", 1), Rec("a", "x", 0),
                                   Rec("a", "x", 1)};
  CHECK(BuildVocab(tie, 1).labels == std::vector<std::string>{"a"});
  CHECK(BuildVocab(tie, 2).labels == std::vector<std::string>{"a", "b"});

  CHECK_THROWS_AS(BuildVocab(tie, 3), InsufficientLabels);
  try {
    BuildVocab(tie, 3);
  } catch (const InsufficientLabels& e) {
    CHECK(e.wanted() == 3);
    CHECK(e.available() == 2);
  }
  CHECK_THROWS_AS(BuildVocab(tie, 0), InvalidConfig);
}

TEST_CASE("build vocab matches a brute-force counter") {
  testing::Rng rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<MethodRecord> recs;
    const std::size_t n = testing::Uniform(rng, 1, 400);
    for (std::size_t i = 0; i < n; ++i) {
      recs.push_back(Rec("L" + std::to_string(testing::Uniform(rng, 0, 25)), "p", i));
    }
    std::map<std::string, std::size_t> count;
    for (const auto& r : recs) ++count[r.label];
    const std::size_t k = testing::Uniform(rng, 1, count.size());
    // Brute force: repeatedly take the best remaining label.
    std::vector<std::string> want;
    auto remaining = count;
    while (want.size() < k) {
      auto best = remaining.begin();
      for (auto it = remaining.begin(); it != remaining.end(); ++it) {
        if (it->second > best->second) best = it;
      }
      want.push_back(best->first);
      remaining.erase(best);
    }
    const LabelVocab v = BuildVocab(recs, k);
    CHECK(v.labels == want);
    for (const auto& l : want) CHECK(v.frequency.at(l) == count[l]);
  }
}

TEST_CASE("cap per label") {
  std::vector<MethodRecord> big;
  for (int i = 0; i < 1500; ++i) big.push_back(Rec("get", "F" + std::to_string(i % 37), i));
  const auto kept = CapPerLabel(big, 1000, 7);
  CHECK(kept.size() == 1000);
  CHECK(CapPerLabel(big, 1000, 7).size() == 1000);
  auto key = [](const MethodRecord& r) { return std::tie(r.label, r.source_path, r.start_line); };
  auto keys = [&](const std::vector<MethodRecord>& v) {
    std::vector<std::tuple<std::string, std::string, std::size_t>> out;
    for (const auto& r : v) out.emplace_back(key(r));
    return out;
  };
  CHECK(keys(CapPerLabel(big, 1000, 7)) == keys(kept));
  CHECK(keys(CapPerLabel(big, 1000, 8)) != keys(kept));
  // Input order does not matter.
  auto shuffled = big;
  std::reverse(shuffled.begin(), shuffled.end());
  CHECK(keys(CapPerLabel(shuffled, 1000, 7)) == keys(kept));
  CHECK(std::is_sorted(kept.begin(), kept.end(),
                       [&](const auto& a, const auto& b) { return key(a) < key(b); }));
  // Every kept record came from the input, once.
  const auto kept_keys = keys(kept);
  const std::set unique(kept_keys.begin(), kept_keys.end());
  CHECK(unique.size() == 1000);

  std::vector<MethodRecord> small(big.begin(), big.begin() + 800);
  CHECK(CapPerLabel(small, 1000, 1).size() == 800);
  CHECK_THROWS_AS(CapPerLabel(small, 0, 1), InvalidConfig);
}

TEST_CASE("a label's sample does not depend on the other labels") {
  std::vector<MethodRecord> a, ab;
  for (int i = 0; i < 50; ++i) a.push_back(Rec("a", "F", i));
  ab = a;
  for (int i = 0; i < 70; ++i) ab.push_back(Rec("b", "G", i));
  auto only_a = CapPerLabel(ab, 10, 3);
  std::erase_if(only_a, [](const MethodRecord& r) { return r.label != "a"; });
  const auto direct = CapPerLabel(a, 10, 3);
  REQUIRE(only_a.size() == direct.size());
  for (std::size_t i = 0; i < direct.size(); ++i) CHECK(only_a[i].start_line == direct[i].start_line);
}

TEST_CASE("variant text pipelines") {
  const SourceText body = SourceText::FromRaw("(int a) {\n// c\n\treturn a;\n}");
  const WindowConfig cfg;
  CHECK(VariantText(body, ImageVariant::kOriginal, cfg).text == "(int a) {\n// c\n    return a;\n}");
  CHECK(VariantText(body, ImageVariant::kReformatted, cfg).text == "(int a) {\n    return a;\n}");
  CHECK(VariantText(body, ImageVariant::kRedacted, cfg).text == "(xxx x) {\n    xxxxxx x;\n}");
  CHECK(ParseVariant("redacted") == ImageVariant::kRedacted);
  CHECK_FALSE(ParseVariant("Redacted").has_value());
  CHECK(ParseSplit("validation") == Split::kValidation);
}

TEST_CASE("manifest serialization round-trips") {
  DatasetManifest m;
  m.seed = 9;
  m.config_json = R"({"cap":2})";
  m.config_fingerprint = "00000000000000ff";
  m.warnings = {"w1", "caf\xc3\xa9"};
  m.vocab.labels = {"a"};
  m.vocab.frequency = {{"a", 3}};
  ManifestEntry e;
  e.image_path = "redacted/train/a/000000.png";
  e.variant = ImageVariant::kRedacted;
  e.label = "a";
  e.source_path = "train/A.java";
  e.start_line = 1;
  e.end_line = 4;
  e.tokens_path = "tokens/train/000000.json";
  m.entries.push_back(e);
  ManifestEntry tokens_only = e;
  tokens_only.image_path.reset();
  tokens_only.variant.reset();
  m.entries.push_back(tokens_only);

  const std::string text = SerializeManifest(m);
  const DatasetManifest back = ParseManifest(text);
  CHECK(back.entries == m.entries);
  CHECK(back.seed == 9);
  CHECK(back.config_json == m.config_json);
  CHECK(back.config_fingerprint == m.config_fingerprint);
  CHECK(back.warnings == m.warnings);
  CHECK(back.vocab.labels == m.vocab.labels);
  CHECK(SerializeManifest(back) == text);

  CHECK_THROWS_AS(ParseManifest("{\"kind\":\"entry\"}\n"), Error);
  CHECK_THROWS_AS(ParseManifest("not json\n"), Error);
  CHECK_THROWS_AS(ParseManifest(""), Error);
}

TEST_CASE("build dataset writes the documented tree") {
  testing::TempDir tmp;
  const fs::path corpus = tmp.path() / "corpus";
  const fs::path out = tmp.path() / "out";
  const auto planted = testing::WritePlantedCorpus(
      corpus,
      {{"getName", {6, 2, 2}}, {"setName", {5, 1, 0}}, {"run", {4, 0, 1}}, {"rare", {1, 3, 3}}},
      101, 4);

  BuildOptions opt;
  opt.top_k = 3;
  opt.cap = 4;
  opt.render.output_size_px = 64;
  opt.seed = 5;
  const DatasetManifest m = BuildDataset(corpus, out, opt);

  CHECK(m.vocab.labels == std::vector<std::string>{"getName", "setName", "run"});
  CHECK(m.io_failures == 0);
  const auto counts = m.RecordCounts();
  CHECK(counts.at(Split::kTrain).at("getName") == 4);
  CHECK(counts.at(Split::kTrain).at("setName") == 4);
  CHECK(counts.at(Split::kTrain).at("run") == 4);
  CHECK(counts.at(Split::kValidation).at("getName") == 2);
  CHECK(counts.at(Split::kTest).at("run") == 1);
  for (const auto& [split, labels] : counts) CHECK_FALSE(labels.contains("rare"));

  // Entries: one per record and variant, sorted by split, label, path, span.
  CHECK(m.entries.size() == 3 * (12 + 3 + 3));
  auto order = [](const ManifestEntry& e) {
    return std::tie(e.split, e.label, e.source_path, e.start_line, e.end_line);
  };
  CHECK(std::is_sorted(m.entries.begin(), m.entries.end(),
                       [&](const auto& a, const auto& b) { return order(a) < order(b); }));

  // The file on disk parses to the same manifest.
  const DatasetManifest disk = ReadManifest(out / kManifestFileName);
  CHECK(disk.entries == m.entries);
  CHECK(disk.config_fingerprint == m.config_fingerprint);
  CHECK(disk.seed == 5);

  for (const auto& e : m.entries) {
    REQUIRE(e.image_path.has_value());
    REQUIRE(e.variant.has_value());
    CHECK(fs::path(*e.image_path).is_relative());
    CHECK(e.image_path->starts_with(std::string(ToString(*e.variant)) + "/" +
                                    std::string(ToString(e.split)) + "/" + e.label + "/"));
    const auto img = testing::ReadGrayPng(ReadFileBytes(out / *e.image_path));
    REQUIRE(img.has_value());
    CHECK(img->width == 64);
    CHECK(img->height == 64);
    CHECK(e.tokens_path.starts_with("tokens/" + std::string(ToString(e.split)) + "/"));
    const auto doc = nlohmann::json::parse(ReadTextFile(out / e.tokens_path));
    CHECK(doc.at("label") == e.label);
    CHECK_FALSE(doc.at("tokens").empty());
    CHECK(e.source_path.starts_with(std::string(ToString(e.split)) + "/"));
    CHECK(e.start_line <= e.end_line);
  }
  (void)planted;
}

TEST_CASE("manifest lines follow the consumer contract") {
  testing::TempDir tmp;
  testing::WritePlantedCorpus(tmp.path() / "c", {{"a", {3, 1, 1}}, {"b", {2, 1, 1}}}, 3, 2);
  BuildOptions opt;
  opt.top_k = 2;
  opt.render.output_size_px = 32;
  BuildDataset(tmp.path() / "c", tmp.path() / "o", opt);
  const auto lines = testing::Lines(ReadTextFile(tmp.path() / "o" / "manifest.jsonl"));
  REQUIRE(lines.size() > 1);

  const auto header = nlohmann::json::parse(lines[0]);
  CHECK(header.at("kind") == "header");
  CHECK(header.at("format") == "snapcode-manifest/1");
  CHECK(header.at("config_fingerprint").get<std::string>().size() == 16);
  CHECK(header.at("seed") == 0);
  CHECK(header.at("warnings").is_array());
  CHECK(header.at("vocab").size() == 2);
  CHECK(header.at("vocab")[0].at("label") == "a");
  CHECK(header.at("vocab")[0].at("train_count") == 3);
  const auto& cfg = header.at("config");
  for (const char* key : {"top_k", "cap", "variants", "window", "render"}) CHECK(cfg.contains(key));
  for (const char* key : {"max_rows", "max_cols", "indent_unit", "tab_width"}) {
    CHECK(cfg.at("window").contains(key));
  }
  for (const char* key : {"rows", "cols", "cell_width_px", "cell_height_px", "output_size_px",
                          "background", "ink", "atlas_id"}) {
    CHECK(cfg.at("render").contains(key));
  }

  std::set<std::string> labels;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto e = nlohmann::json::parse(lines[i]);
    CHECK(e.at("kind") == "entry");
    for (const char* key : {"image_path", "label", "split", "variant", "source_path", "span",
                            "tokens_path"}) {
      CHECK(e.contains(key));
    }
    CHECK(e.at("span").size() == 2);
    labels.insert(e.at("label").get<std::string>());
  }
  CHECK(labels == std::set<std::string>{"a", "b"});
}

TEST_CASE("empty variant list writes token files only") {
  testing::TempDir tmp;
  testing::WritePlantedCorpus(tmp.path() / "c", {{"a", {3, 1, 0}}, {"b", {2, 0, 1}}}, 4, 3);
  BuildOptions opt;
  opt.top_k = 2;
  opt.variants.clear();
  const DatasetManifest m = BuildDataset(tmp.path() / "c", tmp.path() / "o", opt);
  CHECK(m.entries.size() == 7);
  for (const auto& e : m.entries) {
    CHECK_FALSE(e.image_path.has_value());
    CHECK_FALSE(e.variant.has_value());
    CHECK(fs::exists(tmp.path() / "o" / e.tokens_path));
  }
  for (auto v : kAllVariants) CHECK_FALSE(fs::exists(tmp.path() / "o" / ToString(v)));
}

TEST_CASE("build errors") {
  testing::TempDir tmp;
  testing::WritePlantedCorpus(tmp.path() / "c", {{"a", {3, 1, 0}}}, 4, 3);
  BuildOptions opt;
  opt.top_k = 2;
  CHECK_THROWS_AS(BuildDataset(tmp.path() / "c", tmp.path() / "o", opt), InsufficientLabels);
  CHECK_THROWS_AS(BuildDataset(tmp.path() / "missing", tmp.path() / "o", opt), IoFailure);
  opt.top_k = 1;
  opt.cap = 0;
  CHECK_THROWS_AS(BuildDataset(tmp.path() / "c", tmp.path() / "o", opt), InvalidConfig);
}

TEST_CASE("worker count does not change the output") {
  testing::TempDir tmp;
  testing::WritePlantedCorpus(tmp.path() / "c", {{"a", {9, 2, 2}}, {"b", {7, 2, 1}}, {"c", {4, 1, 1}}},
                              8, 3);
  BuildOptions opt;
  opt.top_k = 3;
  opt.cap = 5;
  opt.render.output_size_px = 48;
  opt.jobs = 1;
  const auto m1 = BuildDataset(tmp.path() / "c", tmp.path() / "o1", opt);
  opt.jobs = 4;
  const auto m4 = BuildDataset(tmp.path() / "c", tmp.path() / "o4", opt);
  CHECK(ReadTextFile(tmp.path() / "o1" / "manifest.jsonl") ==
        ReadTextFile(tmp.path() / "o4" / "manifest.jsonl"));
  for (const auto& e : m1.entries) {
    CHECK(ReadFileBytes(tmp.path() / "o1" / *e.image_path) ==
          ReadFileBytes(tmp.path() / "o4" / *e.image_path));
  }
  CHECK(m1.config_fingerprint == m4.config_fingerprint);

  opt.cap = 6;
  const auto other = BuildDataset(tmp.path() / "c", tmp.path() / "o6", opt);
  CHECK(other.config_fingerprint != m1.config_fingerprint);
}

TEST_CASE("corpus stats count what extraction finds") {
  testing::TempDir tmp;
  const auto corpus = testing::WritePlantedCorpus(
      tmp.path() / "c", {{"x", {5, 2, 0}}, {"y", {3, 0, 4}}}, 12, 3);
  const CorpusStats stats = ComputeCorpusStats(tmp.path() / "c");
  for (const auto& [key, count] : testing::PlantedCounts(corpus)) {
    CHECK(stats.splits[key.first].label_counts.at(key.second) == count);
  }
  CHECK(stats.of(Split::kTrain).methods == 8);
  CHECK(stats.of(Split::kTest).methods == 4);
  std::size_t files = 0, hist = 0;
  for (const auto& s : stats.splits) {
    files += s.files;
    for (auto n : s.length_histogram) hist += n;
  }
  CHECK(files == corpus.files);
  CHECK(hist == 14);
  // One constructor warning per generated file.
  CHECK(stats.of(Split::kTrain).warnings == stats.of(Split::kTrain).files);

  const std::string report = FormatCorpusStats(stats);
  CHECK(report.find("[train] files=") != std::string::npos);
  CHECK(report.find("    5\tx\n    3\ty\n") != std::string::npos);
}

TEST_CASE("stats on an empty corpus are all zero") {
  testing::TempDir tmp;
  fs::create_directories(tmp.path() / "train");
  const CorpusStats stats = ComputeCorpusStats(tmp.path());
  for (const auto& s : stats.splits) {
    CHECK(s.files == 0);
    CHECK(s.methods == 0);
    CHECK(s.label_counts.empty());
  }
  CHECK_THROWS_AS(ComputeCorpusStats(tmp.path() / "nope"), IoFailure);
}

TEST_CASE("length buckets") {
  CHECK(LengthBucketIndex(1) == 0);
  CHECK(LengthBucketIndex(5) == 1);
  CHECK(LengthBucketIndex(6) == 2);
  CHECK(LengthBucketIndex(100) == 6);
  CHECK(LengthBucketIndex(101) == 7);
  CHECK(LengthBucketIndex(100000) == 7);
}
