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

// Drives the snapcode executable through the shell.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "snapcode/dataset.hpp"
#include "snapcode/png.hpp"
#include "support/corpus_gen.hpp"
#include "support/oracles.hpp"
#include "support/temp_dir.hpp"

#ifndef SNAPCODE_CLI_PATH
#error "SNAPCODE_CLI_PATH must name the snapcode executable"
#endif

using namespace snapcode;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run Cli(const std::string& args) {
  const std::string cmd = std::string(SNAPCODE_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r{-1, ""};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string Quote(const fs::path& p) { return "'" + p.string() + "'"; }

constexpr const char* kFoo =
    "class Foo {\n"
    "  // a comment\n"
    "  int add(int a,  int b) {\n"
    "\n"
    "\treturn a + b;\n"
    "  }\n"
    "  void a() {}\n  void b() {}\n  void c() {}\n  void d() {}\n  void e() {}\n  void f() {}\n"
    "}\n";

}  // namespace

TEST_CASE("cli reformat and redact") {
  testing::TempDir tmp;
  testing::WriteText(tmp.path() / "Foo.java", kFoo);
  const Run r = Cli("reformat " + Quote(tmp.path() / "Foo.java"));
  CHECK(r.status == 0);
  CHECK(r.out.starts_with("class Foo {\n    int add(int a, int b) {\n        return a + b;\n    }\n"));

  const Run five = Cli("reformat --max-rows 5 " + Quote(tmp.path() / "Foo.java"));
  CHECK(five.status == 0);
  CHECK(testing::Lines(five.out).size() == 5);

  const Run red = Cli("redact " + Quote(tmp.path() / "Foo.java"));
  CHECK(red.status == 0);
  CHECK(red.out.starts_with("xxxxx xxx {\n    xxx xxx(xxx x, xxx x) {\n"));

  CHECK(Cli("reformat " + Quote(tmp.path() / "missing.java")).status == 1);
}

TEST_CASE("cli snapshot") {
  testing::TempDir tmp;
  testing::WriteText(tmp.path() / "Foo.java", kFoo);
  const fs::path a = tmp.path() / "a.png";
  const fs::path b = tmp.path() / "b.png";
  const Run r = Cli("snapshot --variant redacted " + Quote(tmp.path() / "Foo.java") + " -o " + Quote(a));
  CHECK(r.status == 0);
  CHECK(r.out == a.string() + "\n");
  CHECK(Cli("snapshot --variant redacted " + Quote(tmp.path() / "Foo.java") + " -o " + Quote(b)).status == 0);
  CHECK(ReadFileBytes(a) == ReadFileBytes(b));
  const auto img = testing::ReadGrayPng(ReadFileBytes(a));
  REQUIRE(img.has_value());
  CHECK(img->width == 512);

  CHECK(Cli("snapshot --out-size 256 " + Quote(tmp.path() / "Foo.java") + " -o " + Quote(a)).status == 0);
  CHECK(testing::ReadGrayPng(ReadFileBytes(a))->width == 256);

  CHECK(Cli("snapshot --variant bogus " + Quote(tmp.path() / "Foo.java") + " -o " + Quote(a)).status == 1);
  CHECK(Cli("snapshot " + Quote(tmp.path() / "Foo.java") + " -o " + Quote(tmp.path() / "no" / "dir.png")).status == 1);
}

TEST_CASE("cli build and stats") {
  testing::TempDir tmp;
  const fs::path corpus = tmp.path() / "corpus";
  testing::WritePlantedCorpus(corpus, {{"get", {4, 1, 1}}, {"set", {3, 1, 0}}, {"run", {2, 0, 1}}}, 6, 3);

  const std::string base = "build " + Quote(corpus) + " --top-k 2 --cap 3 --out-size 32 --seed 7";
  const Run r1 = Cli(base + " --variants reformatted,redacted -o " + Quote(tmp.path() / "d1"));
  CHECK(r1.status == 0);
  CHECK(r1.out.find("label\ttrain\tvalidation\ttest\nget\t3\t1\t1\nset\t3\t1\t0\n") != std::string::npos);
  const Run r2 = Cli(base + " --variants reformatted,redacted -o " + Quote(tmp.path() / "d2"));
  CHECK(r2.status == 0);
  CHECK(ReadFileBytes(tmp.path() / "d1" / "manifest.jsonl") ==
        ReadFileBytes(tmp.path() / "d2" / "manifest.jsonl"));
  const DatasetManifest m = ReadManifest(tmp.path() / "d1" / "manifest.jsonl");
  CHECK(m.seed == 7);
  CHECK(m.entries.size() == 2 * 9);
  CHECK_FALSE(fs::exists(tmp.path() / "d1" / "original"));

  const Run empty = Cli(base + " --variants '' -o " + Quote(tmp.path() / "d3"));
  CHECK(empty.status == 0);
  CHECK(ReadManifest(tmp.path() / "d3" / "manifest.jsonl").entries.size() == 9);

  CHECK(Cli("build " + Quote(corpus) + " --top-k 999999 -o " + Quote(tmp.path() / "d4")).status == 1);
  CHECK(Cli("build " + Quote(tmp.path() / "nope") + " -o " + Quote(tmp.path() / "d5")).status == 1);

  const Run stats = Cli("stats " + Quote(corpus));
  CHECK(stats.status == 0);
  CHECK(stats.out.find("[train] files=") != std::string::npos);
  CHECK(stats.out.find("    4\tget\n    3\tset\n    2\trun\n") != std::string::npos);
  CHECK(Cli("stats " + Quote(tmp.path() / "nope")).status == 1);
}
