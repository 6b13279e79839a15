#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "qrlab/catalog.hpp"
#include "qrlab/text_format.hpp"
#include "qrlab/transform.hpp"

using namespace qrlab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "qrlab_cli_unit";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& body) {
  const auto path = scratch() / name;
  std::ofstream(path, std::ios::binary) << body;
  return path.string();
}

std::string catalog_file(const char* name) {
  return write_file(std::string(name) + ".alg", serialize_algebra(find_catalog_entry(name)->algebra));
}

}  // namespace

TEST_CASE("check with lemmas on mv3") {
  const Run r = run({"check", catalog_file("mv3"), "--lemmas", "--format", "machine"});
  CHECK(r.code == cli::kExitPass);
  for (const char* id : {"E1", "E2", "E3", "E4", "LEM-i", "LEM-ii", "LEM-iii", "LEM-iv", "LEM-v",
                         "LEM-vi", "LEM-vii"}) {
    CHECK(r.out.find("LAW " + std::string(id) + " PASS\n") != std::string::npos);
  }
}

TEST_CASE("check reports E4 on a broken file") {
  auto e = std::get<EffectAlgebra>(find_catalog_entry("boolean2")->algebra);
  e.plus.set(1, 1, 1);
  const Run r = run({"--format", "machine", "check", write_file("broken.alg", serialize_algebra(e))});
  CHECK(r.code == cli::kExitViolations);
  CHECK(r.out.find("LAW E4 FAIL x=1\n") != std::string::npos);
}

TEST_CASE("divisibility flag") {
  CHECK(run({"check", catalog_file("mv3-cqrl"), "--divisibility"}).code == cli::kExitPass);
  CHECK(run({"check", catalog_file("mv3-qrl"), "--divisibility", "--lemmas"}).code == cli::kExitPass);
  CHECK(run({"check", catalog_file("mv3"), "--divisibility"}).code == cli::kExitError);
}

TEST_CASE("roundtrip prints the verdict") {
  const Run r = run({"roundtrip", catalog_file("mv3")});
  CHECK(r.code == cli::kExitPass);
  CHECK(r.out.rfind("IDENTICAL\n", 0) == 0);
  CHECK(run({"roundtrip", catalog_file("diamond-pseudo")}).code == cli::kExitPass);
  CHECK(run({"roundtrip", catalog_file("mv3-cqrl")}).code == cli::kExitError);
}

TEST_CASE("transform in all four directions") {
  const Run c = run({"transform", "--to", "cqrl", catalog_file("mv3")});
  REQUIRE(c.code == cli::kExitPass);
  CHECK(c.out == serialize_algebra(find_catalog_entry("mv3-cqrl")->algebra));
  const std::string cfile = write_file("t.alg", c.out);
  const Run e = run({"transform", "--to", "effect", cfile});
  CHECK(e.out == serialize_algebra(find_catalog_entry("mv3")->algebra));
  const Run q = run({"transform", "--to", "qrl", catalog_file("diamond-pseudo")});
  CHECK(q.out == serialize_algebra(find_catalog_entry("diamond-qrl")->algebra));
  const Run p = run({"transform", "--to", "pseudo", catalog_file("diamond-qrl")});
  CHECK(p.out == serialize_algebra(find_catalog_entry("diamond-pseudo")->algebra));
  CHECK(run({"transform", "--to", "qrl", catalog_file("mv3")}).code == cli::kExitError);
  CHECK(run({"transform", "--to", "nowhere", catalog_file("mv3")}).code == cli::kExitError);
}

TEST_CASE("order output") {
  const Run r = run({"order", catalog_file("diamond")});
  CHECK(r.code == cli::kExitPass);
  CHECK(r.out.find("a <= a 1\n") != std::string::npos);
  CHECK(r.out.find("lattice yes\n") != std::string::npos);
}

TEST_CASE("enumerate summary and emitted corpus") {
  const auto dir = scratch() / "emit";
  std::filesystem::remove_all(dir);
  const Run r = run({"enumerate", "--kind", "effect", "--size", "4", "--emit", dir.string()});
  CHECK(r.code == cli::kExitPass);
  CHECK(r.out == "kind effect\nsize 4\nmodels 4\niso-classes 3\nemitted 4\ntruncated no\n");
  for (int i = 1; i <= 4; ++i) {
    const auto file = dir / ("effect-4-" + std::to_string(i) + ".alg");
    REQUIRE(std::filesystem::exists(file));
    CHECK(run({"check", file.string()}).code == cli::kExitPass);
  }
  CHECK(run({"enumerate", "--kind", "effect", "--size", "9"}).code == cli::kExitError);
  CHECK(run({"enumerate", "--kind", "ring", "--size", "3"}).code == cli::kExitError);
  const Run capped = run({"enumerate", "--kind", "effect", "--size", "5", "--limit", "2"});
  CHECK(capped.out.find("truncated yes\n") != std::string::npos);
}

TEST_CASE("probe output is labelled") {
  const Run r = run({"probe", "--name", "cqrl-image", "--size", "3"});
  CHECK(r.code == cli::kExitPass);
  CHECK(r.out.rfind(kProbeLabel, 0) == 0);
  CHECK(run({"probe", "--name", "qrl-image", "--size", "4"}).code == cli::kExitPass);
}

TEST_CASE("catalog listing and lookup") {
  const Run all = run({"catalog"});
  CHECK(all.code == cli::kExitPass);
  CHECK(all.out.find("mv3 effect 3") != std::string::npos);
  const Run one = run({"catalog", "mv3"});
  CHECK(one.out == serialize_algebra(find_catalog_entry("mv3")->algebra));
  CHECK(run({"catalog", "nonesuch"}).code == cli::kExitError);
}

TEST_CASE("usage and structural errors exit with 2") {
  CHECK(run({}).code == cli::kExitError);
  CHECK(run({"frobnicate"}).code == cli::kExitError);
  CHECK(run({"check", "/nonexistent/file.alg"}).code == cli::kExitError);
  const Run bad = run({"check", write_file("bad.alg", "kind effect\nsize 3\nlabels 0 a\n")});
  CHECK(bad.code == cli::kExitError);
  CHECK(bad.err.find("line 3") != std::string::npos);
  CHECK(run({"--help"}).code == cli::kExitPass);
}
