#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(TANGLEKIT_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string corpus_path(const std::string& name) {
  return std::string(TANGLEKIT_CORPUS_DIR) + "/" + name;
}

fs::path temp_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("tanglekit_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("check reports the trefoil") {
  auto r = run("check " + corpus_path("trefoil.pd") + " --json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["status"] == "ok");
  CHECK(j["predicates"]["alternating"] == true);
  CHECK(j["predicates"]["prime_projection"] == true);
  bool nonsplit = false, nontrivial = false, prime = false;
  for (const auto& c : j["certificates"]) {
    nonsplit = nonsplit || c["conclusion"] == "NonSplitLink";
    nontrivial = nontrivial || c["conclusion"] == "NonTrivialLink";
    prime = prime || c["conclusion"] == "PrimeLink";
  }
  CHECK(nonsplit);
  CHECK(nontrivial);
  CHECK(prime);
}

TEST_CASE("check rejects bad input with exit code 2") {
  fs::path dir = temp_dir("badinput");
  std::ofstream(dir / "empty.pd") << "";
  auto r = run("check " + (dir / "empty.pd").string());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("rejected") != std::string::npos);

  auto missing = run("check " + (dir / "nope.pd").string());
  CHECK(missing.exit_code == 2);

  auto multi = run("check " + corpus_path("multi_vertex_rejected.pd"));
  CHECK(multi.exit_code == 2);
  CHECK(multi.output.find("exactly one vertex") != std::string::npos);
}

TEST_CASE("check enforces mode flags") {
  auto r = run("check --tangle " + corpus_path("trefoil.pd"));
  CHECK(r.exit_code == 2);
  auto ok = run("check --tangle " + corpus_path("prime_tangle_composite_closure.pd"));
  CHECK(ok.exit_code == 0);
  auto g8 = run("check --graph8 " + corpus_path("split_loops_local_trefoil.pd") + " --json");
  CHECK(g8.exit_code == 0);
}

TEST_CASE("check report matches the golden trefoil report") {
  auto r = run("check " + corpus_path("trefoil.pd") + " --json");
  CHECK(r.exit_code == 0);
  std::ifstream golden_file(std::string(TANGLEKIT_GOLDEN_DIR) + "/trefoil_report.json");
  REQUIRE(golden_file.good());
  json golden = json::parse(golden_file);
  CHECK(json::parse(r.output) == golden);
}

TEST_CASE("batch over the regression corpus matches the golden summary") {
  auto r = run("batch " + std::string(TANGLEKIT_CORPUS_DIR) + " --json");
  CHECK(r.exit_code == 1);  // the multi-vertex file is rejected by design
  std::ifstream golden_file(std::string(TANGLEKIT_GOLDEN_DIR) + "/batch_summary.json");
  REQUIRE(golden_file.good());
  json golden = json::parse(golden_file);
  json actual = json::parse(r.output);
  CHECK(actual == golden);
}

TEST_CASE("batch output is independent of parallelism") {
  auto r1 = run("batch " + std::string(TANGLEKIT_CORPUS_DIR) + " --json --jobs 1");
  auto r4 = run("batch " + std::string(TANGLEKIT_CORPUS_DIR) + " --json --jobs 4");
  CHECK(r1.output == r4.output);
  CHECK(r1.exit_code == r4.exit_code);
}

TEST_CASE("batch over an empty directory") {
  fs::path dir = temp_dir("emptydir");
  auto r = run("batch " + dir.string() + " --json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["diagrams"] == 0);
}

TEST_CASE("gen materializes files that parse back") {
  fs::path dir = temp_dir("gen");
  auto r = run("gen torus2 5 -o " + dir.string());
  CHECK(r.exit_code == 0);
  auto chk = run("check " + (dir / "torus2_5.pd").string() + " --json");
  json j = json::parse(chk.output);
  CHECK(j["summary"]["crossings"] == 5);
  CHECK(j["predicates"]["twist_regions"].size() == 1);

  auto r2 = run("gen localknot trefoil non-split -o " + dir.string() + " --seed 2");
  CHECK(r2.exit_code == 0);
  auto chk2 = run("check --graph8 " + (dir / "localknot_trefoil_non-split_s2.pd").string());
  CHECK(chk2.exit_code == 0);
}

TEST_CASE("generator seed comes from the environment when unset") {
  fs::path dir1 = temp_dir("seed1"), dir2 = temp_dir("seed2"), dir3 = temp_dir("seed3");
  std::string pre = "env TANGLEKIT_SEED=7 ";
  std::string cmd1 = pre + std::string(TANGLEKIT_BIN) + " gen alt-tangle 5 -o " + dir1.string();
  REQUIRE(std::system((cmd1 + " > /dev/null 2>&1").c_str()) == 0);
  auto explicit7 = run("gen alt-tangle 5 -o " + dir2.string() + " --seed 7");
  CHECK(explicit7.exit_code == 0);
  std::ifstream f1(dir1 / "alt_tangle_s7_5.pd"), f2(dir2 / "alt_tangle_s7_5.pd");
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
  CHECK(!s1.str().empty());
}
