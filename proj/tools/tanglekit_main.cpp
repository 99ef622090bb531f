#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tanglekit/certify.hpp"
#include "tanglekit/generators.hpp"
#include "tanglekit/report.hpp"

namespace fs = std::filesystem;
using tanglekit::Json;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

uint64_t default_seed() {
  if (const char* env = std::getenv("TANGLEKIT_SEED")) return std::strtoull(env, nullptr, 10);
  return 1;
}

int run_check(const std::string& file, bool expect_tangle, bool expect_graph8, bool json_out) {
  std::string text;
  try {
    text = read_file(file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  Json report = tanglekit::report_file(fs::path(file).filename().string(), text);
  bool ok = report["status"] == "ok";
  if (ok) {
    std::string mode = report["mode"];
    if ((expect_tangle && mode != "tangle") || (expect_graph8 && mode != "graph8")) {
      std::cerr << "error: " << file << " is a " << mode << " diagram\n";
      return 2;
    }
  }
  if (json_out) {
    std::cout << report.dump(2) << "\n";
  } else if (ok) {
    std::cout << file << ": " << report["mode"].get<std::string>() << ", "
              << report["summary"]["crossings"] << " crossings\n";
    for (const auto& cert : report["certificates"])
      std::cout << "  " << cert["conclusion"].get<std::string>() << " ["
                << cert["rule"].get<std::string>() << "]\n";
  } else {
    std::cout << file << ": rejected: " << report["error"]["message"].get<std::string>()
              << "\n";
  }
  return ok ? 0 : 2;
}

int run_batch(const std::string& dir, int jobs, bool json_out) {
  std::vector<fs::path> files;
  if (fs::exists(dir))
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".pd")
        files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<Json> reports(files.size());
  std::mutex mu;
  size_t next = 0;
  auto worker = [&]() {
    for (;;) {
      size_t i;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= files.size()) return;
        i = next++;
      }
      std::string text;
      try {
        text = read_file(files[i]);
      } catch (const std::exception& e) {
        reports[i] = Json{{"file", files[i].filename().string()},
                          {"status", "rejected"},
                          {"error", {{"message", e.what()}}}};
        continue;
      }
      reports[i] = tanglekit::report_file(files[i].filename().string(), text);
    }
  };
  jobs = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  Json summary;
  summary["schema"] = tanglekit::kBatchSchema;
  summary["diagrams"] = files.size();
  int rejected = 0;
  std::map<std::string, int> totals;
  Json per_file = Json::array();
  for (const Json& r : reports) {
    Json entry;
    entry["file"] = r["file"];
    entry["status"] = r["status"];
    if (r["status"] == "ok") {
      entry["mode"] = r["mode"];
      Json certs = Json::array();
      for (const auto& cert : r["certificates"]) {
        certs.push_back(cert["conclusion"]);
        totals[cert["conclusion"].get<std::string>()]++;
      }
      entry["certificates"] = certs;
    } else {
      ++rejected;
      entry["error"] = r["error"]["message"];
    }
    per_file.push_back(entry);
  }
  summary["rejected"] = rejected;
  summary["certificate_totals"] = totals;
  summary["files"] = per_file;

  if (json_out) {
    std::cout << summary.dump(2) << "\n";
  } else {
    std::cout << files.size() << " diagrams, " << rejected << " rejected\n";
    for (const auto& [name, count] : totals) std::cout << "  " << name << ": " << count << "\n";
  }
  return rejected > 0 ? 1 : 0;
}

int run_gen(const std::string& family, std::vector<std::string> params,
            const std::string& outdir, uint64_t seed) {
  using namespace tanglekit;
  fs::create_directories(outdir);
  auto param = [&](size_t i) -> long {
    if (i >= params.size()) throw std::runtime_error("missing parameter");
    return std::stol(params[i]);
  };
  std::vector<std::pair<std::string, Diagram>> outputs;
  if (family == "torus2") {
    long n = param(0);
    outputs.emplace_back("torus2_" + std::to_string(n), gen_torus2(static_cast<int>(n)));
  } else if (family == "pretzel") {
    long p = param(0), q = param(1), r = param(2);
    outputs.emplace_back(
        "pretzel_" + std::to_string(p) + "_" + std::to_string(q) + "_" + std::to_string(r),
        gen_pretzel(static_cast<int>(p), static_cast<int>(q), static_cast<int>(r)));
  } else if (family == "alt-tangle") {
    long size = param(0);
    long count = params.size() > 1 ? param(1) : 1;
    for (long i = 0; i < count; ++i)
      outputs.emplace_back("alt_tangle_s" + std::to_string(seed + i) + "_" + std::to_string(size),
                           gen_alternating_tangle(seed + i, static_cast<int>(size)));
  } else if (family == "pos-tangle") {
    long size = param(0);
    long count = params.size() > 1 ? param(1) : 1;
    for (long i = 0; i < count; ++i)
      outputs.emplace_back("pos_tangle_s" + std::to_string(seed + i) + "_" + std::to_string(size),
                           gen_positive_tangle(seed + i, static_cast<int>(size)));
  } else if (family == "localknot") {
    if (params.size() < 2) throw std::runtime_error("localknot needs <knot> <variant>");
    KnotKind knot = params[0] == "figure8" ? KnotKind::Figure8 : KnotKind::Trefoil;
    LocalKnotVariant variant = params[1] == "non-split" ? LocalKnotVariant::NonSplit
                                                        : LocalKnotVariant::VertexSplit;
    auto gt = gen_local_knot_graph8(seed, knot, variant);
    outputs.emplace_back("localknot_" + params[0] + "_" + params[1] + "_s" + std::to_string(seed),
                         std::move(gt.graph));
  } else {
    throw std::runtime_error("unknown family " + family +
                             " (torus2, pretzel, alt-tangle, pos-tangle, localknot)");
  }
  for (const auto& [name, d] : outputs) {
    fs::path path = fs::path(outdir) / (name + ".pd");
    write_file(path, serialize(d) + "\n");
    std::cout << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tanglekit: certificates for link, tangle and spatial-graph projections"};
  app.require_subcommand(1);

  std::string file, dir, family, outdir = ".";
  std::vector<std::string> params;
  bool flag_tangle = false, flag_graph8 = false, flag_json = false;
  int jobs = 1;
  uint64_t seed = default_seed();

  CLI::App* check = app.add_subcommand("check", "analyze one diagram file");
  check->add_option("file", file, "diagram file")->required();
  check->add_flag("--tangle", flag_tangle, "require a tangle diagram");
  check->add_flag("--graph8", flag_graph8, "require a graph8 diagram");
  check->add_flag("--json", flag_json, "emit the full JSON report");

  CLI::App* batch = app.add_subcommand("batch", "analyze every .pd file in a directory");
  batch->add_option("dir", dir, "directory of .pd files")->required();
  batch->add_option("--jobs", jobs, "worker threads");
  batch->add_flag("--json", flag_json, "emit the JSON summary");

  CLI::App* gen = app.add_subcommand("gen", "materialize generator families");
  gen->add_option("family", family, "torus2 | pretzel | alt-tangle | pos-tangle | localknot")
      ->required();
  gen->add_option("params", params, "family parameters");
  gen->add_option("-o,--out", outdir, "output directory");
  gen->add_option("--seed", seed, "generator seed (default TANGLEKIT_SEED or 1)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(file, flag_tangle, flag_graph8, flag_json);
    if (batch->parsed()) return run_batch(dir, jobs, flag_json);
    if (gen->parsed()) return run_gen(family, params, outdir, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
