#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dynemb/cli.hpp"
#include "dynemb/tempograph.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dynemb");
  std::ostringstream out, err;
  const int code = dynemb::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The manifest records the output directory, which differs between the two runs.
std::string without_out_line(const std::string& text) {
  std::istringstream in(text);
  std::string line, kept;
  while (std::getline(in, line))
    if (line.rfind("out=", 0) != 0) kept += line + "\n";
  return kept;
}

std::size_t data_rows(const fs::path& csv) {
  std::istringstream in(slurp(csv));
  std::string line;
  std::size_t n = 0;
  std::getline(in, line);
  while (std::getline(in, line)) n += !line.empty();
  return n;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / "dynemb-cli-tests" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

fs::path small_graph(const fs::path& dir) {
  const fs::path f = dir / "g.txt";
  const Run r = run({"synth", "--nodes", "60", "--communities", "3", "--snapshots", "4", "--p-in", "0.3",
                     "--p-out", "0.02", "--seed", "5", "--out", f.string()});
  REQUIRE(r.code == 0);
  return f;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("synth then ingest reports the generated counts") {
  const auto dir = scratch("ingest");
  const auto f = small_graph(dir);
  dynemb::SbmParams p;
  p.nodes = 60;
  p.communities = 3;
  p.snapshots = 4;
  p.p_in = 0.3;
  p.p_out = 0.02;
  p.seed = 5;
  const auto g = dynemb::synth_dynamic_sbm(p).graph;
  const Run r = run({"ingest", "--input", f.string(), "--prebinned"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("nodes 60\n") != std::string::npos);
  CHECK(r.out.find("edges " + std::to_string(g.distinct_edge_count()) + "\n") != std::string::npos);
  CHECK(r.out.find("snapshots 4\n") != std::string::npos);
}

TEST_CASE("evaluate is byte-identical across reruns") {
  const auto dir = scratch("determinism");
  const auto f = small_graph(dir);
  for (const char* out : {"a", "b"}) {
    const Run r = run({"evaluate", "--input", f.string(), "--prebinned", "--dim", "8", "--repeats", "1",
                       "--model", "static,ret,homolt,heterlt,bcgd", "--bcgd-iterations", "20", "--out",
                       (dir / out).string()});
    REQUIRE(r.code == 0);
  }
  for (const char* file : {"metrics.csv", "summary.txt", "run-manifest.txt"}) {
    CAPTURE(file);
    CHECK(without_out_line(slurp(dir / "a" / file)) == without_out_line(slurp(dir / "b" / file)));
  }
  CHECK(slurp(dir / "a" / "metrics.csv") == slurp(dir / "b" / "metrics.csv"));
  CHECK(slurp(dir / "a" / "metrics.csv").rfind("dataset,model,embedder,dim,repeat,", 0) == 0);
}

TEST_CASE("sweeping two dimensions doubles the rows") {
  const auto dir = scratch("sweep");
  const auto f = small_graph(dir);
  const std::vector<std::string> common{"--input", f.string(), "--prebinned", "--repeats", "2",
                                        "--model", "static,ret"};
  auto args = common;
  args.insert(args.begin(), "evaluate");
  for (auto s : {"--dim", "8", "--out", (dir / "single").string().c_str()}) args.push_back(s);
  REQUIRE(run(args).code == 0);
  args = common;
  args.insert(args.begin(), "sweep-dim");
  for (auto s : {"--dims", "8,16", "--out", (dir / "sweep").string().c_str()}) args.push_back(s);
  const Run r = run(args);
  INFO(r.err);
  REQUIRE(r.code == 0);
  CHECK(data_rows(dir / "sweep" / "sweep.csv") == 2 * data_rows(dir / "single" / "metrics.csv"));
}

TEST_CASE("embed writes one matrix per snapshot") {
  const auto dir = scratch("embed");
  const auto f = small_graph(dir);
  Run r = run({"embed", "--input", f.string(), "--prebinned", "--dim", "4", "--model", "ret", "--out",
               (dir / "ret").string()});
  REQUIRE(r.code == 0);
  for (int t = 0; t < 4; ++t) CHECK(fs::exists(dir / "ret" / ("phi_" + std::to_string(t) + ".emb")));
  r = run({"embed", "--input", f.string(), "--prebinned", "--dim", "4", "--model", "heterlt", "--out",
           (dir / "lt").string()});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "lt" / "W.transform"));
  CHECK(fs::exists(dir / "lt" / "phi_next.emb"));
}

TEST_CASE("unknown flags and bad values name the field") {
  const auto dir = scratch("errors");
  const auto f = small_graph(dir);
  Run r = run({"evaluate", "--input", f.string(), "--prebinned", "--bogus-flag", "3", "--out", dir.string()});
  CHECK(r.code != 0);
  CHECK(r.err.find("--bogus-flag") != std::string::npos);

  r = run({"evaluate", "--input", f.string(), "--prebinned", "--theta", "1.5", "--out", dir.string()});
  CHECK(r.code != 0);
  CHECK(r.err.find("theta") != std::string::npos);

  r = run({"evaluate", "--input", f.string(), "--out", dir.string()});
  CHECK(r.code != 0);
  CHECK(r.err.find("snapshots") != std::string::npos);

  r = run({"evaluate", "--input", f.string(), "--prebinned", "--model", "lstm", "--out", dir.string()});
  CHECK(r.code != 0);
  CHECK(r.err.find("model") != std::string::npos);

  r = run({"evaluate", "--input", (dir / "missing.txt").string(), "--prebinned", "--out", dir.string()});
  CHECK(r.code != 0);
  CHECK(r.err.find("input") != std::string::npos);

  r = run({"frobnicate"});
  CHECK(r.code != 0);
}

TEST_CASE("config file values yield to flags and manifests replay") {
  const auto dir = scratch("config");
  const auto f = small_graph(dir);
  {
    std::ofstream cfg(dir / "run.cfg");
    cfg << "# comment\nprebinned=true\ndim=4\nrepeats=3\nmodel=static\n";
  }
  Run r = run({"evaluate", "--config", (dir / "run.cfg").string(), "--input", f.string(), "--repeats", "1",
               "--out", (dir / "a").string()});
  REQUIRE(r.code == 0);
  CHECK(data_rows(dir / "a" / "metrics.csv") == 3);  // one repeat plus mean and sd
  CHECK(slurp(dir / "a" / "metrics.csv").find(",Static,tsvd,4,") != std::string::npos);

  r = run({"evaluate", "--config", (dir / "a" / "run-manifest.txt").string(), "--out", (dir / "b").string()});
  REQUIRE(r.code == 0);
  CHECK(slurp(dir / "a" / "metrics.csv") == slurp(dir / "b" / "metrics.csv"));

  {
    std::ofstream cfg(dir / "bad.cfg");
    cfg << "dimm=4\n";
  }
  r = run({"evaluate", "--config", (dir / "bad.cfg").string(), "--input", f.string(), "--prebinned", "--out",
           (dir / "c").string()});
  CHECK(r.code != 0);
  CHECK(r.err.find("dimm") != std::string::npos);
}

}
