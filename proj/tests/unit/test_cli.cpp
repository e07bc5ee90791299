#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qperc/cli.hpp"
#include "qperc/gen.hpp"

namespace fs = std::filesystem;
using qperc::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("qperc_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("oracle prints the exact Q_2 value") {
  const auto dir = scratch("oracle");
  const auto r = invoke({"oracle", "--n", "2", "--p", "0.5", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("chi_exact 2.5625") != std::string::npos);
  CHECK(r.out.find("2000 replicates") != std::string::npos);
  CHECK(fs::exists(dir / "oracle.csv"));
  CHECK(fs::exists(dir / "oracle_pmf.csv"));
  const std::string manifest = slurp(dir / "oracle_manifest.txt");
  CHECK(manifest.find("seed = 1") != std::string::npos);
  CHECK(manifest.find("version = ") != std::string::npos);
  CHECK(manifest.find("wall_clock_seconds = ") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"oracle", "--n", "2", "--p", "0.5", "--bogus"}).code == 2);
  CHECK(invoke({"oracle", "--n", "0", "--p", "0.5"}).code == 2);
  CHECK(invoke({"oracle", "--n", "5", "--p", "0.5", "--out", scratch("n5").string()}).code == 2);
  CHECK(invoke({"oracle", "--n", "2", "--out", scratch("nop").string()}).code == 2);
  CHECK(invoke({"sweep", "--n", "8", "--pc", "0.1", "--out", scratch("noeps").string()}).code == 2);
  CHECK(invoke({"pc-solve", "--n", "6", "--lambda", "0.01", "--out", scratch("tiny").string()}).code == 2);
  CHECK(invoke({"sample", "--n", "4"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  const auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pc-solve") != std::string::npos);
}

TEST_CASE("pc-solve writes a trace and signals non-convergence with 3") {
  const auto dir = scratch("pc");
  const auto ok = invoke({"pc-solve", "--n", "8", "--lambda", "0.5", "--cap", "512", "--out", dir.string()});
  CHECK(ok.code == 0);
  CHECK(slurp(dir / "pc-solve_trace.csv").rfind("iteration,lo,hi,midpoint,chi_mean,chi_se,replicates\n", 0) == 0);
  CHECK(slurp(dir / "pc-solve.csv").rfind("n,lambda,target,p_hat", 0) == 0);
  const auto bad = invoke({"pc-solve", "--n", "8", "--lambda", "0.5", "--budget", "100", "--tol", "1e-9", "--out",
                           dir.string()});
  CHECK(bad.code == 3);
}

TEST_CASE("outputs are reproducible for a fixed seed") {
  const auto a = scratch("rep_a"), b = scratch("rep_b");
  for (const auto& d : {a, b})
    REQUIRE(invoke({"sweep", "--n", "9", "--pc", "0.12", "--eps", "-1,0,1", "--replicates", "10", "--seed", "5",
                    "--out", d.string()})
                .code == 0);
  CHECK(slurp(a / "sweep.csv") == slurp(b / "sweep.csv"));
  CHECK(slurp(a / "sweep_summary.csv") == slurp(b / "sweep_summary.csv"));
  const std::string body = slurp(a / "sweep.csv");
  CHECK(std::count(body.begin(), body.end(), '\n') == 4);
}

TEST_CASE("config file keys fill in unspecified flags") {
  const auto dir = scratch("config");
  fs::create_directories(dir);
  const auto cfg = dir / "run.cfg";
  std::ofstream(cfg) << "# oracle run\nn = 3\np = 0.25\nreplicates = 50\nseed = 9\n";
  const auto r = invoke({"oracle", "--config", cfg.string(), "--replicates", "70", "--out", dir.string()});
  CHECK(r.code == 0);
  const std::string manifest = slurp(dir / "oracle_manifest.txt");
  CHECK(manifest.find("n = 3\n") != std::string::npos);
  CHECK(manifest.find("p = 0.25\n") != std::string::npos);
  CHECK(manifest.find("replicates = 70\n") != std::string::npos);
  CHECK(manifest.find("seed = 9\n") != std::string::npos);

  std::ofstream(dir / "bad.cfg") << "wibble = 3\n";
  CHECK(invoke({"oracle", "--config", (dir / "bad.cfg").string(), "--p", "0.5"}).code == 2);
  std::ofstream(dir / "broken.cfg") << "no equals sign here\n";
  CHECK(invoke({"oracle", "--config", (dir / "broken.cfg").string(), "--p", "0.5"}).code == 2);
  CHECK(invoke({"oracle", "--config", (dir / "missing.cfg").string(), "--p", "0.5"}).code == 2);
}

TEST_CASE("read_config_file") {
  const auto dir = scratch("readcfg");
  fs::create_directories(dir);
  std::ofstream(dir / "a.cfg") << "  n=12  \n\n# comment\neps = -1, 0 ,1 # trailing\n";
  const auto kv = qperc::cli::read_config_file((dir / "a.cfg").string());
  CHECK(kv.size() == 2);
  CHECK(kv.at("n") == "12");
  CHECK(kv.at("eps") == "-1, 0 ,1");
}

TEST_CASE("lemma-check, sprinkle, duality, triangle and sample") {
  const auto dir = scratch("misc");
  CHECK(invoke({"lemma-check", "--max-n", "6", "--instances", "50", "--out", dir.string()}).code == 0);
  CHECK(fs::exists(dir / "lemma-check.csv"));
  CHECK(invoke({"sprinkle", "--n", "10", "--pc", "0.1", "--eps", "0.5", "--replicates", "3", "--out", dir.string()})
            .code == 0);
  CHECK(fs::exists(dir / "sprinkle.csv"));
  CHECK(invoke({"duality", "--n", "10", "--pc", "0.1", "--replicates", "3", "--out", dir.string()}).code == 0);
  CHECK(fs::exists(dir / "duality.csv"));
  CHECK(invoke({"triangle", "--n", "8", "--p", "0.12", "--replicates", "4", "--out", dir.string()}).code == 0);
  CHECK(slurp(dir / "triangle.csv").rfind("k,tau,nabla\n", 0) == 0);
  CHECK(invoke({"sample", "--n", "7", "--p", "0.3", "--replicate", "2", "--out", dir.string()}).code == 0);
  std::ifstream in(dir / "graph.bin", std::ios::binary);
  qperc::SeedSpec seed;
  const auto g = qperc::read_occupancy(in, &seed);
  CHECK(g.same_occupancy(qperc::sample_subgraph(qperc::CubeDim(7), 0.3, {1, 2})));
  CHECK(seed.replicate_index == 2);
}
