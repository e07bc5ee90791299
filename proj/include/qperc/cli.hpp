#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace qperc::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kUnconverged = 3, kInternal = 4 };

/// Resolved run parameters. Flags override config-file keys, which override
/// these defaults.
struct RunConfig {
  std::string subcommand;
  int n = 10;
  double lambda = 0.1;
  double alpha = 0.5;
  std::uint64_t seed = 1;
  std::size_t replicates = 200;
  std::vector<double> epsilons;
  double p = -1.0;       // explicit density (oracle, triangle, sample)
  double pc = -1.0;      // skip solving p_c when >= 0
  std::string out_dir = "qperc_out";
  int threads = 0;
  double K1 = 1.0;
  double K2 = 1.0;
  double tol_p = 0.0;  // 0 selects the default quarter-window tolerance
  std::size_t initial_replicates = 64;
  std::size_t cap_replicates = 8192;
  std::uint64_t budget = std::uint64_t{1} << 22;
  double eta1 = 0.1;
  int max_n = 12;
  std::uint64_t instances = 1000;
  std::uint64_t replicate_index = 0;
  bool triangle = false;
  std::string dump_file;
};

/// Parses a flat "key = value" config file; '#' starts a comment.
/// Throws std::runtime_error on malformed lines.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Full command-line entry point; returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qperc::cli
