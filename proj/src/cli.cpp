#include "qperc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qperc/critical.hpp"
#include "qperc/csv.hpp"
#include "qperc/experiments.hpp"
#include "qperc/gen.hpp"
#include "qperc/lemma_checks.hpp"

#ifndef QPERC_VERSION
#define QPERC_VERSION "dev"
#endif

namespace qperc::cli {

namespace fs = std::filesystem;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class Manifest {
 public:
  void set(const std::string& key, const std::string& value) { entries_.emplace_back(key, value); }
  template <class T>
  void set(const std::string& key, const T& value) {
    set(key, csv::format(value));
  }
  void write(const fs::path& path) const {
    std::ofstream out(path);
    for (const auto& [k, v] : entries_) out << k << " = " << v << '\n';
    if (!out) throw std::runtime_error("failed writing " + path.string());
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::string join(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + csv::format(values[i]);
  return s;
}

void record_config(Manifest& m, const RunConfig& c) {
  m.set("subcommand", c.subcommand);
  m.set("version", std::string(QPERC_VERSION));
  m.set("n", c.n);
  m.set("lambda", c.lambda);
  m.set("alpha", c.alpha);
  m.set("seed", c.seed);
  m.set("replicates", c.replicates);
  m.set("eps", join(c.epsilons));
  m.set("p", c.p);
  m.set("pc", c.pc);
  m.set("threads", c.threads);
  m.set("K1", c.K1);
  m.set("K2", c.K2);
  m.set("tol", c.tol_p);
  m.set("initial", c.initial_replicates);
  m.set("cap", c.cap_replicates);
  m.set("budget", c.budget);
  m.set("eta1", c.eta1);
  m.set("max-n", c.max_n);
  m.set("instances", c.instances);
  m.set("replicate", c.replicate_index);
  m.set("triangle", c.triangle);
}

std::string timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// Builds one subcommand per experiment; every option binds into cfg.
std::unique_ptr<CLI::App> make_app(RunConfig& cfg, std::string& config_path) {
  auto app = std::make_unique<CLI::App>("Bond percolation on the n-cube: Monte Carlo and exact enumeration", "qperc");
  app->require_subcommand(1);
  app->set_version_flag("--version", std::string(QPERC_VERSION));

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Flat key = value config file");
    sub->add_option("--n", cfg.n, "Cube dimension")->check(CLI::Range(1, kDefaultMaxDim));
    sub->add_option("--seed", cfg.seed, "Master seed");
    sub->add_option("--threads", cfg.threads, "Worker threads (0: QPERC_THREADS or hardware)");
    sub->add_option("--out", cfg.out_dir, "Output directory");
  };
  auto solver = [&](CLI::App* sub) {
    sub->add_option("--lambda", cfg.lambda, "Critical threshold constant")->check(CLI::PositiveNumber);
    sub->add_option("--pc", cfg.pc, "Use this p_c instead of solving for it");
    sub->add_option("--tol", cfg.tol_p, "Bisection tolerance in p (0: quarter window)");
    sub->add_option("--initial", cfg.initial_replicates, "Initial replicates per midpoint");
    sub->add_option("--cap", cfg.cap_replicates, "Replicate cap per midpoint");
    sub->add_option("--budget", cfg.budget, "Total replicate budget");
  };
  auto eps = [&](CLI::App* sub) {
    sub->add_option("--eps", cfg.epsilons, "Window coordinates epsilon = n(p - p_c)")->delimiter(',');
  };

  auto* pc = app->add_subcommand("pc-solve", "Solve chi(p_c) = lambda 2^(n/3)");
  common(pc);
  solver(pc);

  auto* sweep = app->add_subcommand("sweep", "Observables across an epsilon grid");
  common(sweep);
  solver(sweep);
  eps(sweep);
  sweep->add_option("--alpha", cfg.alpha, "theta_alpha exponent")->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--replicates", cfg.replicates, "Replicates per row")->check(CLI::PositiveNumber);
  sweep->add_option("--K1", cfg.K1, "a0 constant K1");
  sweep->add_option("--K2", cfg.K2, "a0 constant K2");
  sweep->add_option("--eta1", cfg.eta1, "Z concentration exponent");
  sweep->add_flag("--triangle", cfg.triangle, "Also estimate the triangle diagram per row");

  auto* sprinkle = app->add_subcommand("sprinkle", "Two-layer sprinkling experiment");
  common(sprinkle);
  solver(sprinkle);
  eps(sprinkle);
  sprinkle->add_option("--alpha", cfg.alpha, "Large-component exponent")->check(CLI::Range(0.0, 1.0));
  sprinkle->add_option("--replicates", cfg.replicates, "Seeds per epsilon")->check(CLI::PositiveNumber);

  auto* duality = app->add_subcommand("duality", "Second-largest above vs largest below the window");
  common(duality);
  solver(duality);
  eps(duality);
  duality->add_option("--replicates", cfg.replicates, "Matched replicates")->check(CLI::PositiveNumber);

  auto* triangle = app->add_subcommand("triangle", "Two-point profile and triangle diagram");
  common(triangle);
  solver(triangle);
  eps(triangle);
  triangle->add_option("--p", cfg.p, "Density (default: p_c + eps/n)");
  triangle->add_option("--replicates", cfg.replicates, "Replicates")->check(CLI::PositiveNumber);
  triangle->add_option("--K1", cfg.K1, "a0 constant K1");
  triangle->add_option("--K2", cfg.K2, "a0 constant K2");

  auto* oracle = app->add_subcommand("oracle", "Exact enumeration for n <= 3 with a Monte Carlo cross-check");
  common(oracle);
  oracle->add_option("--p", cfg.p, "Density")->check(CLI::Range(0.0, 1.0));
  oracle->add_option("--replicates", cfg.replicates, "Monte Carlo replicates (default 2000)")
      ->check(CLI::PositiveNumber);

  auto* lemma = app->add_subcommand("lemma-check", "Property suites for the cube inequalities");
  common(lemma);
  lemma->add_option("--max-n", cfg.max_n, "Largest dimension for the randomised suites")->check(CLI::Range(1, 16));
  lemma->add_option("--instances", cfg.instances, "Random instances per dimension");

  auto* sample = app->add_subcommand("sample", "Dump one bond configuration as binary occupancy planes");
  common(sample);
  sample->add_option("--p", cfg.p, "Density")->check(CLI::Range(0.0, 1.0))->required();
  sample->add_option("--replicate", cfg.replicate_index, "Replicate index");
  sample->add_option("--dump-file", cfg.dump_file, "Output path (default <out>/graph.bin)");
  return app;
}

void parse_args(CLI::App& app, const std::vector<std::string>& args) {
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  app.parse(reversed);
}

CLI::App* active_subcommand(CLI::App& app) {
  auto subs = app.get_subcommands();
  return subs.empty() ? nullptr : subs.front();
}

bool flag_given(const std::vector<std::string>& args, const std::string& name) {
  const std::string flag = "--" + name;
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

// Command-line flags win; config keys fill in whatever was not given.
std::vector<std::string> merge_config(const std::vector<std::string>& args, CLI::App& sub,
                                      const std::map<std::string, std::string>& config) {
  std::vector<std::string> merged = args;
  for (const auto& [key, value] : config) {
    if (key == "config") throw UsageError("config files cannot include other config files");
    const CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (!opt) throw UsageError("unknown config key '" + key + "' for " + sub.get_name());
    if (flag_given(args, key)) continue;
    if (opt->get_expected_max() == 0) {
      if (value == "1" || value == "true" || value == "yes" || value == "on") merged.push_back("--" + key);
      continue;
    }
    merged.push_back("--" + key);
    merged.push_back(value);
  }
  return merged;
}

PcResult given_pc(const RunConfig& cfg) {
  PcResult pc;
  pc.n = cfg.n;
  pc.lambda = cfg.lambda;
  pc.p_hat = cfg.pc;
  pc.converged = true;
  return pc;
}

// Either the supplied --pc or a fresh solve whose trace goes next to the
// subcommand outputs. Returns std::nullopt-like converged=false results
// to the caller, which maps them to exit 3.
PcResult obtain_pc(const RunConfig& cfg, const fs::path& out_dir, const std::string& prefix, Manifest& manifest) {
  if (cfg.pc >= 0.0) {
    if (cfg.pc > 1.0) throw UsageError("--pc must lie in [0, 1]");
    return given_pc(cfg);
  }
  const CubeDim dim(cfg.n);
  ReplicateSchedule schedule;
  schedule.initial = cfg.initial_replicates;
  schedule.cap = cfg.cap_replicates;
  schedule.budget = cfg.budget;
  const double tol = cfg.tol_p > 0.0 ? cfg.tol_p : default_tol_p(dim);
  PcResult pc = solve_pc(dim, cfg.lambda, tol, schedule, cfg.seed, cfg.threads);
  const fs::path trace = out_dir / (prefix + "_trace.csv");
  std::ofstream t(trace);
  write_trace_csv(t, pc.trace);
  manifest.set("output.trace", trace.filename().string());
  manifest.set("pc.p_hat", pc.p_hat);
  manifest.set("pc.converged", pc.converged);
  return pc;
}

std::ofstream open_output(const fs::path& path, Manifest& manifest, const std::string& key) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  manifest.set("output." + key, path.filename().string());
  return out;
}

void write_pc_row(std::ostream& out, const PcResult& pc) {
  csv::write_header(out, {"n", "lambda", "target", "p_hat", "n_p_hat", "ci_half_width", "replicates_used",
                          "chi_mean", "chi_se", "converged", "pc_expansion_reference"});
  csv::Row row;
  row << pc.n << pc.lambda << pc.target << pc.p_hat << pc.n * pc.p_hat << pc.ci_half_width << pc.replicates_used
      << pc.chi_at_p_hat.mean << pc.chi_at_p_hat.std_error << pc.converged << pc_expansion_reference(pc.n);
  csv::write_row(out, row);
}

int cmd_pc_solve(const RunConfig& cfg, const fs::path& dir, Manifest& m, std::ostream& out) {
  const PcResult pc = obtain_pc(cfg, dir, "pc-solve", m);
  auto f = open_output(dir / "pc-solve.csv", m, "result");
  write_pc_row(f, pc);
  out << "p_hat " << csv::format(pc.p_hat) << " (n p_hat " << csv::format(pc.n * pc.p_hat) << ", half-width "
      << csv::format(pc.ci_half_width) << ", chi " << csv::format(pc.chi_at_p_hat.mean) << " +- "
      << csv::format(pc.chi_at_p_hat.std_error) << ", target " << csv::format(pc.target) << ")\n";
  if (!pc.converged) {
    out << "solver did not converge\n";
    return kUnconverged;
  }
  return kOk;
}

int cmd_sweep(const RunConfig& cfg, const fs::path& dir, Manifest& m, std::ostream& out) {
  if (cfg.epsilons.empty()) throw UsageError("sweep needs --eps");
  SweepConfig sc;
  sc.n = cfg.n;
  sc.lambda = cfg.lambda;
  sc.alpha = cfg.alpha;
  sc.epsilon_grid = cfg.epsilons;
  sc.replicates = cfg.replicates;
  sc.master_seed = cfg.seed;
  sc.observables.triangle = cfg.triangle;
  sc.K1 = cfg.K1;
  sc.K2 = cfg.K2;
  sc.eta1 = cfg.eta1;
  sc.threads = cfg.threads;
  sc.pairs.seed = cfg.seed;
  sc.validate();
  const PcResult pc = obtain_pc(cfg, dir, "sweep_pc", m);
  if (!pc.converged) return kUnconverged;
  const auto records = run_sweep(sc, pc);
  auto f = open_output(dir / "sweep.csv", m, "records");
  write_sweep_csv(f, records);
  auto s = open_output(dir / "sweep_summary.csv", m, "summary");
  write_summary_csv(s, regime_summary(records));
  out << records.size() << " sweep records at p_hat " << csv::format(pc.p_hat) << '\n';
  for (const auto& r : records)
    out << "  eps " << csv::format(r.epsilon) << " [" << regime_name(r.regime) << "] cmax_mean "
        << csv::format(r.cmax_mean) << " chi " << csv::format(r.chi.mean) << '\n';
  return kOk;
}

int cmd_sprinkle(const RunConfig& cfg, const fs::path& dir, Manifest& m, std::ostream& out) {
  const std::vector<double> eps = cfg.epsilons.empty() ? std::vector<double>{0.3} : cfg.epsilons;
  const PcResult pc = obtain_pc(cfg, dir, "sprinkle_pc", m);
  if (!pc.converged) return kUnconverged;
  std::vector<SprinkleReport> reports;
  for (double e : eps)
    for (std::size_t r = 0; r < cfg.replicates; ++r)
      reports.push_back(sprinkling_experiment(cfg.n, e, cfg.alpha, SeedSpec{cfg.seed, r}, pc.p_hat));
  auto f = open_output(dir / "sprinkle.csv", m, "reports");
  write_sprinkle_csv(f, reports);
  for (double e : eps) {
    std::size_t total = 0, third = 0, target = 0;
    for (const auto& r : reports) {
      if (r.epsilon != e) continue;
      ++total;
      third += 3ull * r.cmax_after >= r.M;
      target += r.proof_target_met();
    }
    out << "eps " << csv::format(e) << ": cmax_after >= M/3 in " << third << "/" << total
        << ", one component holds >= M/3 of D in " << target << "/" << total << '\n';
  }
  return kOk;
}

int cmd_duality(const RunConfig& cfg, const fs::path& dir, Manifest& m, std::ostream& out) {
  const std::vector<double> eps = cfg.epsilons.empty() ? std::vector<double>{0.3} : cfg.epsilons;
  const PcResult pc = obtain_pc(cfg, dir, "duality_pc", m);
  if (!pc.converged) return kUnconverged;
  std::vector<DualityReport> reports;
  for (double e : eps) {
    reports.push_back(duality_experiment(cfg.n, e, cfg.replicates, cfg.seed, pc.p_hat, cfg.threads));
    const auto& d = reports.back();
    out << "eps " << csv::format(e) << ": mean |C2| above " << csv::format(d.c2_above_mean)
        << ", mean |Cmax| below " << csv::format(d.cmax_below_mean) << ", ratio " << csv::format(d.ratio) << '\n';
    m.set("duality.ratio." + csv::format(e), d.ratio);
  }
  auto f = open_output(dir / "duality.csv", m, "replicates");
  write_duality_csv(f, reports);
  return kOk;
}

int cmd_triangle(const RunConfig& cfg, const fs::path& dir, Manifest& m, std::ostream& out) {
  const CubeDim dim(cfg.n);
  double p = cfg.p;
  if (p < 0.0) {
    const PcResult pc = obtain_pc(cfg, dir, "triangle_pc", m);
    if (!pc.converged) return kUnconverged;
    p = pc.p_hat + (cfg.epsilons.empty() ? 0.0 : cfg.epsilons.front()) / cfg.n;
  }
  if (!(p >= 0.0 && p <= 1.0)) throw UsageError("triangle density outside [0, 1]");
  std::vector<RadialProfile> profiles(cfg.replicates);
  std::vector<double> chis(cfg.replicates);
  PairCensusOptions pairs;
  pairs.seed = cfg.seed;
  for (std::size_t r = 0; r < cfg.replicates; ++r) {
    const auto labels = label_components(sample_subgraph(dim, p, SeedSpec{cfg.seed, r}));
    profiles[r] = connected_pair_fraction(labels, pairs, r);
    chis[r] = chi_statistic(labels);
  }
  const RadialProfile tau = average_profiles(profiles);
  const Estimate chi = Estimate::from_samples(chis);
  const TriangleReport rep = triangle_diagram_hat(tau, chi.mean, cfg.K1, cfg.K2, p);
  auto f = open_output(dir / "triangle.csv", m, "profile");
  csv::write_header(f, {"k", "tau", "nabla"});
  for (int k = 0; k <= cfg.n; ++k) {
    csv::Row row;
    row << k << tau(k) << rep.nabla[static_cast<std::size_t>(k)];
    csv::write_row(f, row);
  }
  auto g = open_output(dir / "triangle_report.csv", m, "report");
  csv::write_header(g, {"p", "chi", "chi_se", "K1", "K2", "a0", "nabla_diag", "nabla_offdiag", "offdiag_within_a0"});
  csv::Row row;
  row << p << chi.mean << chi.std_error << rep.K1 << rep.K2 << rep.a0 << rep.nabla_diag << rep.nabla_offdiag
      << rep.offdiag_within_a0();
  csv::write_row(g, row);
  out << "p " << csv::format(p) << ": nabla(0) " << csv::format(rep.nabla_diag) << ", max off-diagonal "
      << csv::format(rep.nabla_offdiag) << ", a0 " << csv::format(rep.a0) << '\n';
  return kOk;
}

int cmd_oracle(const RunConfig& cfg, const fs::path& dir, Manifest& m, std::ostream& out) {
  if (cfg.p < 0.0) throw UsageError("oracle needs --p");
  const ExactOracle exact = exact_enumerate(cfg.n, cfg.p);
  const CubeDim dim(cfg.n);
  std::vector<double> chis(cfg.replicates);
  for (std::size_t r = 0; r < cfg.replicates; ++r)
    chis[r] = chi_statistic(label_components(sample_subgraph(dim, cfg.p, SeedSpec{cfg.seed, r})));
  const Estimate mc = Estimate::from_samples(chis);
  const double z = mc.std_error > 0 ? (mc.mean - exact.chi_exact) / mc.std_error : 0.0;
  auto f = open_output(dir / "oracle.csv", m, "result");
  csv::write_header(f, {"n", "p", "chi_exact", "e_cmax_exact", "chi_mc_mean", "chi_mc_se", "z_score", "replicates"});
  csv::Row row;
  row << cfg.n << cfg.p << exact.chi_exact << exact.e_cmax_exact << mc.mean << mc.std_error << z << mc.replicates;
  csv::write_row(f, row);
  auto g = open_output(dir / "oracle_pmf.csv", m, "pmf");
  csv::write_header(g, {"k", "pmf"});
  for (std::size_t k = 0; k < exact.cluster_size_pmf.size(); ++k) {
    csv::Row r;
    r << k << exact.cluster_size_pmf[k];
    csv::write_row(g, r);
  }
  out << "chi_exact " << csv::format(exact.chi_exact) << '\n'
      << "e_cmax_exact " << csv::format(exact.e_cmax_exact) << '\n'
      << "chi_mc " << csv::format(mc.mean) << " +- " << csv::format(mc.std_error) << " (z " << csv::format(z)
      << ", " << mc.replicates << " replicates)\n";
  return kOk;
}

int cmd_lemma_check(const RunConfig& cfg, const fs::path& dir, Manifest& m, std::ostream& out) {
  const auto results = run_lemma_suite(cfg.max_n, cfg.instances, cfg.seed);
  auto f = open_output(dir / "lemma-check.csv", m, "results");
  csv::write_header(f, {"check", "n", "instances", "violations"});
  std::uint64_t violations = 0;
  for (const auto& r : results) {
    csv::Row row;
    row << r.name << r.n << r.instances << r.violations;
    csv::write_row(f, row);
    violations += r.violations;
  }
  out << results.size() << " lemma checks, " << violations << " violations\n";
  return violations == 0 ? kOk : kInternal;
}

int cmd_sample(const RunConfig& cfg, const fs::path& dir, Manifest& m, std::ostream& out) {
  const CubeDim dim(cfg.n);
  const SeedSpec seed{cfg.seed, cfg.replicate_index};
  const OccupiedGraph g = sample_subgraph(dim, cfg.p, seed);
  const fs::path path = cfg.dump_file.empty() ? dir / "graph.bin" : fs::path(cfg.dump_file);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  write_occupancy(f, g, seed);
  m.set("output.graph", path.string());
  out << g.occupied_count() << " of " << dim.edge_count() << " edges occupied, written to " << path.string() << '\n';
  return kOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  Manifest manifest;
  record_config(manifest, cfg);
  manifest.set("started_at", timestamp_utc());
  const auto start = std::chrono::steady_clock::now();

  int status = kOk;
  const std::string& s = cfg.subcommand;
  if (s == "pc-solve") status = cmd_pc_solve(cfg, dir, manifest, out);
  else if (s == "sweep") status = cmd_sweep(cfg, dir, manifest, out);
  else if (s == "sprinkle") status = cmd_sprinkle(cfg, dir, manifest, out);
  else if (s == "duality") status = cmd_duality(cfg, dir, manifest, out);
  else if (s == "triangle") status = cmd_triangle(cfg, dir, manifest, out);
  else if (s == "oracle") status = cmd_oracle(cfg, dir, manifest, out);
  else if (s == "lemma-check") status = cmd_lemma_check(cfg, dir, manifest, out);
  else if (s == "sample") status = cmd_sample(cfg, dir, manifest, out);
  else throw UsageError("unknown subcommand " + s);

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  manifest.set("wall_clock_seconds", seconds);
  manifest.set("exit_status", status);
  manifest.write(dir / (s + "_manifest.txt"));
  return status;
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string config_path;
  auto app = make_app(cfg, config_path);
  try {
    parse_args(*app, args);
    CLI::App* sub = active_subcommand(*app);
    if (!config_path.empty()) {
      const auto merged = merge_config(args, *sub, read_config_file(config_path));
      cfg = RunConfig{};
      std::string ignored;
      app = make_app(cfg, ignored);
      parse_args(*app, merged);
      sub = active_subcommand(*app);
    }
    cfg.subcommand = sub->get_name();
    if (cfg.subcommand == "oracle" && sub->get_option("--replicates")->count() == 0) cfg.replicates = 2000;
  } catch (const CLI::ParseError& e) {
    const int code = app->exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const std::exception& e) {
    err << "qperc: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return dispatch(cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "qperc: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "qperc: internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace qperc::cli
