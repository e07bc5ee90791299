#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qperc/clusters.hpp"
#include "qperc/critical.hpp"
#include "qperc/cube.hpp"
#include "qperc/experiments.hpp"
#include "qperc/gen.hpp"
#include "qperc/stats.hpp"

namespace py = pybind11;
using namespace qperc;

namespace {

ClusterLabeling sample_labels(int n, double p, std::uint64_t seed, std::uint64_t replicate) {
  return label_components(sample_subgraph(CubeDim(n), p, SeedSpec{seed, replicate}));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bond percolation on the hypercube";
  m.attr("__version__") = QPERC_VERSION;

  m.def("binomial", &binomial, py::arg("n"), py::arg("k"));
  m.def(
      "ball_volume", [](int n, int u) { return ball_volume_exact(CubeDim(n), u); }, py::arg("n"), py::arg("u"));
  m.def(
      "tail_sum", [](int n, double delta) { return tail_sum_exact(CubeDim(n, kHardMaxDim), delta); }, py::arg("n"),
      py::arg("delta"));
  m.def(
      "large_deviation_bound", [](int n, double delta) { return large_deviation_bound(CubeDim(n, kHardMaxDim), delta); },
      py::arg("n"), py::arg("delta"));
  m.def(
      "min_overlap_delta", [](int n, double epsilon) { return min_overlap_delta(CubeDim(n), epsilon); }, py::arg("n"),
      py::arg("epsilon"));

  py::class_<ClusterLabeling>(m, "ClusterLabeling")
      .def_property_readonly("n", [](const ClusterLabeling& l) { return l.dim().n(); })
      .def("sizes", &ClusterLabeling::sizes_desc)
      .def("component_count", &ClusterLabeling::component_count)
      .def("cluster_size_of", &ClusterLabeling::cluster_size_of, py::arg("v"))
      .def("chi", [](const ClusterLabeling& l) { return chi_statistic(l); })
      .def("top_two", [](const ClusterLabeling& l) { return top_two(l); });

  m.def("sample_clusters", &sample_labels, py::arg("n"), py::arg("p"), py::arg("seed"), py::arg("replicate") = 0,
        "Sample a bond configuration and label its components.");
  m.def(
      "occupied_edges",
      [](int n, double p, std::uint64_t seed, std::uint64_t replicate) {
        return sample_subgraph(CubeDim(n), p, SeedSpec{seed, replicate}).occupied_count();
      },
      py::arg("n"), py::arg("p"), py::arg("seed"), py::arg("replicate") = 0);

  py::class_<Estimate>(m, "Estimate")
      .def_readonly("mean", &Estimate::mean)
      .def_readonly("std_error", &Estimate::std_error)
      .def_readonly("replicates", &Estimate::replicates)
      .def("__repr__", [](const Estimate& e) {
        return "Estimate(mean=" + std::to_string(e.mean) + ", std_error=" + std::to_string(e.std_error) + ")";
      });

  m.def(
      "chi_hat",
      [](int n, double p, std::size_t replicates, std::uint64_t seed, int threads) {
        return chi_at(CubeDim(n), p, replicates, seed, threads);
      },
      py::arg("n"), py::arg("p"), py::arg("replicates"), py::arg("seed"), py::arg("threads") = 0);

  py::class_<ExactOracle>(m, "ExactOracle")
      .def_readonly("n", &ExactOracle::n)
      .def_readonly("p", &ExactOracle::p)
      .def_readonly("chi", &ExactOracle::chi_exact)
      .def_readonly("expected_cmax", &ExactOracle::e_cmax_exact)
      .def_readonly("cluster_size_pmf", &ExactOracle::cluster_size_pmf)
      .def("p_geq", &ExactOracle::p_geq, py::arg("k"));
  m.def("exact_enumerate", &exact_enumerate, py::arg("n"), py::arg("p"));

  py::class_<PcResult>(m, "PcResult")
      .def_readonly("n", &PcResult::n)
      .def_readonly("target", &PcResult::target)
      .def_readonly("p_hat", &PcResult::p_hat)
      .def_readonly("ci_half_width", &PcResult::ci_half_width)
      .def_readonly("replicates_used", &PcResult::replicates_used)
      .def_readonly("chi_at_p_hat", &PcResult::chi_at_p_hat)
      .def_readonly("converged", &PcResult::converged);
  m.def(
      "solve_pc",
      [](int n, double lambda, double tol_p, std::uint64_t seed, int threads) {
        const CubeDim dim(n);
        return solve_pc(dim, lambda, tol_p > 0 ? tol_p : default_tol_p(dim), ReplicateSchedule{}, seed, threads);
      },
      py::arg("n"), py::arg("lambda_") = 0.1, py::arg("tol_p") = 0.0, py::arg("seed") = 1, py::arg("threads") = 0);
  m.def("pc_expansion_reference", &pc_expansion_reference, py::arg("n"));

  m.def(
      "radial_convolution",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        const int n = static_cast<int>(a.size()) - 1;
        return radial_convolution(RadialProfile{n, a}, RadialProfile{n, b}).values;
      },
      py::arg("t1"), py::arg("t2"), "Convolve radial profiles given as values at distances 0..n.");

  py::class_<TriangleReport>(m, "TriangleReport")
      .def_readonly("nabla", &TriangleReport::nabla)
      .def_readonly("nabla_diag", &TriangleReport::nabla_diag)
      .def_readonly("nabla_offdiag", &TriangleReport::nabla_offdiag)
      .def_readonly("a0", &TriangleReport::a0)
      .def("offdiag_within_a0", &TriangleReport::offdiag_within_a0);
  m.def(
      "triangle_diagram",
      [](const std::vector<double>& tau, double chi, double K1, double K2) {
        return triangle_diagram_hat(RadialProfile{static_cast<int>(tau.size()) - 1, tau}, chi, K1, K2);
      },
      py::arg("tau"), py::arg("chi"), py::arg("K1") = 1.0, py::arg("K2") = 1.0);
  m.def(
      "two_point_profile",
      [](int n, double p, std::uint64_t seed, std::uint64_t replicate) {
        return connected_pair_fraction(sample_labels(n, p, seed, replicate), PairCensusOptions{}, replicate).values;
      },
      py::arg("n"), py::arg("p"), py::arg("seed"), py::arg("replicate") = 0);

  py::class_<SprinkleReport>(m, "SprinkleReport")
      .def_readonly("p", &SprinkleReport::p)
      .def_readonly("p_minus", &SprinkleReport::p_minus)
      .def_readonly("q", &SprinkleReport::q)
      .def_readonly("M", &SprinkleReport::M)
      .def_readonly("big_components", &SprinkleReport::big_components)
      .def_readonly("cmax_before", &SprinkleReport::cmax_before)
      .def_readonly("cmax_after", &SprinkleReport::cmax_after)
      .def_readonly("c2_after", &SprinkleReport::c2_after)
      .def_readonly("d_in_largest", &SprinkleReport::d_in_largest)
      .def("proof_target_met", &SprinkleReport::proof_target_met);
  m.def(
      "sprinkle",
      [](int n, double epsilon, double alpha, std::uint64_t seed, std::uint64_t replicate, double p_hat) {
        return sprinkling_experiment(n, epsilon, alpha, SeedSpec{seed, replicate}, p_hat);
      },
      py::arg("n"), py::arg("epsilon"), py::arg("alpha"), py::arg("seed"), py::arg("replicate"), py::arg("p_hat"));

  py::class_<SweepRecord>(m, "SweepRecord")
      .def_readonly("epsilon", &SweepRecord::epsilon)
      .def_readonly("p", &SweepRecord::p)
      .def_property_readonly("regime", [](const SweepRecord& r) { return std::string(regime_name(r.regime)); })
      .def_readonly("skipped", &SweepRecord::skipped)
      .def_readonly("chi", &SweepRecord::chi)
      .def_readonly("cmax_mean", &SweepRecord::cmax_mean)
      .def_readonly("cmax_median", &SweepRecord::cmax_median)
      .def_readonly("c2_mean", &SweepRecord::c2_mean)
      .def_readonly("cmax_samples", &SweepRecord::cmax_samples);
  m.def(
      "run_sweep",
      [](int n, double p_hat, const std::vector<double>& eps, std::size_t replicates, std::uint64_t seed,
         double alpha, int threads) {
        SweepConfig cfg;
        cfg.n = n;
        cfg.epsilon_grid = eps;
        cfg.replicates = replicates;
        cfg.master_seed = seed;
        cfg.alpha = alpha;
        cfg.threads = threads;
        cfg.validate();
        PcResult pc;
        pc.n = n;
        pc.p_hat = p_hat;
        pc.converged = true;
        return run_sweep(cfg, pc);
      },
      py::arg("n"), py::arg("p_hat"), py::arg("epsilons"), py::arg("replicates") = 100, py::arg("seed") = 1,
      py::arg("alpha") = 0.5, py::arg("threads") = 0);
}
