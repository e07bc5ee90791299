#pragma once

// Randomised and exhaustive checks of the cube inequalities the sprinkling
// argument relies on. Each check counts violations; a correct library
// reports zero.

#include <cstdint>
#include <string>
#include <vector>

namespace qperc {

struct LemmaCheckResult {
  std::string name;
  int n = 0;
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
};

/// |X| >= Σ_{i<=u} C(n,i) implies |B[X,d]| >= Σ_{i<=u+d} C(n,i), over random
/// subsets, perturbed balls and subcubes.
LemmaCheckResult check_harper(int n, std::uint64_t instances, std::uint64_t seed);

/// Upper and lower binomial tails agree and are <= 2^n e^{-Δ²/2n}, for every
/// integer Δ in [0, n].
LemmaCheckResult check_tail_bound(int n);

/// |S|,|T| >= ε 2^n and Δ = min_overlap_delta(n, ε) imply |B[S,Δ] ∩ T| >= |T|/2.
LemmaCheckResult check_big_overlap(int n, std::uint64_t instances, std::uint64_t seed);

/// disjoint_short_paths output is valid and, under the overlap hypothesis,
/// has at least ½ ε 2^n n^{-2Δ} paths.
LemmaCheckResult check_many_paths(int n, std::uint64_t instances, std::uint64_t seed);

std::vector<LemmaCheckResult> run_lemma_suite(int max_n, std::uint64_t instances, std::uint64_t seed);

}  // namespace qperc
