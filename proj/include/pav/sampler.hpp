#pragma once

// Uniform random binary trees (leaf-insertion growth algorithm, O(n) per
// tree) and Monte Carlo statistics of scaled pattern counts
// X_sigma(T_n) / n^{lambda(sigma)/2}, with per-replicate RNG substreams and
// deterministic chunked reduction: identical results for any thread count.

#include <cstdint>
#include <string>
#include <vector>

#include "pav/binary_tree.hpp"
#include "pav/permutation.hpp"
#include "pav/rng.hpp"

namespace pav {

// Uniform over the C_n shapes of n-node binary trees.
BinaryTree sample_tree(int n, Rng& rng);

struct PatternSampleStats {
    std::string pattern;
    int lambda = 0;
    double mean = 0, se_mean = 0;
    double variance = 0;
    double second_moment = 0, se_second = 0;
    double skewness = 0;
};

struct SampleStats {
    int n = 0;
    uint64_t reps = 0;
    uint64_t seed = 0;
    std::vector<PatternSampleStats> per_pattern;
    // E[x_i x_j] estimates, their standard errors, and sample covariances.
    std::vector<std::vector<double>> second_moment_matrix;
    std::vector<std::vector<double>> second_moment_se;
    std::vector<std::vector<double>> covariance;
};

// threads = 0 picks the hardware count.
SampleStats sample_scaled_stats(int n, const std::vector<Permutation>& patterns, uint64_t reps,
                                uint64_t seed, unsigned threads = 0);

// Monte Carlo distribution of n^{-(k-1/2)} (binom(n,k) - X_{k...1}(T_n)),
// whose mean tends to the sum of the growth constants of the patterns of size
// k with k-1 descents.
struct ResidualStats {
    int n = 0, k = 0;
    uint64_t reps = 0, seed = 0;
    double mean = 0, se_mean = 0, variance = 0;
    double limit_sum = 0;              // sum of A_sigma over the dominant patterns
    double exact_scaled_mean = 0;      // same statistic's exact mean at this n
    std::vector<std::string> dominant_patterns;
};

ResidualStats residual_stat(int n, int k, uint64_t reps, uint64_t seed, unsigned threads = 0);

// Scaled left-height sums n^{-3/2} sum_v h_L(v) across sampled trees compared
// with both the limit law constants and the exact finite-n values.
struct ProfileReport {
    int n = 0;
    uint64_t reps = 0, seed = 0;
    double mean = 0, se_mean = 0;
    double variance = 0, se_variance = 0;
    double limit_mean = 0, limit_variance = 0;    // sqrt(pi)/2, (10-3pi)/12
    double exact_mean = 0, exact_second = 0;      // finite-n, exact engines
    double mean_limit_gap = 0, mean_exact_gap = 0;
};

ProfileReport profile_convergence_check(int n, uint64_t reps, uint64_t seed, unsigned threads = 0);

}  // namespace pav
