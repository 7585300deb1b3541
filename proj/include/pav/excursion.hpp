#pragma once

// Random-walk approximations of the normalized Brownian excursion and the
// limit functionals of scaled pattern counts: psi(12) = sqrt(2) * integral of
// e, psi(1..k) = 2^{(k-1)/2}/(k-1)! * integral of e^{k-1}, psi(k..1) = 1/k!,
// and the three pair-integral functionals
//   psi(213) = sqrt(2) * II_{x<y} min e[x,y],
//   psi(231) = sqrt(2) * II_{x<y} (e(x) - min e[x,y]),
//   psi(312) = sqrt(2) * II_{x<y} (e(y) - min e[x,y]).
// All functionals of one excursion are evaluated on a shared grid point set,
// which makes psi(12) = 2 psi(213) + psi(231) + psi(312) an algebraic
// identity of the discretization, not just a limit statement.

#include <cstdint>
#include <vector>

#include "pav/permutation.hpp"
#include "pav/rng.hpp"
#include "pav/sampler.hpp"

namespace pav {

// Nonnegative lattice path scaled to [0,1]: values[i] = e(i / steps),
// values.front() == values.back() == 0.
struct DiscreteExcursion {
    int steps = 0;
    std::vector<double> values;  // size steps + 1
};

// Shuffles a +-1 bridge of 2m steps, rotates it at the first minimum into a
// nonnegative path, and scales by 1/sqrt(2m).
DiscreteExcursion sample_excursion(int m, Rng& rng);

// Time reversal x -> 1 - x.
DiscreteExcursion reversed(const DiscreteExcursion& e);

// The shared evaluation points: every grid index when there are at most 4001
// of them (so at most ~8e6 ordered pairs), otherwise 2828 stratified indices
// (< 4e6 pairs) chosen symmetrically, so the set is invariant under time
// reversal and always contains both endpoints.
std::vector<int32_t> functional_points(int grid_steps);

// Evaluates the functionals named by the patterns on one shared point set.
// Single integrals weight each point 1/P; double integrals weight each
// ordered pair (t < t') 1/(P(P-1)); interval minima are taken over the full
// grid between the two points. If identity_residual is non-null, the pair
// machinery runs regardless of the requested patterns and receives
// 2 psi(213) + psi(231) + psi(312) - psi(12). Throws std::invalid_argument
// for a pattern with no implemented functional.
std::vector<double> psi_batch(const std::vector<Permutation>& sigmas, const DiscreteExcursion& e,
                              double* identity_residual = nullptr);

double psi(const Permutation& sigma, const DiscreteExcursion& e);

// 2 psi(213) + psi(231) + psi(312) - psi(12) for one excursion.
double psi_identity_residual(const DiscreteExcursion& e);

struct ExcursionStats {
    int m = 0;
    uint64_t reps = 0, seed = 0;
    std::vector<PatternSampleStats> per_pattern;
    std::vector<std::vector<double>> second_moment_matrix;
    std::vector<std::vector<double>> second_moment_se;
    std::vector<std::vector<double>> covariance;
    // Max over replicates of |2 psi(213) + psi(231) + psi(312) - psi(12)|;
    // tracked only when a pair functional is among the requested patterns
    // (the machinery is already paid for), otherwise left at 0.
    double max_identity_residual = 0;
    bool identity_checked = false;
};

// Monte Carlo moments of the requested functionals over independent
// excursions, deterministic for a given seed at any thread count.
ExcursionStats excursion_scaled_stats(int m, const std::vector<Permutation>& patterns,
                                      uint64_t reps, uint64_t seed, unsigned threads = 0);

}  // namespace pav
