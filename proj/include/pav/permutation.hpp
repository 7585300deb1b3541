#pragma once

// Permutations as words over 1..n, brute-force pattern-occurrence counting
// (the reference oracle for every faster engine), the per-pattern combinatorial
// statistics that drive the split recursions, and the inversion-set partial
// order used by the monotonicity checks.

#include <cstdint>
#include <string>
#include <vector>

#include "pav/rational.hpp"

namespace pav {

class Permutation {
  public:
    Permutation() = default;
    // Validates that w is a bijection on {1..n}; throws std::invalid_argument.
    explicit Permutation(std::vector<int> w);

    int size() const { return static_cast<int>(w_.size()); }
    // 1-based access: value at position i in 1..n.
    int operator()(int i) const { return w_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& word() const { return w_; }

    bool operator==(const Permutation& o) const { return w_ == o.w_; }
    bool operator!=(const Permutation& o) const { return w_ != o.w_; }
    bool operator<(const Permutation& o) const {
        return w_.size() != o.w_.size() ? w_.size() < o.w_.size() : w_ < o.w_;
    }

    // "2413" when n <= 9, comma-separated ("11,2,...") otherwise.
    std::string str() const;

  private:
    std::vector<int> w_;
};

// Accepts digit form "132" (n <= 9) or comma form "4,2,1,3" (any n).
Permutation parse_pattern(const std::string& text);

// Relabels arbitrary distinct integers by rank: (5,2,9) -> 231.
Permutation standardize(const std::vector<int>& values);

// Number of occurrences of sigma in pi (index subsequences in pattern order);
// empty sigma counts 0.  Backtracking with partial-order pruning.
BigInt occurrences_naive(const Permutation& sigma, const Permutation& pi);

// True iff pi contains no occurrence of sigma (early-exit search).
bool avoids(const Permutation& pi, const Permutation& sigma);

enum class Symmetry { inverse, reverse, complement };

Permutation apply_symmetry(const Permutation& p, Symmetry op);

struct PatternStats {
    int descents = 0;        // descent positions in 1..k-1, plus the last index k
    int lambda = 0;          // |sigma| + descents
    int max_pos = 0;         // position m with sigma_m = k (1-based)
    std::vector<int> delta;  // q in 1..k-1 with min(prefix) > max(suffix), increasing
};

PatternStats pattern_stats(const Permutation& sigma);

// Partial order by inversion-set containment; requires equal sizes.
bool inversion_order_leq(const Permutation& a, const Permutation& b);

}  // namespace pav
