#pragma once

// Exhaustive enumeration of binary trees of a given size (equivalently, of
// 132-avoiding permutations) and exact distributional statistics of pattern
// counts over the uniform measure.  Everything here is exact rational
// arithmetic; n is capped because the tree count grows as 4^n.

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "pav/binary_tree.hpp"
#include "pav/permutation.hpp"
#include "pav/rational.hpp"

namespace pav {

inline constexpr int kDefaultEnumCap = 12;

// Streams every shape exactly once, ordered by left-subtree size at every
// node (recursively; left lexicographically before right).  The tree passed
// to the callback lives in a reused arena — copy it if it must outlive the
// call.  Throws std::invalid_argument when n exceeds the cap.
void enumerate_trees(int n, const std::function<void(const BinaryTree&)>& fn,
                     int cap = kDefaultEnumCap);

using PatternPower = std::pair<Permutation, unsigned>;

// E prod_j X_{sigma_j}^{e_j} over the uniform n-node tree, exactly.
Rational exact_mixed_moment(const std::vector<PatternPower>& monomial, int n,
                            int cap = kDefaultEnumCap);

// Mean occurrence counts for several patterns in one enumeration pass.
std::vector<Rational> exact_mean_table(const std::vector<Permutation>& sigmas, int n,
                                       int cap = kDefaultEnumCap);

Rational exact_mean(const Permutation& sigma, int n, int cap = kDefaultEnumCap);

// Full exact distribution of the count: value -> probability.
std::map<BigInt, Rational> exact_distribution(const Permutation& sigma, int n,
                                              int cap = kDefaultEnumCap);

// All 132-avoiding permutations of size k, sorted lexicographically.
std::vector<Permutation> all_avoiders(int k, int cap = kDefaultEnumCap);

}  // namespace pav
