#pragma once

// Registry of 132-avoiding patterns closed under the prefix/suffix
// standardizations that the left/right split recursion consumes.  Interning a
// pattern also interns everything its recursion can reach, and records the
// recursion as a list of "choices": one occurrence of sigma in a tree either
// lies in the left subtree, lies in the right subtree, straddles a separated
// split q (prefix in the left factor, suffix in the right), or uses the root
// as the pattern maximum (prefix before / suffix after the maximum, an absent
// side contributing the multiplicative unit).

#include <map>
#include <vector>

#include "pav/permutation.hpp"

namespace pav {

struct SplitChoice {
    int left = -1;   // pattern id for the left factor, -1 = unit
    int right = -1;  // pattern id for the right factor, -1 = unit
};

struct PatternData {
    Permutation perm;
    PatternStats stats;
    std::vector<SplitChoice> choices;  // the two copy terms first, then splits
};

class PatternSet {
  public:
    // Returns the id; validates 132-avoidance (throws std::invalid_argument).
    int intern(const Permutation& sigma);

    int find(const Permutation& sigma) const {
        auto it = ids_.find(sigma);
        return it == ids_.end() ? -1 : it->second;
    }

    const PatternData& data(int id) const { return data_[static_cast<std::size_t>(id)]; }
    int size() const { return static_cast<int>(data_.size()); }

    // Canonical order for monomial keys: by (length, word).
    bool id_less(int a, int b) const {
        const Permutation& pa = data(a).perm;
        const Permutation& pb = data(b).perm;
        return pa < pb;
    }

  private:
    std::map<Permutation, int> ids_;
    std::vector<PatternData> data_;
};

// The reachable set of a family of patterns under the split recursion
// (including the inputs), as standardized permutations sorted by (length, word).
std::vector<Permutation> subpattern_closure(const std::vector<Permutation>& sigmas);

}  // namespace pav
