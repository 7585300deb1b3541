#include "pav/closure.hpp"

#include <algorithm>
#include <stdexcept>

namespace pav {

namespace {

Permutation slice_standardized(const Permutation& sigma, int from, int to) {
    std::vector<int> vals;
    vals.reserve(static_cast<std::size_t>(to - from + 1));
    for (int i = from; i <= to; ++i) vals.push_back(sigma(i));
    return standardize(vals);
}

const std::vector<int> kForbidden{1, 3, 2};

}  // namespace

int PatternSet::intern(const Permutation& sigma) {
    if (sigma.size() == 0) throw std::invalid_argument("cannot intern the empty pattern");
    if (auto it = ids_.find(sigma); it != ids_.end()) return it->second;
    if (!avoids(sigma, Permutation(kForbidden)))
        throw std::invalid_argument("pattern '" + sigma.str() + "' does not avoid 132");

    const int id = static_cast<int>(data_.size());
    ids_.emplace(sigma, id);
    data_.push_back(PatternData{sigma, pattern_stats(sigma), {}});

    const int k = sigma.size();
    const PatternStats st = data_[static_cast<std::size_t>(id)].stats;
    std::vector<SplitChoice> choices;
    choices.push_back({id, -1});  // wholly in the left subtree
    choices.push_back({-1, id});  // wholly in the right subtree
    for (int q : st.delta) {
        int l = intern(slice_standardized(sigma, 1, q));
        int r = intern(slice_standardized(sigma, q + 1, k));
        choices.push_back({l, r});
    }
    // Root plays the pattern maximum.
    SplitChoice top;
    if (st.max_pos >= 2) top.left = intern(slice_standardized(sigma, 1, st.max_pos - 1));
    if (st.max_pos <= k - 1) top.right = intern(slice_standardized(sigma, st.max_pos + 1, k));
    choices.push_back(top);

    data_[static_cast<std::size_t>(id)].choices = std::move(choices);
    return id;
}

std::vector<Permutation> subpattern_closure(const std::vector<Permutation>& sigmas) {
    PatternSet ps;
    for (const auto& s : sigmas) ps.intern(s);
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(ps.size()));
    for (int i = 0; i < ps.size(); ++i) out.push_back(ps.data(i).perm);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pav
