#include "pav/tree_count.hpp"

namespace pav {

std::map<Permutation, BigInt> count_occurrences_tree(const BinaryTree& t,
                                                     const std::vector<Permutation>& patterns) {
    PatternSet ps;
    std::vector<int> ids;
    ids.reserve(patterns.size());
    for (const auto& s : patterns) ids.push_back(ps.intern(s));
    TreeCounter<BigInt> counter(ps);
    const std::vector<BigInt>& counts = counter.count_root(t);
    std::map<Permutation, BigInt> out;
    for (std::size_t i = 0; i < patterns.size(); ++i)
        out[patterns[i]] = counts[static_cast<std::size_t>(ids[i])];
    return out;
}

}  // namespace pav
