#pragma once

// Occurrence counting on binary trees by one bottom-up pass of the split
// recursion: for every node, the count of each closed pattern is the sum over
// its split choices of (left-factor count in the left subtree) x (right-factor
// count in the right subtree), absent factors contributing 1.  Templated on
// the integer type: arbitrary precision for the exact engines, int64 for the
// Monte Carlo hot path (every recursion term counts a subset of occurrences,
// so intermediates are bounded by binomial(n, |sigma|); callers check that
// bound before choosing int64).

#include <cstdint>
#include <map>
#include <vector>

#include "pav/binary_tree.hpp"
#include "pav/closure.hpp"
#include "pav/rational.hpp"

namespace pav {

template <class Int>
class TreeCounter {
  public:
    explicit TreeCounter(const PatternSet& ps) : ps_(&ps), zeros_(static_cast<std::size_t>(ps.size()), Int(0)) {}

    // Counts at the root for every interned pattern id; buffers are reused
    // across calls, so the reference is valid until the next call.
    const std::vector<Int>& count_root(const BinaryTree& t) {
        count_flat(t);
        root_.assign(static_cast<std::size_t>(ps_->size()), Int(0));
        if (t.root >= 0) {
            const Int* row = &flat_[static_cast<std::size_t>(t.root) * static_cast<std::size_t>(ps_->size())];
            for (std::size_t i = 0; i < root_.size(); ++i) root_[i] = row[i];
        }
        return root_;
    }

    // Full per-node table (row = node id), for diagnostics and recursion tests.
    std::vector<std::vector<Int>> count_all(const BinaryTree& t) {
        count_flat(t);
        const std::size_t p = static_cast<std::size_t>(ps_->size());
        std::vector<std::vector<Int>> out(static_cast<std::size_t>(t.size()));
        for (std::size_t v = 0; v < out.size(); ++v)
            out[v].assign(flat_.begin() + static_cast<std::ptrdiff_t>(v * p),
                          flat_.begin() + static_cast<std::ptrdiff_t>((v + 1) * p));
        return out;
    }

  private:
    void count_flat(const BinaryTree& t) {
        const std::size_t n = static_cast<std::size_t>(t.size());
        const std::size_t p = static_cast<std::size_t>(ps_->size());
        flat_.assign(n * p, Int(0));
        order_.clear();
        order_.reserve(n);
        // Post-order: push parent after flipping a visited bit.
        stack_.clear();
        if (t.root >= 0) stack_.push_back(t.root);
        while (!stack_.empty()) {
            int32_t v = stack_.back();
            stack_.pop_back();
            if (v < 0) {  // second visit, encoded as ~id
                order_.push_back(~v);
                continue;
            }
            stack_.push_back(~v);
            if (t.left[static_cast<std::size_t>(v)] >= 0) stack_.push_back(t.left[static_cast<std::size_t>(v)]);
            if (t.right[static_cast<std::size_t>(v)] >= 0) stack_.push_back(t.right[static_cast<std::size_t>(v)]);
        }
        for (int32_t v : order_) {
            const int32_t l = t.left[static_cast<std::size_t>(v)], r = t.right[static_cast<std::size_t>(v)];
            const Int* rowl = l >= 0 ? &flat_[static_cast<std::size_t>(l) * p] : zeros_.data();
            const Int* rowr = r >= 0 ? &flat_[static_cast<std::size_t>(r) * p] : zeros_.data();
            Int* row = &flat_[static_cast<std::size_t>(v) * p];
            for (std::size_t id = 0; id < p; ++id) {
                Int acc(0);
                for (const SplitChoice& c : ps_->data(static_cast<int>(id)).choices) {
                    if (c.left >= 0 && c.right >= 0)
                        acc += rowl[c.left] * rowr[c.right];
                    else if (c.left >= 0)
                        acc += rowl[c.left];
                    else if (c.right >= 0)
                        acc += rowr[c.right];
                    else
                        acc += 1;
                }
                row[id] = acc;
            }
        }
    }

    const PatternSet* ps_;
    std::vector<Int> zeros_, flat_, root_;
    std::vector<int32_t> order_;
    std::vector<int32_t> stack_;
};

// Map-facing wrapper with arbitrary-precision counts.
std::map<Permutation, BigInt> count_occurrences_tree(const BinaryTree& t,
                                                     const std::vector<Permutation>& patterns);

}  // namespace pav
