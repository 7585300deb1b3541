#pragma once

// Binary trees in index-array form, the size-preserving bijection with
// 132-avoiding permutations (maximum at the root position, left factor above
// right factor), and inorder height profiles with O(1) range-minimum queries.

#include <cstdint>
#include <string>
#include <vector>

namespace pav {

class Permutation;

// Nodes are ids 0..size-1 in arbitrary order; -1 marks an absent child/root.
struct BinaryTree {
    std::vector<int32_t> left, right;
    int32_t root = -1;

    int size() const { return static_cast<int>(left.size()); }

    // Appends a node with the given children and returns its id.
    int32_t add_node(int32_t l = -1, int32_t r = -1) {
        left.push_back(l);
        right.push_back(r);
        return static_cast<int32_t>(left.size()) - 1;
    }

    // Canonical nested-parentheses form: empty subtree ".", node "(LR)".
    std::string str() const;
    static BinaryTree parse(const std::string& s);

    // Shape equality (ignores node numbering).
    bool same_shape(const BinaryTree& o) const { return str() == o.str(); }
};

// Bijection: the maximum of the permutation marks the root; entries left of it
// (all larger than entries right of it) give the left subtree, the rest the
// right subtree.  Requires a 132-avoiding input; throws otherwise.
BinaryTree perm_to_tree(const Permutation& pi);

// Inverse map: inorder positions carry the labels, each subtree receiving a
// contiguous value range with the left subtree above the right.
Permutation tree_to_perm(const BinaryTree& t);

// Inorder profile of a tree: node depths, counts of left-edges on root paths,
// both indexed by inorder position 1..n.
struct HeightProfile {
    std::vector<int32_t> depth;        // edges from the root, root = 0
    std::vector<int32_t> left_steps;   // left-edges on the root path
    std::vector<int32_t> inorder_ids;  // node id at each inorder position

    int size() const { return static_cast<int>(depth.size()); }
};

HeightProfile height_profile(const BinaryTree& t);

// Sparse-table range minimum over a fixed array: build O(n log n), query O(1).
class RangeMin {
  public:
    RangeMin() = default;
    explicit RangeMin(const std::vector<int32_t>& values);
    explicit RangeMin(const std::vector<double>& values);

    // Minimum of values[lo..hi], inclusive, 0-based.
    double min(std::size_t lo, std::size_t hi) const;

  private:
    std::vector<std::vector<double>> table_;
    std::vector<uint32_t> log2_;
};

}  // namespace pav
