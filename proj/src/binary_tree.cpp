#include "pav/binary_tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "pav/permutation.hpp"

namespace pav {

std::string BinaryTree::str() const {
    // Tokens: node ids to expand, or -2 for a pending ')'.
    std::string out;
    std::vector<int32_t> stack{root};
    while (!stack.empty()) {
        int32_t tok = stack.back();
        stack.pop_back();
        if (tok == -2) {
            out += ')';
        } else if (tok == -1) {
            out += '.';
        } else {
            out += '(';
            stack.push_back(-2);
            stack.push_back(right[static_cast<std::size_t>(tok)]);
            stack.push_back(left[static_cast<std::size_t>(tok)]);
        }
    }
    return out;
}

BinaryTree BinaryTree::parse(const std::string& s) {
    BinaryTree t;
    std::vector<std::vector<int32_t>> stack(1);
    for (char ch : s) {
        switch (ch) {
            case '(':
                stack.emplace_back();
                break;
            case '.':
                stack.back().push_back(-1);
                break;
            case ')': {
                if (stack.size() < 2 || stack.back().size() != 2)
                    throw std::invalid_argument("malformed tree string");
                int32_t l = stack.back()[0], r = stack.back()[1];
                stack.pop_back();
                stack.back().push_back(t.add_node(l, r));
                break;
            }
            default:
                throw std::invalid_argument("unexpected character in tree string");
        }
    }
    if (stack.size() != 1 || stack[0].size() != 1)
        throw std::invalid_argument("malformed tree string");
    t.root = stack[0][0];
    return t;
}

BinaryTree perm_to_tree(const Permutation& pi) {
    const int n = pi.size();
    BinaryTree t;
    t.left.reserve(static_cast<std::size_t>(n));
    t.right.reserve(static_cast<std::size_t>(n));
    if (n == 0) return t;

    // Segments of positions [lo, hi]; parent slot filled on completion.
    struct Seg {
        int lo, hi;
        int32_t parent;  // -1 for the root segment
        bool is_left;
    };
    std::vector<Seg> work{{1, n, -1, false}};
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.lo > s.hi) continue;
        int maxpos = s.lo;
        for (int i = s.lo + 1; i <= s.hi; ++i)
            if (pi(i) > pi(maxpos)) maxpos = i;
        // Left factor must lie entirely above the right factor, or a
        // low-high-middle occurrence exists.
        int lmin = pi(maxpos);
        for (int i = s.lo; i < maxpos; ++i) lmin = std::min(lmin, pi(i));
        for (int j = maxpos + 1; j <= s.hi; ++j)
            if (pi(j) > lmin) throw std::invalid_argument("permutation does not avoid 132");
        int32_t id = t.add_node();
        if (s.parent >= 0) {
            auto& slot = s.is_left ? t.left[static_cast<std::size_t>(s.parent)]
                                   : t.right[static_cast<std::size_t>(s.parent)];
            slot = id;
        } else {
            t.root = id;
        }
        work.push_back({s.lo, maxpos - 1, id, true});
        work.push_back({maxpos + 1, s.hi, id, false});
    }
    return t;
}

namespace {

// Iterative post-order subtree sizes.
std::vector<int32_t> subtree_sizes(const BinaryTree& t) {
    std::vector<int32_t> size(static_cast<std::size_t>(t.size()), 0);
    std::vector<std::pair<int32_t, bool>> stack;
    if (t.root >= 0) stack.push_back({t.root, false});
    while (!stack.empty()) {
        auto [v, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            int32_t l = t.left[static_cast<std::size_t>(v)], r = t.right[static_cast<std::size_t>(v)];
            size[static_cast<std::size_t>(v)] =
                1 + (l >= 0 ? size[static_cast<std::size_t>(l)] : 0) + (r >= 0 ? size[static_cast<std::size_t>(r)] : 0);
        } else {
            stack.push_back({v, true});
            if (t.left[static_cast<std::size_t>(v)] >= 0) stack.push_back({t.left[static_cast<std::size_t>(v)], false});
            if (t.right[static_cast<std::size_t>(v)] >= 0) stack.push_back({t.right[static_cast<std::size_t>(v)], false});
        }
    }
    return size;
}

}  // namespace

Permutation tree_to_perm(const BinaryTree& t) {
    const int n = t.size();
    std::vector<int32_t> size = subtree_sizes(t);
    // value[v]: each node takes the top of its range; within the remainder the
    // left subtree sits above the right subtree.
    std::vector<int> value(static_cast<std::size_t>(n), 0);
    struct Frame {
        int32_t v;
        int lo, hi;
    };
    std::vector<Frame> stack;
    if (t.root >= 0) stack.push_back({t.root, 1, n});
    while (!stack.empty()) {
        auto [v, lo, hi] = stack.back();
        stack.pop_back();
        value[static_cast<std::size_t>(v)] = hi;
        int32_t l = t.left[static_cast<std::size_t>(v)], r = t.right[static_cast<std::size_t>(v)];
        int rsize = r >= 0 ? size[static_cast<std::size_t>(r)] : 0;
        if (r >= 0) stack.push_back({r, lo, lo + rsize - 1});
        if (l >= 0) stack.push_back({l, lo + rsize, hi - 1});
    }
    // Read values in inorder.
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n));
    std::vector<int32_t> path;
    int32_t cur = t.root;
    while (cur >= 0 || !path.empty()) {
        while (cur >= 0) {
            path.push_back(cur);
            cur = t.left[static_cast<std::size_t>(cur)];
        }
        cur = path.back();
        path.pop_back();
        w.push_back(value[static_cast<std::size_t>(cur)]);
        cur = t.right[static_cast<std::size_t>(cur)];
    }
    return Permutation(std::move(w));
}

HeightProfile height_profile(const BinaryTree& t) {
    const int n = t.size();
    HeightProfile p;
    p.depth.reserve(static_cast<std::size_t>(n));
    p.left_steps.reserve(static_cast<std::size_t>(n));
    p.inorder_ids.reserve(static_cast<std::size_t>(n));
    std::vector<int32_t> depth(static_cast<std::size_t>(n), 0), lsteps(static_cast<std::size_t>(n), 0);
    std::vector<int32_t> stack;
    if (t.root >= 0) stack.push_back(t.root);
    while (!stack.empty()) {
        int32_t v = stack.back();
        stack.pop_back();
        int32_t l = t.left[static_cast<std::size_t>(v)], r = t.right[static_cast<std::size_t>(v)];
        if (l >= 0) {
            depth[static_cast<std::size_t>(l)] = depth[static_cast<std::size_t>(v)] + 1;
            lsteps[static_cast<std::size_t>(l)] = lsteps[static_cast<std::size_t>(v)] + 1;
            stack.push_back(l);
        }
        if (r >= 0) {
            depth[static_cast<std::size_t>(r)] = depth[static_cast<std::size_t>(v)] + 1;
            lsteps[static_cast<std::size_t>(r)] = lsteps[static_cast<std::size_t>(v)];
            stack.push_back(r);
        }
    }
    std::vector<int32_t> path;
    int32_t cur = t.root;
    while (cur >= 0 || !path.empty()) {
        while (cur >= 0) {
            path.push_back(cur);
            cur = t.left[static_cast<std::size_t>(cur)];
        }
        cur = path.back();
        path.pop_back();
        p.inorder_ids.push_back(cur);
        p.depth.push_back(depth[static_cast<std::size_t>(cur)]);
        p.left_steps.push_back(lsteps[static_cast<std::size_t>(cur)]);
        cur = t.right[static_cast<std::size_t>(cur)];
    }
    return p;
}

RangeMin::RangeMin(const std::vector<int32_t>& values)
    : RangeMin(std::vector<double>(values.begin(), values.end())) {}

RangeMin::RangeMin(const std::vector<double>& values) {
    const std::size_t n = values.size();
    if (n == 0) return;
    log2_.resize(n + 1, 0);
    for (std::size_t i = 2; i <= n; ++i) log2_[i] = log2_[i / 2] + 1;
    const uint32_t levels = log2_[n] + 1;
    table_.resize(levels);
    table_[0] = values;
    for (uint32_t j = 1; j < levels; ++j) {
        const std::size_t span = std::size_t{1} << j;
        table_[j].resize(n - span + 1);
        for (std::size_t i = 0; i + span <= n; ++i)
            table_[j][i] = std::min(table_[j - 1][i], table_[j - 1][i + span / 2]);
    }
}

double RangeMin::min(std::size_t lo, std::size_t hi) const {
    if (lo > hi || hi >= table_[0].size()) throw std::invalid_argument("bad range-min query");
    const uint32_t j = log2_[hi - lo + 1];
    return std::min(table_[j][lo], table_[j][hi + 1 - (std::size_t{1} << j)]);
}

}  // namespace pav
