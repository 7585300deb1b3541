#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "pav/binary_tree.hpp"
#include "pav/closure.hpp"
#include "pav/enumerate.hpp"
#include "pav/permutation.hpp"
#include "pav/rng.hpp"
#include "pav/tree_count.hpp"

using namespace pav;

TEST_CASE("parenthesis form round-trips") {
    for (const char* s : {".", "(..)", "((..).)", "(.(..))", "((..)(..))",
                          "(((..).)((..)(..)))"}) {
        const BinaryTree t = BinaryTree::parse(s);
        CHECK(t.str() == s);
    }
    CHECK(BinaryTree{}.str() == ".");
    CHECK_THROWS_AS(BinaryTree::parse("(.."), std::invalid_argument);
    CHECK_THROWS_AS(BinaryTree::parse("(.)"), std::invalid_argument);
    CHECK_THROWS_AS(BinaryTree::parse("(..)x"), std::invalid_argument);
}

TEST_CASE("enumeration counts shapes by Catalan numbers") {
    for (int n = 0; n <= 8; ++n) {
        long count = 0;
        std::set<std::string> shapes;
        enumerate_trees(n, [&](const BinaryTree& t) {
            ++count;
            CHECK(t.size() == n);
            shapes.insert(t.str());
        });
        CHECK(count == catalan(static_cast<unsigned long>(n)).get_si());
        CHECK(static_cast<long>(shapes.size()) == count);
    }
    CHECK_THROWS_AS(enumerate_trees(13, [](const BinaryTree&) {}), std::invalid_argument);
}

TEST_CASE("tree-permutation bijection on hand examples") {
    // Single node.
    CHECK(tree_to_perm(BinaryTree::parse("(..)")) == parse_pattern("1"));
    // Left child only: the maximum sits at the end.
    CHECK(tree_to_perm(BinaryTree::parse("((..).)")) == parse_pattern("12"));
    CHECK(tree_to_perm(BinaryTree::parse("(.(..))")) == parse_pattern("21"));
    CHECK(tree_to_perm(BinaryTree::parse("((..)(..))")) == parse_pattern("231"));
    CHECK(perm_to_tree(parse_pattern("231")).str() == "((..)(..))");
    CHECK(perm_to_tree(parse_pattern("64573821")).str() == "(((.((..).))(..))(.(..)))");
}

TEST_CASE("bijection is one-to-one onto the avoiders") {
    const Permutation forb = parse_pattern("132");
    for (int n = 1; n <= 7; ++n) {
        std::set<Permutation> seen;
        enumerate_trees(n, [&](const BinaryTree& t) {
            const Permutation pi = tree_to_perm(t);
            CHECK(avoids(pi, forb));
            CHECK(perm_to_tree(pi).same_shape(t));
            seen.insert(pi);
        });
        CHECK(seen.size() == static_cast<std::size_t>(catalan(static_cast<unsigned long>(n)).get_ui()));
    }
    CHECK_THROWS_AS(perm_to_tree(parse_pattern("132")), std::invalid_argument);
    CHECK_THROWS_AS(perm_to_tree(parse_pattern("25134")), std::invalid_argument);
}

TEST_CASE("height profile of a balanced three-node tree") {
    const BinaryTree t = BinaryTree::parse("((..)(..))");
    const HeightProfile hp = height_profile(t);
    CHECK(hp.size() == 3);
    CHECK(hp.depth == std::vector<int32_t>{1, 0, 1});
    CHECK(hp.left_steps == std::vector<int32_t>{1, 0, 0});
    // inorder position 2 is the root
    CHECK(hp.inorder_ids[1] == t.root);
}

TEST_CASE("left-height sums count the increasing pairs of the bijected permutation") {
    for (int n = 1; n <= 6; ++n) {
        enumerate_trees(n, [&](const BinaryTree& t) {
            const HeightProfile hp = height_profile(t);
            long sum = 0;
            for (int32_t h : hp.left_steps) sum += h;
            CHECK(BigInt(sum) == occurrences_naive(parse_pattern("12"), tree_to_perm(t)));
        });
    }
}

TEST_CASE("range-minimum queries agree with direct scans") {
    Rng rng(99, 0);
    std::vector<double> v(257);
    for (auto& x : v) x = rng.uniform01();
    const RangeMin rm(v);
    for (int rep = 0; rep < 2000; ++rep) {
        std::size_t a = rng.below(v.size());
        std::size_t b = rng.below(v.size());
        if (a > b) std::swap(a, b);
        double direct = v[a];
        for (std::size_t i = a; i <= b; ++i) direct = std::min(direct, v[i]);
        CHECK(rm.min(a, b) == direct);
    }
    const RangeMin ri(std::vector<int32_t>{5, 3, 9, 3, 7});
    CHECK(ri.min(0, 4) == 3.0);
    CHECK(ri.min(2, 2) == 9.0);
    CHECK(ri.min(2, 4) == 3.0);
}

TEST_CASE("tree counting matches the brute-force oracle on every small instance") {
    std::vector<Permutation> patterns;
    for (int k = 1; k <= 4; ++k)
        for (const Permutation& s : all_avoiders(k)) patterns.push_back(s);

    for (int n = 1; n <= 6; ++n) {
        enumerate_trees(n, [&](const BinaryTree& t) {
            const Permutation pi = tree_to_perm(t);
            const auto counts = count_occurrences_tree(t, patterns);
            for (const Permutation& s : patterns) {
                CAPTURE(pi.str());
                CAPTURE(s.str());
                CHECK(counts.at(s) == occurrences_naive(s, pi));
            }
        });
    }
}

TEST_CASE("per-node counts of the single-point pattern are subtree sizes") {
    PatternSet ps;
    const int id1 = ps.intern(parse_pattern("1"));
    TreeCounter<long> counter(ps);
    const BinaryTree t = perm_to_tree(parse_pattern("64573821"));
    const auto table = counter.count_all(t);
    // subtree sizes via a second pass
    std::vector<long> size(static_cast<std::size_t>(t.size()), 0);
    const HeightProfile hp = height_profile(t);
    // depth is indexed by inorder position; re-key it by node id
    std::vector<int32_t> depth_by_id(size.size(), 0);
    for (std::size_t pos = 0; pos < size.size(); ++pos)
        depth_by_id[static_cast<std::size_t>(hp.inorder_ids[pos])] = hp.depth[pos];
    // leaf-to-root accumulation: process by decreasing depth
    std::vector<int32_t> order(hp.inorder_ids);
    std::sort(order.begin(), order.end(), [&](int32_t a, int32_t b) {
        return depth_by_id[static_cast<std::size_t>(a)] > depth_by_id[static_cast<std::size_t>(b)];
    });
    CHECK(order.size() == static_cast<std::size_t>(t.size()));
    for (int32_t v : order) {
        size[static_cast<std::size_t>(v)] = 1;
        if (t.left[static_cast<std::size_t>(v)] >= 0)
            size[static_cast<std::size_t>(v)] += size[static_cast<std::size_t>(t.left[v])];
        if (t.right[static_cast<std::size_t>(v)] >= 0)
            size[static_cast<std::size_t>(v)] += size[static_cast<std::size_t>(t.right[v])];
    }
    for (std::size_t v = 0; v < size.size(); ++v)
        CHECK(table[v][static_cast<std::size_t>(id1)] == size[v]);
}

TEST_CASE("interning builds the split closure") {
    PatternSet ps;
    ps.intern(parse_pattern("12"));
    CHECK(ps.find(parse_pattern("1")) >= 0);
    CHECK(ps.size() == 2);

    const std::vector<Permutation> c231 = subpattern_closure({parse_pattern("231")});
    CHECK(c231 == std::vector<Permutation>{parse_pattern("1"), parse_pattern("12"),
                                           parse_pattern("231")});
    const std::vector<Permutation> c213 = subpattern_closure({parse_pattern("213")});
    CHECK(c213 == std::vector<Permutation>{parse_pattern("1"), parse_pattern("21"),
                                           parse_pattern("213")});
    PatternSet bad;
    CHECK_THROWS_AS(bad.intern(parse_pattern("1432")), std::invalid_argument);
}

TEST_CASE("interned choice lists have the expected shape") {
    PatternSet ps;
    const int id = ps.intern(parse_pattern("312"));
    const PatternData& d = ps.data(id);
    // two whole-copy terms, one separated split (3|12), one root-maximum term (-|12)
    REQUIRE(d.choices.size() == 4);
    CHECK(d.choices[0].left == id);
    CHECK(d.choices[0].right == -1);
    CHECK(d.choices[1].left == -1);
    CHECK(d.choices[1].right == id);
    CHECK(d.choices[2].left == ps.find(parse_pattern("1")));
    CHECK(d.choices[2].right == ps.find(parse_pattern("12")));
    CHECK(d.choices[3].left == -1);
    CHECK(d.choices[3].right == ps.find(parse_pattern("12")));
}
