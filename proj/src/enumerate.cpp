#include "pav/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "pav/closure.hpp"
#include "pav/tree_count.hpp"

namespace pav {

namespace {

// Builds every shape of the given size inside the shared arena using stack
// discipline (children pushed before the parent, popped afterwards), so the
// arena holds exactly the emitted tree whenever emit fires.
void enum_rec(BinaryTree& arena, int n, const std::function<void(int32_t)>& emit) {
    if (n == 0) {
        emit(-1);
        return;
    }
    for (int i = 0; i < n; ++i) {
        enum_rec(arena, i, [&](int32_t l) {
            enum_rec(arena, n - 1 - i, [&](int32_t r) {
                const int32_t v = arena.add_node(l, r);
                emit(v);
                arena.left.pop_back();
                arena.right.pop_back();
            });
        });
    }
}

}  // namespace

void enumerate_trees(int n, const std::function<void(const BinaryTree&)>& fn, int cap) {
    if (n < 0) throw std::invalid_argument("negative tree size");
    if (n > cap)
        throw std::invalid_argument("tree size " + std::to_string(n) + " exceeds enumeration cap " +
                                    std::to_string(cap));
    BinaryTree arena;
    arena.left.reserve(static_cast<std::size_t>(n));
    arena.right.reserve(static_cast<std::size_t>(n));
    enum_rec(arena, n, [&](int32_t root) {
        arena.root = root;
        fn(arena);
    });
}

Rational exact_mixed_moment(const std::vector<PatternPower>& monomial, int n, int cap) {
    PatternSet ps;
    std::vector<std::pair<int, unsigned>> idpow;
    for (const auto& [sigma, e] : monomial)
        if (e > 0) idpow.emplace_back(ps.intern(sigma), e);
    TreeCounter<BigInt> counter(ps);
    BigInt total(0);
    enumerate_trees(
        n,
        [&](const BinaryTree& t) {
            const std::vector<BigInt>& c = counter.count_root(t);
            BigInt prod(1);
            for (const auto& [id, e] : idpow) {
                BigInt p;
                mpz_pow_ui(p.get_mpz_t(), c[static_cast<std::size_t>(id)].get_mpz_t(), e);
                prod *= p;
            }
            total += prod;
        },
        cap);
    return Rational(total) / Rational(catalan(static_cast<unsigned long>(n)));
}

std::vector<Rational> exact_mean_table(const std::vector<Permutation>& sigmas, int n, int cap) {
    PatternSet ps;
    std::vector<int> ids;
    ids.reserve(sigmas.size());
    for (const auto& s : sigmas) ids.push_back(ps.intern(s));
    TreeCounter<BigInt> counter(ps);
    std::vector<BigInt> totals(sigmas.size(), BigInt(0));
    enumerate_trees(
        n,
        [&](const BinaryTree& t) {
            const std::vector<BigInt>& c = counter.count_root(t);
            for (std::size_t i = 0; i < ids.size(); ++i) totals[i] += c[static_cast<std::size_t>(ids[i])];
        },
        cap);
    const Rational cn{catalan(static_cast<unsigned long>(n))};
    std::vector<Rational> out;
    out.reserve(totals.size());
    for (const auto& s : totals) out.push_back(Rational(s) / cn);
    return out;
}

Rational exact_mean(const Permutation& sigma, int n, int cap) {
    return exact_mean_table({sigma}, n, cap)[0];
}

std::map<BigInt, Rational> exact_distribution(const Permutation& sigma, int n, int cap) {
    PatternSet ps;
    const int id = ps.intern(sigma);
    TreeCounter<BigInt> counter(ps);
    std::map<BigInt, BigInt> freq;
    enumerate_trees(
        n, [&](const BinaryTree& t) { freq[counter.count_root(t)[static_cast<std::size_t>(id)]] += 1; },
        cap);
    const Rational cn{catalan(static_cast<unsigned long>(n))};
    std::map<BigInt, Rational> out;
    for (const auto& [value, count] : freq) out[value] = Rational(count) / cn;
    return out;
}

std::vector<Permutation> all_avoiders(int k, int cap) {
    std::vector<Permutation> out;
    enumerate_trees(k, [&](const BinaryTree& t) { out.push_back(tree_to_perm(t)); }, cap);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pav
