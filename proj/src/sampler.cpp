#include "pav/sampler.hpp"

#include <cmath>
#include <stdexcept>

#include "pav/closure.hpp"
#include "pav/enumerate.hpp"
#include "pav/expectation.hpp"
#include "pav/moments.hpp"
#include "pav/parallel.hpp"
#include "pav/series.hpp"
#include "pav/stats.hpp"
#include "pav/tree_count.hpp"

namespace pav {

BinaryTree sample_tree(int n, Rng& rng) {
    BinaryTree t;
    if (n <= 0) return t;
    // Grow a full binary tree by leaf insertion: at step j pick one of the
    // 2j-1 existing nodes and a side uniformly; the picked subtree is pushed
    // down under a fresh internal node whose other child is a fresh leaf.
    // Stripping the leaves leaves a uniform n-node binary tree.
    const std::size_t slots = 2 * static_cast<std::size_t>(n) + 1;
    std::vector<int32_t> link(slots);  // link[0] = root id; node 2j-1 has children link[2j-1], link[2j]
    link[0] = 0;
    for (int j = 1; j <= n; ++j) {
        const uint64_t x = rng.below(4 * static_cast<uint64_t>(j) - 2);
        const int b = static_cast<int>(x & 1);
        const std::size_t k = static_cast<std::size_t>(x >> 1);
        const std::size_t u = 2 * static_cast<std::size_t>(j);
        link[u - static_cast<std::size_t>(b)] = static_cast<int32_t>(u);  // fresh leaf (even id)
        link[u - 1 + static_cast<std::size_t>(b)] = link[k];
        link[k] = static_cast<int32_t>(u) - 1;  // fresh internal node (odd id)
    }
    // Strip even (leaf) ids; internal node 2j-1 becomes tree node j-1.
    t.left.assign(static_cast<std::size_t>(n), -1);
    t.right.assign(static_cast<std::size_t>(n), -1);
    for (int j = 1; j <= n; ++j) {
        const int32_t l = link[2 * static_cast<std::size_t>(j) - 1];
        const int32_t r = link[2 * static_cast<std::size_t>(j)];
        if (l % 2 == 1) t.left[static_cast<std::size_t>(j - 1)] = (l - 1) / 2;
        if (r % 2 == 1) t.right[static_cast<std::size_t>(j - 1)] = (r - 1) / 2;
    }
    t.root = (link[0] - 1) / 2;  // the root is internal for n >= 1
    return t;
}

namespace {

// Counts fit int64 as long as binom(n, k) does (every split term counts a
// subset of occurrences); leave generous headroom.
bool fits_int64(int n, const std::vector<Permutation>& patterns) {
    unsigned long kmax = 1;
    for (const auto& s : patterns) kmax = std::max(kmax, static_cast<unsigned long>(s.size()));
    const BigInt bound = binomial(static_cast<unsigned long>(n), kmax);
    return mpz_sizeinbase(bound.get_mpz_t(), 2) <= 62;
}

struct SampleChunk {
    MomentAccumulator acc;
    TreeCounter<int64_t> counter64;
    TreeCounter<BigInt> counterBig;
    std::vector<double> x;

    SampleChunk(std::size_t dim, const PatternSet& ps)
        : acc(dim), counter64(ps), counterBig(ps), x(dim) {}
    void merge(const SampleChunk& o) { acc.merge(o.acc); }
};

}  // namespace

SampleStats sample_scaled_stats(int n, const std::vector<Permutation>& patterns, uint64_t reps,
                                uint64_t seed, unsigned threads) {
    if (n < 1) throw std::invalid_argument("sample size must be positive");
    if (patterns.empty()) throw std::invalid_argument("no patterns requested");
    PatternSet ps;
    std::vector<int> ids;
    std::vector<double> scale;
    std::vector<int> lambdas;
    for (const auto& s : patterns) {
        const int id = ps.intern(s);
        ids.push_back(id);
        const int lambda = ps.data(id).stats.lambda;
        lambdas.push_back(lambda);
        scale.push_back(std::pow(static_cast<double>(n), -0.5 * lambda));
    }
    const bool small = fits_int64(n, patterns);
    const std::size_t dim = patterns.size();

    SampleChunk total = run_chunked<SampleChunk>(
        reps, threads, [&] { return SampleChunk(dim, ps); },
        [&](uint64_t r, SampleChunk& w) {
            Rng rng(seed, r);
            const BinaryTree t = sample_tree(n, rng);
            if (small) {
                const std::vector<int64_t>& c = w.counter64.count_root(t);
                for (std::size_t i = 0; i < dim; ++i)
                    w.x[i] = static_cast<double>(c[static_cast<std::size_t>(ids[i])]) * scale[i];
            } else {
                const std::vector<BigInt>& c = w.counterBig.count_root(t);
                for (std::size_t i = 0; i < dim; ++i)
                    w.x[i] = c[static_cast<std::size_t>(ids[i])].get_d() * scale[i];
            }
            w.acc.add(w.x.data());
        });

    const MomentAccumulator& acc = total.acc;
    SampleStats out;
    out.n = n;
    out.reps = reps;
    out.seed = seed;
    for (std::size_t i = 0; i < dim; ++i) {
        PatternSampleStats p;
        p.pattern = patterns[i].str();
        p.lambda = lambdas[i];
        p.mean = acc.mean(i);
        p.se_mean = acc.se_mean(i);
        p.variance = acc.variance(i);
        p.second_moment = acc.second_moment(i);
        p.se_second = acc.se_second(i);
        p.skewness = acc.skewness(i);
        out.per_pattern.push_back(p);
    }
    out.second_moment_matrix.assign(dim, std::vector<double>(dim, 0.0));
    out.second_moment_se.assign(dim, std::vector<double>(dim, 0.0));
    out.covariance.assign(dim, std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            out.second_moment_matrix[i][j] = acc.cross_second(i, j);
            out.second_moment_se[i][j] = acc.se_cross(i, j);
            out.covariance[i][j] = acc.covariance(i, j);
        }
    return out;
}

ResidualStats residual_stat(int n, int k, uint64_t reps, uint64_t seed, unsigned threads) {
    if (k < 2) throw std::invalid_argument("residual statistic needs pattern size >= 2");
    std::vector<int> w(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = k - i;
    const Permutation decreasing(w);

    PatternSet ps;
    const int id = ps.intern(decreasing);
    if (!fits_int64(n, {decreasing}))
        throw std::invalid_argument("residual statistic out of int64 range for this n, k");
    const int64_t binom_nk = static_cast<int64_t>(binomial(static_cast<unsigned long>(n),
                                                           static_cast<unsigned long>(k))
                                                      .get_si());
    const double scale = std::pow(static_cast<double>(n), -(static_cast<double>(k) - 0.5));

    SampleChunk total = run_chunked<SampleChunk>(
        reps, threads, [&] { return SampleChunk(1, ps); },
        [&](uint64_t r, SampleChunk& wk) {
            Rng rng(seed, r);
            const BinaryTree t = sample_tree(n, rng);
            const std::vector<int64_t>& c = wk.counter64.count_root(t);
            wk.x[0] = static_cast<double>(binom_nk - c[static_cast<std::size_t>(id)]) * scale;
            wk.acc.add(wk.x.data());
        });

    ResidualStats out;
    out.n = n;
    out.k = k;
    out.reps = reps;
    out.seed = seed;
    out.mean = total.acc.mean(0);
    out.se_mean = total.acc.se_mean(0);
    out.variance = total.acc.variance(0);

    // Limit: sum of growth constants over the size-k avoiders with k-1
    // descents (growth n^{k-1/2}); exact finite-n mean via the generating
    // function of the decreasing pattern.
    ExpectationContext ctx;
    double sum = 0;
    for (const Permutation& s : all_avoiders(k)) {
        const PatternStats st = pattern_stats(s);
        if (st.descents == k - 1 && st.lambda == 2 * k - 1) {
            sum += ctx.asymptotic_mean(s).value();
            out.dominant_patterns.push_back(s.str());
        }
    }
    out.limit_sum = sum;
    Rational exact = Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
    exact -= gf_coefficient(ctx.mean_poly(decreasing), static_cast<std::size_t>(n)) /
             Rational(catalan(static_cast<unsigned long>(n)));
    exact /= pav::pow(Rational(n), k);
    out.exact_scaled_mean = exact.get_d() * std::sqrt(static_cast<double>(n));
    return out;
}

ProfileReport profile_convergence_check(int n, uint64_t reps, uint64_t seed, unsigned threads) {
    const double scale = std::pow(static_cast<double>(n), -1.5);

    struct ProfileChunk {
        MomentAccumulator acc{1};
        void merge(const ProfileChunk& o) { acc.merge(o.acc); }
    };
    ProfileChunk total = run_chunked<ProfileChunk>(
        reps, threads, [] { return ProfileChunk{}; },
        [&](uint64_t r, ProfileChunk& w) {
            Rng rng(seed, r);
            const BinaryTree t = sample_tree(n, rng);
            const HeightProfile hp = height_profile(t);
            int64_t sum = 0;
            for (int32_t h : hp.left_steps) sum += h;
            const double x = static_cast<double>(sum) * scale;
            w.acc.add(&x);
        });

    ProfileReport out;
    out.n = n;
    out.reps = reps;
    out.seed = seed;
    out.mean = total.acc.mean(0);
    out.se_mean = total.acc.se_mean(0);
    out.variance = total.acc.variance(0);
    {
        const double m = total.acc.mean(0);
        const double m2 = total.acc.second_moment(0);
        const double m3 = total.acc.third_moment(0);
        const double m4 = total.acc.fourth_moment(0);
        const double m4c = m4 - 4 * m * m3 + 6 * m * m * m2 - 3 * m * m * m * m;
        out.se_variance = std::sqrt(std::max(m4c - out.variance * out.variance, 0.0) /
                                    static_cast<double>(reps));
    }

    out.limit_mean = std::sqrt(M_PI) / 2.0;
    out.limit_variance = (10.0 - 3.0 * M_PI) / 12.0;

    MomentEngine eng;
    const Permutation sigma12 = parse_pattern("12");
    out.exact_mean = exact_scaled_moment(eng.expectation().mean_poly(sigma12), 3,
                                         static_cast<std::size_t>(n));
    out.exact_second = eng.finite_scaled_moment(eng.make_monomial({{sigma12, 2}}),
                                                static_cast<std::size_t>(n));
    out.mean_limit_gap = out.mean - out.limit_mean;
    out.mean_exact_gap = out.mean - out.exact_mean;
    return out;
}

}  // namespace pav
