#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pav/binary_tree.hpp"
#include "pav/enumerate.hpp"
#include "pav/expectation.hpp"
#include "pav/moments.hpp"
#include "pav/permutation.hpp"
#include "pav/rng.hpp"
#include "pav/sampler.hpp"
#include "pav/stats.hpp"

using namespace pav;

namespace {

std::vector<Permutation> pats(std::initializer_list<const char*> texts) {
    std::vector<Permutation> out;
    for (const char* t : texts) out.push_back(parse_pattern(t));
    return out;
}

}  // namespace

TEST_CASE("compensated sums recover what naive addition loses") {
    KahanSum s;
    s.add(1e16);
    s.add(1.0);
    s.add(-1e16);
    CHECK(s.value() == 1.0);

    KahanSum a, b, serial;
    const double xs[] = {1e15, 3.25, -1e15, 7.75, 1e-3, -2.0};
    for (int i = 0; i < 3; ++i) a.add(xs[i]);
    for (int i = 3; i < 6; ++i) b.add(xs[i]);
    for (double x : xs) serial.add(x);
    a.merge(b);
    CHECK(a.value() == doctest::Approx(serial.value()).epsilon(1e-15));
}

TEST_CASE("raw generator streams are deterministic and decorrelated") {
    Rng a(5, 7), b(5, 7), c(5, 8);
    bool all_equal = true, any_equal_c = false;
    for (int i = 0; i < 64; ++i) {
        const uint64_t x = a.next();
        all_equal = all_equal && (x == b.next());
        any_equal_c = any_equal_c || (x == c.next());
    }
    CHECK(all_equal);
    CHECK(!any_equal_c);

    // bounded draws: all values hit, frequencies near uniform
    Rng r(99, 0);
    std::vector<int> hits(7, 0);
    const int draws = 70000;
    for (int i = 0; i < draws; ++i) ++hits[static_cast<std::size_t>(r.below(7))];
    double chi2 = 0;
    for (int h : hits) {
        const double e = draws / 7.0;
        chi2 += (h - e) * (h - e) / e;
    }
    CHECK(chi2 < 25.0);  // 6 dof

    for (int i = 0; i < 1000; ++i) {
        const double u = r.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }

    std::vector<int> v{1, 2, 3, 4, 5, 6};
    r.shuffle(v);
    std::vector<int> sorted_v = v;
    std::sort(sorted_v.begin(), sorted_v.end());
    CHECK(sorted_v == std::vector<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("sampled trees are well-formed uniform shapes") {
    Rng rng(4242, 0);
    CHECK(sample_tree(0, rng).size() == 0);

    for (int i = 0; i < 20; ++i) {
        const BinaryTree t = sample_tree(1, rng);
        CHECK(t.str() == "(..)");
    }

    // every sampled shape corresponds to an avoiding permutation and back
    for (int n : {2, 3, 5, 17}) {
        for (int i = 0; i < 50; ++i) {
            const BinaryTree t = sample_tree(n, rng);
            CHECK(t.size() == n);
            const Permutation p = tree_to_perm(t);
            CHECK(p.size() == n);
            CHECK(avoids(p, parse_pattern("132")));
            CHECK(perm_to_tree(p).same_shape(t));
        }
    }
}

TEST_CASE("shape frequencies are uniform at small sizes") {
    auto chi2_for = [](int n, int reps, uint64_t seed, std::size_t shapes) {
        std::map<std::string, int> freq;
        Rng rng(seed, 0);
        for (int i = 0; i < reps; ++i) ++freq[sample_tree(n, rng).str()];
        REQUIRE(freq.size() == shapes);
        const double e = static_cast<double>(reps) / static_cast<double>(shapes);
        double chi2 = 0;
        for (const auto& [shape, h] : freq) chi2 += (h - e) * (h - e) / e;
        return chi2;
    };
    CHECK(chi2_for(3, 100000, 12345, 5) < 25.0);    // 4 dof
    CHECK(chi2_for(4, 140000, 54321, 14) < 45.0);   // 13 dof
}

TEST_CASE("scaled sampling is reproducible for any thread count") {
    const auto patterns = pats({"12", "213"});
    const SampleStats s1 = sample_scaled_stats(50, patterns, 2500, 777, 1);
    const SampleStats s3 = sample_scaled_stats(50, patterns, 2500, 777, 3);
    const SampleStats s0 = sample_scaled_stats(50, patterns, 2500, 777, 0);
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        CHECK(s1.per_pattern[i].mean == s3.per_pattern[i].mean);
        CHECK(s1.per_pattern[i].mean == s0.per_pattern[i].mean);
        CHECK(s1.per_pattern[i].second_moment == s3.per_pattern[i].second_moment);
        CHECK(s1.per_pattern[i].skewness == s3.per_pattern[i].skewness);
        for (std::size_t j = 0; j < patterns.size(); ++j) {
            CHECK(s1.second_moment_matrix[i][j] == s3.second_moment_matrix[i][j]);
            CHECK(s1.covariance[i][j] == s3.covariance[i][j]);
        }
    }
    // a different seed actually changes the numbers
    const SampleStats other = sample_scaled_stats(50, patterns, 2500, 778, 1);
    CHECK(other.per_pattern[0].mean != s1.per_pattern[0].mean);
}

TEST_CASE("sampled moments match the exact engines at moderate size") {
    const int n = 500;
    MomentEngine eng;
    const auto patterns = pats({"12", "213"});
    const SampleStats s = sample_scaled_stats(n, patterns, 20000, 20240817, 0);

    for (std::size_t i = 0; i < patterns.size(); ++i) {
        const PatternSampleStats& p = s.per_pattern[i];
        CHECK(p.pattern == patterns[i].str());
        const int lambda = pattern_stats(patterns[i]).lambda;
        CHECK(p.lambda == lambda);
        const double exact_mean =
            exact_scaled_moment(eng.expectation().mean_poly(patterns[i]), lambda, n);
        CHECK(std::abs(p.mean - exact_mean) <= 4.0 * p.se_mean);
        const double exact_second =
            eng.finite_scaled_moment(eng.make_monomial({{patterns[i], 2}}), n);
        CHECK(std::abs(p.second_moment - exact_second) <= 4.0 * p.se_second);
        // unbiased variance uses the R-1 denominator; rescale the biased form
        const double r = 20000.0;
        const double biased = p.second_moment - p.mean * p.mean;
        CHECK(p.variance == doctest::Approx(biased * r / (r - 1.0)).epsilon(1e-9));
    }

    // mixed second moment against the exact cross engine
    const double exact_cross = eng.finite_scaled_moment(
        eng.make_monomial({{patterns[0], 1}, {patterns[1], 1}}), n);
    CHECK(std::abs(s.second_moment_matrix[0][1] - exact_cross) <= 4.0 * s.second_moment_se[0][1]);
    CHECK(s.second_moment_matrix[0][1] == s.second_moment_matrix[1][0]);
    CHECK(s.covariance[0][1] == s.covariance[1][0]);
    CHECK(s.second_moment_matrix[0][0] ==
          doctest::Approx(s.per_pattern[0].second_moment).epsilon(1e-12));
}

TEST_CASE("long decreasing patterns ride the arbitrary-precision path") {
    // binom(300, 12) overflows the int64 guard, so counts go through big
    // integers; the scaled mean must still match the exact engine.
    const Permutation sigma = parse_pattern("12,11,10,9,8,7,6,5,4,3,2,1");
    const SampleStats s = sample_scaled_stats(300, {sigma}, 200, 99, 0);
    CHECK(s.per_pattern[0].lambda == 24);
    MomentEngine eng;
    const double exact = exact_scaled_moment(eng.expectation().mean_poly(sigma), 24, 300);
    CHECK(std::abs(s.per_pattern[0].mean - exact) <= 4.0 * s.per_pattern[0].se_mean + 1e-15);
    const Rational anchor_q = Rational(binomial(300UL, 12UL)) / pav::pow(Rational(300), 12);
    CHECK(s.per_pattern[0].mean <= anchor_q.get_d());
}

TEST_CASE("errors for impossible sampling requests") {
    CHECK_THROWS_AS(sample_scaled_stats(0, pats({"12"}), 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_scaled_stats(5, {}, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(residual_stat(100, 1, 10, 1), std::invalid_argument);
}

TEST_CASE("residual of the pair count") {
    const ResidualStats r = residual_stat(400, 2, 20000, 31337, 0);
    CHECK(r.dominant_patterns == std::vector<std::string>{"12"});
    CHECK(r.limit_sum == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-12));
    CHECK(std::abs(r.mean - r.exact_scaled_mean) <= 4.0 * r.se_mean);
    CHECK(r.exact_scaled_mean < r.limit_sum);  // finite-n mean sits below the limit
    CHECK(r.variance > 0.0);
}

TEST_CASE("residual of the triple count") {
    const ResidualStats r = residual_stat(200, 3, 30000, 271828, 0);
    CHECK(r.dominant_patterns == std::vector<std::string>{"213", "231", "312"});
    CHECK(r.limit_sum == doctest::Approx(3.0 * std::sqrt(M_PI) / 8.0).epsilon(1e-12));
    CHECK(std::abs(r.mean - r.exact_scaled_mean) <= 4.0 * r.se_mean);
    CHECK(r.exact_scaled_mean < r.limit_sum);
}

TEST_CASE("the pair count decomposes into the three-point counts in the limit") {
    // x_12 - 2 x_213 - x_231 - x_312 collapses to zero: both its mean and its
    // variance must shrink as n grows.
    const auto patterns = pats({"12", "213", "231", "312"});
    const double c[4] = {1.0, -2.0, -1.0, -1.0};
    auto combo = [&](const SampleStats& s, double& mean, double& var) {
        mean = 0;
        var = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            mean += c[i] * s.per_pattern[i].mean;
            for (std::size_t j = 0; j < 4; ++j) var += c[i] * c[j] * s.covariance[i][j];
        }
    };
    const SampleStats small = sample_scaled_stats(200, patterns, 20000, 5150, 0);
    const SampleStats big = sample_scaled_stats(1000, patterns, 20000, 5150, 0);
    double mean_small, var_small, mean_big, var_big;
    combo(small, mean_small, var_small);
    combo(big, mean_big, var_big);
    CHECK(var_big < var_small);
    CHECK(std::abs(mean_big) < std::abs(mean_small));
    CHECK(var_small < 0.05);
}

TEST_CASE("left-height profile sums against both exact and limit values") {
    const ProfileReport p = profile_convergence_check(300, 20000, 8675309, 0);
    CHECK(p.limit_mean == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-15));
    CHECK(p.limit_variance == doctest::Approx((10.0 - 3.0 * M_PI) / 12.0).epsilon(1e-15));
    CHECK(std::abs(p.mean - p.exact_mean) <= 4.0 * p.se_mean);
    CHECK(p.exact_mean < p.limit_mean);
    const double exact_var = p.exact_second - p.exact_mean * p.exact_mean;
    CHECK(std::abs(p.variance - exact_var) <= 5.0 * p.se_variance);
    CHECK(std::abs(exact_var - p.limit_variance) < 0.01);
    CHECK(p.mean_limit_gap == doctest::Approx(p.mean - p.limit_mean).epsilon(1e-15));
    CHECK(p.mean_exact_gap == doctest::Approx(p.mean - p.exact_mean).epsilon(1e-15));
}
