#include "pav/excursion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "pav/binary_tree.hpp"
#include "pav/parallel.hpp"
#include "pav/stats.hpp"

namespace pav {

namespace {

// Pair integrals cost O(P^2); cap the point count once the full grid would
// exceed ~8e6 pairs.
constexpr int kFullPairPoints = 4001;
constexpr int kSubsampledPoints = 2828;

enum class FunKind { kIncreasing, kDecreasing, kPair213, kPair231, kPair312 };

struct Functional {
    FunKind kind;
    int k = 0;
    double factor = 1.0;
};

Functional classify(const Permutation& sigma) {
    const std::vector<int>& w = sigma.word();
    const int k = static_cast<int>(w.size());
    if (k == 0) throw std::invalid_argument("empty pattern has no excursion functional");
    bool inc = true, dec = true;
    for (int i = 0; i < k; ++i) {
        inc = inc && w[static_cast<std::size_t>(i)] == i + 1;
        dec = dec && w[static_cast<std::size_t>(i)] == k - i;
    }
    Functional f;
    f.k = k;
    if (inc) {
        f.kind = FunKind::kIncreasing;
        f.factor = std::pow(2.0, 0.5 * (k - 1)) / std::tgamma(static_cast<double>(k));
        return f;
    }
    if (dec) {
        f.kind = FunKind::kDecreasing;
        f.factor = 1.0 / std::tgamma(static_cast<double>(k + 1));
        return f;
    }
    if (w == std::vector<int>{2, 1, 3}) {
        f.kind = FunKind::kPair213;
        return f;
    }
    if (w == std::vector<int>{2, 3, 1}) {
        f.kind = FunKind::kPair231;
        return f;
    }
    if (w == std::vector<int>{3, 1, 2}) {
        f.kind = FunKind::kPair312;
        return f;
    }
    throw std::invalid_argument("no excursion functional implemented for pattern " + sigma.str());
}

double pow_int(double v, int j) {
    double r = 1.0;
    for (int i = 0; i < j; ++i) r *= v;
    return r;
}

}  // namespace

DiscreteExcursion sample_excursion(int m, Rng& rng) {
    if (m < 1) throw std::invalid_argument("excursion needs at least one up step");
    const int g = 2 * m;
    std::vector<int32_t> step(static_cast<std::size_t>(g));
    for (int i = 0; i < m; ++i) step[static_cast<std::size_t>(i)] = 1;
    for (int i = m; i < g; ++i) step[static_cast<std::size_t>(i)] = -1;
    rng.shuffle(step);

    std::vector<int32_t> walk(static_cast<std::size_t>(g) + 1, 0);
    for (int i = 0; i < g; ++i)
        walk[static_cast<std::size_t>(i) + 1] =
            walk[static_cast<std::size_t>(i)] + step[static_cast<std::size_t>(i)];

    int32_t low = 0;
    int theta = 0;  // first index attaining the minimum
    for (int i = 1; i <= g; ++i)
        if (walk[static_cast<std::size_t>(i)] < low) {
            low = walk[static_cast<std::size_t>(i)];
            theta = i;
        }

    DiscreteExcursion e;
    e.steps = g;
    e.values.resize(static_cast<std::size_t>(g) + 1);
    const double scale = 1.0 / std::sqrt(static_cast<double>(g));
    for (int i = 0; i <= g; ++i) {
        int j = theta + i;
        if (j > g) j -= g;  // walk[0] == walk[g], so wrapping is seamless
        e.values[static_cast<std::size_t>(i)] =
            static_cast<double>(walk[static_cast<std::size_t>(j)] - low) * scale;
    }
    return e;
}

DiscreteExcursion reversed(const DiscreteExcursion& e) {
    DiscreteExcursion r;
    r.steps = e.steps;
    r.values.assign(e.values.rbegin(), e.values.rend());
    return r;
}

std::vector<int32_t> functional_points(int grid_steps) {
    const int g = grid_steps;
    if (g + 1 <= kFullPairPoints) {
        std::vector<int32_t> pts(static_cast<std::size_t>(g) + 1);
        std::iota(pts.begin(), pts.end(), 0);
        return pts;
    }
    // Stratified subsample, mirrored so that t -> P-1-t maps the point set
    // onto its reflection g - x exactly.
    const int p = kSubsampledPoints;
    std::vector<int32_t> pts(static_cast<std::size_t>(p));
    for (int t = 0; t < p; ++t) {
        if (2 * t <= p - 1)
            pts[static_cast<std::size_t>(t)] = static_cast<int32_t>(
                static_cast<int64_t>(t) * g / (p - 1));
        else
            pts[static_cast<std::size_t>(t)] = static_cast<int32_t>(g) -
                                               pts[static_cast<std::size_t>(p - 1 - t)];
    }
    return pts;
}

std::vector<double> psi_batch(const std::vector<Permutation>& sigmas, const DiscreteExcursion& e,
                              double* identity_residual) {
    std::vector<Functional> funs;
    funs.reserve(sigmas.size());
    bool pairs_needed = identity_residual != nullptr;
    std::map<int, double> power_sums;  // exponent j >= 1 -> sum of e(x_t)^j
    for (const Permutation& s : sigmas) {
        funs.push_back(classify(s));
        const Functional& f = funs.back();
        if (f.kind == FunKind::kIncreasing && f.k >= 2) power_sums[f.k - 1] = 0.0;
        if (f.kind == FunKind::kPair213 || f.kind == FunKind::kPair231 ||
            f.kind == FunKind::kPair312)
            pairs_needed = true;
    }
    if (pairs_needed || identity_residual != nullptr) power_sums[1] = 0.0;

    const std::vector<int32_t> pts = functional_points(e.steps);
    const std::size_t np = pts.size();
    const double dp = static_cast<double>(np);

    double sum_left = 0.0, sum_right = 0.0;  // sum e(x_t)(P-1-t), sum e(x_t) t
    for (std::size_t t = 0; t < np; ++t) {
        const double v = e.values[static_cast<std::size_t>(pts[t])];
        for (auto& [j, acc] : power_sums) acc += pow_int(v, j);
        if (pairs_needed) {
            sum_left += v * static_cast<double>(np - 1 - t);
            sum_right += v * static_cast<double>(t);
        }
    }

    double sum_min = 0.0;
    if (pairs_needed) {
        const RangeMin rm(e.values);
        for (std::size_t t = 0; t + 1 < np; ++t) {
            const std::size_t lo = static_cast<std::size_t>(pts[t]);
            double acc = 0.0;
            for (std::size_t u = t + 1; u < np; ++u)
                acc += rm.min(lo, static_cast<std::size_t>(pts[u]));
            sum_min += acc;
        }
    }
    const double wpair = pairs_needed ? 1.0 / (dp * (dp - 1.0)) : 0.0;
    const double sqrt2 = std::sqrt(2.0);

    std::vector<double> out(funs.size(), 0.0);
    for (std::size_t i = 0; i < funs.size(); ++i) {
        const Functional& f = funs[i];
        switch (f.kind) {
            case FunKind::kIncreasing:
                out[i] = f.k == 1 ? 1.0 : f.factor * power_sums[f.k - 1] / dp;
                break;
            case FunKind::kDecreasing:
                out[i] = f.factor;
                break;
            case FunKind::kPair213:
                out[i] = sqrt2 * sum_min * wpair;
                break;
            case FunKind::kPair231:
                out[i] = sqrt2 * (sum_left - sum_min) * wpair;
                break;
            case FunKind::kPair312:
                out[i] = sqrt2 * (sum_right - sum_min) * wpair;
                break;
        }
    }
    if (identity_residual != nullptr) {
        const double lhs = sqrt2 * (2.0 * sum_min + (sum_left - sum_min) + (sum_right - sum_min)) *
                           wpair;
        *identity_residual = lhs - sqrt2 * power_sums[1] / dp;
    }
    return out;
}

double psi(const Permutation& sigma, const DiscreteExcursion& e) {
    return psi_batch({sigma}, e)[0];
}

double psi_identity_residual(const DiscreteExcursion& e) {
    double r = 0.0;
    psi_batch({}, e, &r);
    return r;
}

ExcursionStats excursion_scaled_stats(int m, const std::vector<Permutation>& patterns,
                                      uint64_t reps, uint64_t seed, unsigned threads) {
    if (patterns.empty()) throw std::invalid_argument("no patterns requested");
    bool pairs = false;
    std::vector<int> lambdas;
    for (const Permutation& s : patterns) {
        const Functional f = classify(s);  // validates support up front
        pairs = pairs || f.kind == FunKind::kPair213 || f.kind == FunKind::kPair231 ||
                f.kind == FunKind::kPair312;
        lambdas.push_back(pattern_stats(s).lambda);
    }
    const std::size_t dim = patterns.size();

    struct ExcChunk {
        MomentAccumulator acc;
        double max_resid = 0.0;
        explicit ExcChunk(std::size_t d) : acc(d) {}
        void merge(const ExcChunk& o) {
            acc.merge(o.acc);
            max_resid = std::max(max_resid, o.max_resid);
        }
    };
    ExcChunk total = run_chunked<ExcChunk>(
        reps, threads, [&] { return ExcChunk(dim); },
        [&](uint64_t r, ExcChunk& w) {
            Rng rng(seed, r);
            const DiscreteExcursion e = sample_excursion(m, rng);
            double resid = 0.0;
            const std::vector<double> x = psi_batch(patterns, e, pairs ? &resid : nullptr);
            w.acc.add(x.data());
            w.max_resid = std::max(w.max_resid, std::abs(resid));
        });

    ExcursionStats out;
    out.m = m;
    out.reps = reps;
    out.seed = seed;
    out.max_identity_residual = total.max_resid;
    out.identity_checked = pairs;
    for (std::size_t i = 0; i < dim; ++i) {
        PatternSampleStats p;
        p.pattern = patterns[i].str();
        p.lambda = lambdas[i];
        p.mean = total.acc.mean(i);
        p.se_mean = total.acc.se_mean(i);
        p.variance = total.acc.variance(i);
        p.second_moment = total.acc.second_moment(i);
        p.se_second = total.acc.se_second(i);
        p.skewness = total.acc.skewness(i);
        out.per_pattern.push_back(p);
    }
    out.second_moment_matrix.assign(dim, std::vector<double>(dim, 0.0));
    out.second_moment_se.assign(dim, std::vector<double>(dim, 0.0));
    out.covariance.assign(dim, std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            out.second_moment_matrix[i][j] = total.acc.cross_second(i, j);
            out.second_moment_se[i][j] = total.acc.se_cross(i, j);
            out.covariance[i][j] = total.acc.covariance(i, j);
        }
    return out;
}

}  // namespace pav
