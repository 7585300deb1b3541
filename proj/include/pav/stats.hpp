#pragma once

// Compensated accumulation of Monte Carlo power sums: per-component sums of
// x, x^2, x^3, x^4 and pairwise cross products, merged deterministically.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pav {

// Neumaier-compensated sum; merging adds the partial sum and carries the
// compensation exactly, so chunked reductions match serial ones to rounding.
struct KahanSum {
    double s = 0.0, c = 0.0;

    void add(double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    void merge(const KahanSum& o) {
        add(o.s);
        c += o.c;
    }
    double value() const { return s + c; }
};

class MomentAccumulator {
  public:
    explicit MomentAccumulator(std::size_t dim)
        : dim_(dim),
          p1_(dim),
          p2_(dim),
          p3_(dim),
          p4_(dim),
          cross_(dim * (dim + 1) / 2),
          cross2_(dim * (dim + 1) / 2) {}

    std::size_t dim() const { return dim_; }
    uint64_t count() const { return n_; }

    void add(const double* x) {
        ++n_;
        for (std::size_t i = 0; i < dim_; ++i) {
            const double v = x[i];
            const double v2 = v * v;
            p1_[i].add(v);
            p2_[i].add(v2);
            p3_[i].add(v2 * v);
            p4_[i].add(v2 * v2);
        }
        std::size_t idx = 0;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i; j < dim_; ++j) {
                const double p = x[i] * x[j];
                cross_[idx].add(p);
                cross2_[idx].add(p * p);
                ++idx;
            }
    }

    void merge(const MomentAccumulator& o) {
        if (o.dim_ != dim_) throw std::invalid_argument("accumulator dimension mismatch");
        n_ += o.n_;
        for (std::size_t i = 0; i < dim_; ++i) {
            p1_[i].merge(o.p1_[i]);
            p2_[i].merge(o.p2_[i]);
            p3_[i].merge(o.p3_[i]);
            p4_[i].merge(o.p4_[i]);
        }
        for (std::size_t i = 0; i < cross_.size(); ++i) {
            cross_[i].merge(o.cross_[i]);
            cross2_[i].merge(o.cross2_[i]);
        }
    }

    double mean(std::size_t i) const { return p1_[i].value() / dn(); }
    double second_moment(std::size_t i) const { return p2_[i].value() / dn(); }
    double third_moment(std::size_t i) const { return p3_[i].value() / dn(); }
    double fourth_moment(std::size_t i) const { return p4_[i].value() / dn(); }

    // Unbiased sample variance.
    double variance(std::size_t i) const {
        if (n_ < 2) return 0.0;
        const double m = mean(i);
        return (p2_[i].value() - dn() * m * m) / (dn() - 1.0);
    }
    double se_mean(std::size_t i) const { return std::sqrt(variance(i) / dn()); }

    // Standard error of the empirical second moment (mean of x^2).
    double se_second(std::size_t i) const {
        const double m2 = second_moment(i);
        const double v = fourth_moment(i) - m2 * m2;
        return std::sqrt(std::max(v, 0.0) / dn());
    }

    double third_central(std::size_t i) const {
        const double m = mean(i);
        return third_moment(i) - 3.0 * second_moment(i) * m + 2.0 * m * m * m;
    }
    double skewness(std::size_t i) const {
        const double v = variance(i);
        return third_central(i) / std::pow(v, 1.5);
    }

    // E[x_i x_j] estimate and sample covariance.
    double cross_second(std::size_t i, std::size_t j) const { return cross_[pair_index(i, j)].value() / dn(); }
    double covariance(std::size_t i, std::size_t j) const {
        if (n_ < 2) return 0.0;
        // parenthesized so the result is bitwise symmetric in (i, j)
        return (cross_[pair_index(i, j)].value() - dn() * (mean(i) * mean(j))) / (dn() - 1.0);
    }
    // Standard error of the empirical mixed second moment E[x_i x_j].
    double se_cross(std::size_t i, std::size_t j) const {
        const double m = cross_second(i, j);
        const double v = cross2_[pair_index(i, j)].value() / dn() - m * m;
        return std::sqrt(std::max(v, 0.0) / dn());
    }

  private:
    double dn() const { return static_cast<double>(n_); }
    std::size_t pair_index(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        return i * dim_ - i * (i + 1) / 2 + j;
    }

    std::size_t dim_;
    uint64_t n_ = 0;
    std::vector<KahanSum> p1_, p2_, p3_, p4_, cross_, cross2_;
};

}  // namespace pav
