#include "pav/series.hpp"

#include <stdexcept>

namespace pav {

Series& Series::operator+=(const Series& o) {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
    Series r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= b.order(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

Series& Series::scale(const Rational& c) {
    for (auto& v : c_) v *= c;
    return *this;
}

Series binomial_series(int half_exponent_numerator, std::size_t order) {
    Series s(order);
    Rational b(1);
    s[0] = b;
    for (std::size_t i = 0; i < order; ++i) {
        // (1-4x)^{h/2}: b_{i+1} = b_i * 2(2i - h)/(i + 1)
        b *= make_rational(2 * (2 * static_cast<long>(i) - half_exponent_numerator),
                           static_cast<long>(i) + 1);
        s[i + 1] = b;
    }
    return s;
}

Series catalan_gf(std::size_t order) {
    Series num = binomial_series(1, order + 1);  // sqrt(1-4x)
    num.scale(Rational(-1));
    num[0] += 1;
    num[1] += Rational(-2);
    if (num[0] != 0 || num[1] != 0)
        throw std::logic_error("catalan_gf: numerator does not cancel the 2x divisor");
    Series p(order);
    for (std::size_t i = 0; i <= order; ++i) p[i] = num[i + 1] / 2;
    return p;
}

Series gf_from_expectation(const LaurentPoly& f, std::size_t order) {
    if (f.is_zero()) return Series(order);
    if (f.max_exp() >= 0)
        throw std::invalid_argument("expectation polynomial must have only negative exponents");
    Series acc(order);
    for (const auto& [e, a] : f.terms()) acc += a * binomial_series(e, order);
    return catalan_gf(order) * acc;
}

Rational gf_coefficient(const LaurentPoly& f, std::size_t n) {
    if (f.is_zero()) return Rational(0);
    if (f.max_exp() >= 0)
        throw std::invalid_argument("expectation polynomial must have only negative exponents");
    if (n == 0) return Rational(0);
    // G_i = [x^i] f(sqrt(1-4x)), for i = 0..n-1 (the Catalan factor starts at x^1).
    std::vector<Rational> g(n, Rational(0));
    for (const auto& [e, a] : f.terms()) {
        Rational b(1);
        g[0] += a;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            b *= make_rational(2 * (2 * static_cast<long>(i) - e), static_cast<long>(i) + 1);
            g[i + 1] += a * b;
        }
    }
    Rational out(0);
    BigInt cat(1);  // C_1
    for (std::size_t j = 1; j <= n; ++j) {
        if (j > 1) {
            cat *= 4 * static_cast<long>(j) - 2;  // C_j = C_{j-1} * (4j-2)/(j+1)
            mpz_divexact_ui(cat.get_mpz_t(), cat.get_mpz_t(), static_cast<unsigned long>(j) + 1);
        }
        out += Rational(cat) * g[n - j];
    }
    return out;
}

}  // namespace pav
