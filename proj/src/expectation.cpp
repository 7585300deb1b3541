#include "pav/expectation.hpp"

#include <cmath>
#include <stdexcept>

#include "pav/series.hpp"

namespace pav {

double SymbolicConstant::value() const {
    double v = coef.get_d();
    if (pi_half_power == 1) v *= std::sqrt(M_PI);
    return v;
}

std::string SymbolicConstant::coef_str() const {
    if (pi_half_power == 0) return coef.get_str();
    if (coef == 1) return "sqrt(pi)";
    if (coef.get_num() == 1) return "sqrt(pi)/" + coef.get_den().get_str();
    if (coef.get_num() == -1) return "-sqrt(pi)/" + coef.get_den().get_str();
    return coef.get_str() + "*sqrt(pi)";
}

std::string SymbolicConstant::str() const {
    std::string s = coef_str() + " * n^";
    if (n_exponent.get_den() == 1) return s + n_exponent.get_num().get_str();
    return s + "{" + n_exponent.get_num().get_str() + "/" + n_exponent.get_den().get_str() + "}";
}

std::pair<Rational, int> gamma_half(int twice_arg) {
    if (twice_arg < 1) throw std::invalid_argument("gamma_half needs a positive argument");
    if (twice_arg % 2 == 0) {
        return {Rational(factorial(static_cast<unsigned long>(twice_arg / 2 - 1))), 0};
    }
    const unsigned long j = static_cast<unsigned long>((twice_arg - 1) / 2);
    // Gamma(j + 1/2) = (2j)! / (4^j j!) * sqrt(pi)
    Rational r(factorial(2 * j));
    BigInt denom = factorial(j);
    mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), 2 * j);
    r /= Rational(denom);
    return {r, 1};
}

LaurentPoly size_bias(const LaurentPoly& f) {
    const LaurentPoly dinv = LaurentPoly::term(Rational(1), -1);
    LaurentPoly half_diff = LaurentPoly::term(Rational(-1, 2), -1) + LaurentPoly::term(Rational(1, 2), 1);
    return half_diff * f.derivative() + dinv * f;
}

const LaurentPoly& ExpectationContext::mean_poly(const Permutation& sigma) {
    return mean_poly(ps_.intern(sigma));
}

const LaurentPoly& ExpectationContext::mean_poly(int id) {
    if (auto it = poly_memo_.find(id); it != poly_memo_.end()) return it->second;

    // Interning is transitive, so everything reachable from id is already in
    // ps_ and no recursive call below mutates it; copy the fields regardless.
    const Permutation perm = ps_.data(id).perm;
    const PatternStats stats = ps_.data(id).stats;
    const std::vector<SplitChoice> choices = ps_.data(id).choices;
    const int k = perm.size();
    const int m = stats.max_pos;
    LaurentPoly result;
    if (k == 1) {
        result = LaurentPoly::term(Rational(1), -1);
    } else {
        // d^{-1} (1-d)^2 / 4
        const LaurentPoly split_weight = LaurentPoly::term(Rational(1, 4), -1) +
                                         LaurentPoly::term(Rational(-1, 2), 0) +
                                         LaurentPoly::term(Rational(1, 4), 1);
        // (d^{-1} - 1) / 2
        const LaurentPoly edge_weight =
            LaurentPoly::term(Rational(1, 2), -1) + LaurentPoly::term(Rational(-1, 2), 0);

        // choices = [left copy, right copy, delta splits..., max term]
        const std::size_t n_delta = stats.delta.size();
        for (std::size_t i = 0; i < n_delta; ++i) {
            const SplitChoice& c = choices[2 + i];
            const LaurentPoly a = mean_poly(c.left);
            result += split_weight * a * mean_poly(c.right);
        }
        const SplitChoice& top = choices.back();
        if (m == 1) {
            result += edge_weight * mean_poly(top.right);
        } else if (m == k) {
            result += edge_weight * mean_poly(top.left);
        } else {
            const LaurentPoly a = mean_poly(top.left);
            result += split_weight * a * mean_poly(top.right);
        }
    }

    // Structural checks: polynomial in d^{-1}, no constant term, degree
    // lambda-1, dominant coefficient = independent recursion's value.
    if (result.is_zero() || result.max_exp() > -1)
        throw std::logic_error("mean polynomial has nonnegative exponents for " + perm.str());
    if (result.min_exp() != -(stats.lambda - 1))
        throw std::logic_error("mean polynomial degree mismatch for " + perm.str());
    if (result.leading_coeff() != leading_coeff(id))
        throw std::logic_error("mean polynomial leading coefficient mismatch for " + perm.str());

    return poly_memo_.emplace(id, std::move(result)).first->second;
}

const Rational& ExpectationContext::leading_coeff(const Permutation& sigma) {
    return leading_coeff(ps_.intern(sigma));
}

const Rational& ExpectationContext::leading_coeff(int id) {
    if (auto it = lead_memo_.find(id); it != lead_memo_.end()) return it->second;

    const PatternStats stats = ps_.data(id).stats;
    const std::vector<SplitChoice> choices = ps_.data(id).choices;
    const int k = ps_.data(id).perm.size();
    Rational e;
    if (k == 1) {
        e = 1;
    } else {
        e = 0;
        for (std::size_t i = 0; i < stats.delta.size(); ++i) {
            const SplitChoice& c = choices[2 + i];
            const Rational a = leading_coeff(c.left);
            e += Rational(1, 4) * a * leading_coeff(c.right);
        }
        if (stats.max_pos == k) e += Rational(1, 2) * leading_coeff(choices.back().left);
    }
    return lead_memo_.emplace(id, std::move(e)).first->second;
}

SymbolicConstant ExpectationContext::asymptotic_mean(const Permutation& sigma) {
    const int id = ps_.intern(sigma);
    const int lambda = ps_.data(id).stats.lambda;
    const Rational& e = leading_coeff(id);
    auto [g, gp] = gamma_half(lambda - 1);
    SymbolicConstant out;
    out.coef = e / g;
    out.pi_half_power = 1 - gp;  // sqrt(pi) / Gamma((lambda-1)/2)
    out.n_exponent = make_rational(lambda, 2);
    return out;
}

double exact_scaled_moment(const LaurentPoly& f, int weight, std::size_t n) {
    Rational q = gf_coefficient(f, n);
    q /= Rational(catalan(static_cast<unsigned long>(n)));
    return q.get_d() / std::pow(static_cast<double>(n), static_cast<double>(weight) / 2.0);
}

}  // namespace pav
