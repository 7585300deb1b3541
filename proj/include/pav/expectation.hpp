#pragma once

// Mean occurrence counts under the subcritical binomial branching measure on
// binary trees: for trees weighted by offspring probability (1-d)/2, the mean
// count of a 132-avoiding pattern is a polynomial in d^{-1} of degree
// lambda(sigma)-1 with vanishing constant term.  Conditioning on size n and
// letting d -> 0 turns the dominant coefficient into the n^{lambda/2} growth
// constant of the uniform-tree mean, via the singularity map
// E Z(T_n) ~ a * Gamma(1/2)/Gamma(m/2) * n^{(m+1)/2} for E_d Z = a d^{-m} + ...

#include <map>
#include <string>
#include <utility>

#include "pav/closure.hpp"
#include "pav/laurent.hpp"
#include "pav/rational.hpp"

namespace pav {

// Exact constant of the form coef * pi^{pi_half_power/2}, attached to a growth
// power n^{n_exponent}.
struct SymbolicConstant {
    Rational coef{0};
    int pi_half_power = 0;  // 0 or 1
    Rational n_exponent{0};

    double value() const;           // decimal of coef * pi^{p/2}
    std::string str() const;        // e.g. "sqrt(pi)/8 * n^{5/2}"
    std::string coef_str() const;   // constant part only
    bool operator==(const SymbolicConstant& o) const {
        return coef == o.coef && pi_half_power == o.pi_half_power && n_exponent == o.n_exponent;
    }
};

// Gamma(twice_arg / 2) for twice_arg >= 1, exactly, as coef * pi^{p/2}.
std::pair<Rational, int> gamma_half(int twice_arg);

// -1/2 (d^{-1} - d) f' + d^{-1} f: the mean of (size x quantity) from the mean
// of the quantity, under the same branching measure.
LaurentPoly size_bias(const LaurentPoly& f);

class ExpectationContext {
  public:
    PatternSet& patterns() { return ps_; }
    const PatternSet& patterns() const { return ps_; }

    // Branching-measure mean polynomial for sigma; memoized.  Asserts the
    // structural facts the downstream analysis relies on: only negative
    // exponents, degree exactly lambda-1, vanishing constant term, and a
    // dominant coefficient matching the independent top-coefficient recursion.
    const LaurentPoly& mean_poly(const Permutation& sigma);
    const LaurentPoly& mean_poly(int id);

    // Dominant coefficient by its own closed recursion (independent of the
    // full polynomial): e(single point) = 1,
    // e(sigma) = 1/4 sum_{q in delta} e(prefix_q) e(suffix_q)
    //          + [max at the end] 1/2 e(sigma minus its maximum).
    const Rational& leading_coeff(const Permutation& sigma);
    const Rational& leading_coeff(int id);

    // Growth constant and exponent of the uniform-tree mean:
    // coef * pi^{1/2} / Gamma((lambda-1)/2) * n^{lambda/2}.
    SymbolicConstant asymptotic_mean(const Permutation& sigma);

  private:
    PatternSet ps_;
    // Node-stable containers: recursive calls insert while references to
    // earlier results are still live.
    std::map<int, LaurentPoly> poly_memo_;
    std::map<int, Rational> lead_memo_;
};

// Exact scaled moment of the uniform n-node tree for a quantity with
// branching-mean polynomial f and scaling n^{weight/2}:
//   ([x^n] gf) / C_n / n^{weight/2}, as a double.
double exact_scaled_moment(const LaurentPoly& f, int weight, std::size_t n);

}  // namespace pav
