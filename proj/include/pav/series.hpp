#pragma once

// Truncated formal power series over the rationals, and the generating-
// function bridge: a subcritical-branching expectation polynomial f(d)
// (Laurent in d^{-1}) is turned into the ordinary generating function
//   sum_{n>=1} C_n * z_n * x^n = P(x) * f(sqrt(1-4x)),
// where P(x) = (1 - 2x - sqrt(1-4x)) / (2x) = sum_{n>=1} C_n x^n and z_n is
// the quantity's mean over the uniform n-node binary tree.

#include <cstddef>
#include <vector>

#include "pav/laurent.hpp"
#include "pav/rational.hpp"

namespace pav {

class Series {
  public:
    // Zero series truncated after x^order.
    explicit Series(std::size_t order) : c_(order + 1, Rational(0)) {}

    std::size_t order() const { return c_.size() - 1; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    Series& scale(const Rational& c);
    friend Series operator*(const Rational& c, Series s) { return s.scale(c); }

    bool operator==(const Series& o) const { return c_ == o.c_; }

  private:
    std::vector<Rational> c_;  // c_[i] = coefficient of x^i
};

// (1 - 4x)^{h/2} through x^order for integer h, so binomial_series(-3, K) is
// (1-4x)^{-3/2} through x^K.  Coefficients obey the generalized binomial
// recurrence b_0 = 1, b_{i+1} = b_i * 2(2i - h)/(i + 1).
Series binomial_series(int half_exponent_numerator, std::size_t order);

// P(x) = (1 - 2x - sqrt(1-4x)) / (2x) = sum_{n>=1} C_n x^n, computed by the
// explicit cancellation (the numerator's constant and linear terms vanish
// exactly; this is asserted) rather than from the Catalan closed form, so it
// doubles as an internal consistency check.
Series catalan_gf(std::size_t order);

// Generating function sum_{n>=1} C_n z_n x^n for a mean-polynomial f that has
// only negative exponents (throws std::invalid_argument otherwise).
Series gf_from_expectation(const LaurentPoly& f, std::size_t order);

// Single coefficient [x^n] of the same generating function, computed without
// building O(n) series products (suitable for n in the thousands).
Rational gf_coefficient(const LaurentPoly& f, std::size_t n);

}  // namespace pav
