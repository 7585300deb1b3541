#pragma once

// Sparse Laurent polynomials in one variable d with exact rational
// coefficients.  The expectation engines produce polynomials in d^{-1}, so
// negative exponents are the common case; positive exponents are allowed so
// intermediate factors like (1-d)^2 can be represented directly.

#include <map>
#include <stdexcept>
#include <string>

#include "pav/rational.hpp"

namespace pav {

class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) {
        if (c != 0) coeffs_[0] = c;
    }

    // c * d^e
    static LaurentPoly term(const Rational& c, int e) {
        LaurentPoly p;
        if (c != 0) p.coeffs_[e] = c;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    const Rational& coeff(int e) const {
        static const Rational zero(0);
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? zero : it->second;
    }

    // Smallest / largest exponent present; throws on the zero polynomial.
    int min_exp() const {
        require_nonzero();
        return coeffs_.begin()->first;
    }
    int max_exp() const {
        require_nonzero();
        return coeffs_.rbegin()->first;
    }

    // Coefficient of the most negative exponent (the dominant term as d -> 0+).
    const Rational& leading_coeff() const {
        require_nonzero();
        return coeffs_.begin()->second;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly& scale(const Rational& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [e, v] : coeffs_) v *= c;
        return *this;
    }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly p) { return p.scale(c); }

    // Multiplies by d^k (shifts every exponent).
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
        return r;
    }

    LaurentPoly pow(unsigned k) const {
        LaurentPoly r(Rational(1));
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    // d/dd
    LaurentPoly derivative() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_)
            if (e != 0) r.coeffs_[e - 1] = Rational(e) * c;
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (const auto& [e, c] : coeffs_) r += c * pav::pow(x, e);
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    const std::map<int, Rational>& terms() const { return coeffs_; }

    // Human-readable, highest (most negative) order first: "1/4 d^-3 - 1/4 d^-1".
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : coeffs_) {
            Rational a = c;
            if (out.empty()) {
                if (a < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            out += a.get_str();
            if (e != 0) out += " d^" + std::to_string(e);
        }
        return out;
    }

  private:
    void require_nonzero() const {
        if (coeffs_.empty()) throw std::logic_error("zero polynomial has no exponent range");
    }
    void add_term(int e, const Rational& c) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            if (c != 0) coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    std::map<int, Rational> coeffs_;  // exponent -> nonzero coefficient
};

}  // namespace pav
