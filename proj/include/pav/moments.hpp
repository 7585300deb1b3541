#pragma once

// Mixed moments of pattern counts under the branching measure: a monomial
// prod_j X_{sigma_j}^{e_j} is expanded one factor at a time through the split
// recursion, terms are grouped by the (left-subtree, right-subtree) monomial
// pair, the two whole-copy terms are absorbed by solving the resulting linear
// equation, and the remainder recurses on strictly smaller total weight.  The
// result is again a polynomial in d^{-1}, of degree (sum e_j lambda_j) - 1,
// positive dominant coefficient, vanishing constant term.
//
// Independently, three scalar two-index recursions give the limit joint
// moments of (pattern, 12-pattern) pairs for the base patterns 123, 213, 231
// (the last family also covering 312); they serve as an oracle for the
// monomial engine and power the moment-constant tables.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pav/expectation.hpp"

namespace pav {

// Pattern-id/exponent pairs, sorted by (length, word); exponents >= 1.
using Monomial = std::vector<std::pair<int, unsigned>>;

class MomentEngine {
  public:
    MomentEngine() = default;

    ExpectationContext& expectation() { return ctx_; }
    PatternSet& patterns() { return ctx_.patterns(); }

    Monomial make_monomial(const std::vector<std::pair<Permutation, unsigned>>& factors);
    // Grammar: patterns joined by '*', each with an optional '^power', e.g.
    // "12^2" or "213*231"; repeated patterns merge.
    Monomial parse_monomial(const std::string& text);
    std::string monomial_str(const Monomial& m) const;

    int weight(const Monomial& m) const;  // sum exponent * lambda

    // Branching-measure mean of the monomial; memoized, recursion on weight.
    const LaurentPoly& moment_poly(const Monomial& m);

    // Limit of n^{-W/2} E prod X^e over uniform n-node trees:
    // (dominant coefficient) * sqrt(pi) / Gamma((W-1)/2), growth n^{W/2}.
    SymbolicConstant asymptotic_moment(const Monomial& m);

    // Exact scaled moment at finite n: E_n[prod X^e] / n^{W/2}.
    double finite_scaled_moment(const Monomial& m, std::size_t n);

    // Skewness of the limit law of a single pattern count; nullopt when the
    // limit is deterministic (the decreasing pattern).
    std::optional<double> skewness(const Permutation& sigma);

  private:
    ExpectationContext ctx_;
    std::map<Monomial, LaurentPoly> memo_;
};

// Scalar limit-moment recursion tables T(k, l) ~ E[Lambda_base^k Lambda_12^l]
// up to the closed-form prefactor; T(0,0) = -1/2 by convention and the
// recursions self-start from it.
enum class MomentFamily { p123, p213, p231 };

class MomentTable {
  public:
    explicit MomentTable(MomentFamily family) : family_(family) {}

    MomentFamily family() const { return family_; }
    // lambda(base pattern): 4 for the 123 family, 5 otherwise.
    int base_lambda() const { return family_ == MomentFamily::p123 ? 4 : 5; }

    const Rational& value(unsigned k, unsigned l);

    // k! l! sqrt(pi) / (2^{W-2} Gamma((W-1)/2)) with W = base_lambda*k + 3l;
    // requires k + l >= 1.
    SymbolicConstant prefactor(unsigned k, unsigned l) const;

    // prefactor * value: the limit mixed moment E[Lambda_base^k Lambda_12^l].
    SymbolicConstant mixed_moment(unsigned k, unsigned l);

  private:
    MomentFamily family_;
    std::map<std::pair<unsigned, unsigned>, Rational> memo_;
};

}  // namespace pav
