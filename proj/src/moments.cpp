#include "pav/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pav/series.hpp"

namespace pav {

namespace {

// Inserts one factor into an id-sorted monomial key.
void add_factor(Monomial& m, int id, const PatternSet& ps) {
    auto it = std::lower_bound(m.begin(), m.end(), id, [&](const auto& f, int v) { return ps.id_less(f.first, v); });
    if (it != m.end() && it->first == id)
        ++it->second;
    else
        m.insert(it, {id, 1u});
}

}  // namespace

Monomial MomentEngine::make_monomial(const std::vector<std::pair<Permutation, unsigned>>& factors) {
    Monomial m;
    for (const auto& [sigma, e] : factors) {
        const int id = patterns().intern(sigma);
        for (unsigned t = 0; t < e; ++t) add_factor(m, id, patterns());
    }
    return m;
}

Monomial MomentEngine::parse_monomial(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty monomial");
    std::vector<std::pair<Permutation, unsigned>> factors;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find('*', pos);
        if (next == std::string::npos) next = text.size();
        std::string tok = text.substr(pos, next - pos);
        if (tok.empty()) throw std::invalid_argument("empty factor in monomial '" + text + "'");
        unsigned power = 1;
        if (std::size_t caret = tok.find('^'); caret != std::string::npos) {
            const std::string ptxt = tok.substr(caret + 1);
            std::size_t used = 0;
            const int p = std::stoi(ptxt, &used);
            if (used != ptxt.size() || p < 1)
                throw std::invalid_argument("bad power in monomial '" + text + "'");
            power = static_cast<unsigned>(p);
            tok = tok.substr(0, caret);
        }
        factors.emplace_back(parse_pattern(tok), power);
        pos = next + 1;
        if (next == text.size()) break;
    }
    return make_monomial(factors);
}

std::string MomentEngine::monomial_str(const Monomial& m) const {
    std::string out;
    for (const auto& [id, e] : m) {
        if (!out.empty()) out += '*';
        out += ctx_.patterns().data(id).perm.str();
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

int MomentEngine::weight(const Monomial& m) const {
    int w = 0;
    for (const auto& [id, e] : m) w += static_cast<int>(e) * ctx_.patterns().data(id).stats.lambda;
    return w;
}

const LaurentPoly& MomentEngine::moment_poly(const Monomial& m) {
    if (m.empty()) throw std::invalid_argument("moment of the empty monomial");
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;

    const PatternSet& ps = ctx_.patterns();
    const int w = weight(m);

    // Expand factor by factor, grouping identical (left, right) splits.
    std::map<std::pair<Monomial, Monomial>, BigInt> terms;
    terms[{Monomial{}, Monomial{}}] = 1;
    for (const auto& [id, e] : m) {
        const std::vector<SplitChoice> choices = ps.data(id).choices;
        for (unsigned copy = 0; copy < e; ++copy) {
            std::map<std::pair<Monomial, Monomial>, BigInt> next;
            for (const auto& [key, coef] : terms) {
                for (const SplitChoice& c : choices) {
                    std::pair<Monomial, Monomial> nk = key;
                    if (c.left >= 0) add_factor(nk.first, c.left, ps);
                    if (c.right >= 0) add_factor(nk.second, c.right, ps);
                    next[std::move(nk)] += coef;
                }
            }
            terms.swap(next);
        }
    }

    // (1 - d)/2: the probability that a given subtree is nonempty.
    const LaurentPoly occupied =
        LaurentPoly::term(Rational(1, 2), 0) + LaurentPoly::term(Rational(-1, 2), 1);

    LaurentPoly rest;
    for (const auto& [key, coef] : terms) {
        const auto& [lmon, rmon] = key;
        const bool all_left = (lmon == m && rmon.empty());
        const bool all_right = (rmon == m && lmon.empty());
        if (all_left || all_right) {
            // The two whole-copy terms each contribute (1-d)/2 * E[this
            // monomial]; they are moved to the left-hand side of the linear
            // equation, so they must appear exactly once each.
            if (coef != 1) throw std::logic_error("whole-copy split term has unexpected multiplicity");
            continue;
        }
        if (!lmon.empty() && weight(lmon) >= w)
            throw std::logic_error("split term does not lower the weight");
        if (!rmon.empty() && weight(rmon) >= w)
            throw std::logic_error("split term does not lower the weight");
        LaurentPoly val{Rational(coef)};
        if (!lmon.empty()) val *= occupied * moment_poly(lmon);
        if (!rmon.empty()) val *= occupied * moment_poly(rmon);
        rest += val;
    }
    // E M = (1 - d) E M + rest   =>   E M = d^{-1} rest.
    LaurentPoly result = rest.shifted(-1);

    if (result.is_zero() || result.max_exp() > -1)
        throw std::logic_error("moment polynomial has nonnegative exponents");
    if (result.min_exp() != -(w - 1)) throw std::logic_error("moment polynomial degree mismatch");
    if (result.leading_coeff() <= 0) throw std::logic_error("moment polynomial has nonpositive dominant term");

    return memo_.emplace(m, std::move(result)).first->second;
}

SymbolicConstant MomentEngine::asymptotic_moment(const Monomial& m) {
    const int w = weight(m);
    const Rational lead = moment_poly(m).leading_coeff();
    auto [g, gp] = gamma_half(w - 1);
    SymbolicConstant out;
    out.coef = lead / g;
    out.pi_half_power = 1 - gp;
    out.n_exponent = make_rational(w, 2);
    return out;
}

double MomentEngine::finite_scaled_moment(const Monomial& m, std::size_t n) {
    return exact_scaled_moment(moment_poly(m), weight(m), n);
}

std::optional<double> MomentEngine::skewness(const Permutation& sigma) {
    const int k = sigma.size();
    bool decreasing = true;
    for (int i = 1; i <= k; ++i)
        if (sigma(i) != k + 1 - i) decreasing = false;
    if (decreasing) return std::nullopt;  // deterministic limit: zero variance

    Monomial m1 = make_monomial({{sigma, 1}});
    Monomial m2 = make_monomial({{sigma, 2}});
    Monomial m3 = make_monomial({{sigma, 3}});
    const double e1 = asymptotic_moment(m1).value();
    const double e2 = asymptotic_moment(m2).value();
    const double e3 = asymptotic_moment(m3).value();
    const double var = e2 - e1 * e1;
    const double mu3 = e3 - 3.0 * e2 * e1 + 2.0 * e1 * e1 * e1;
    return mu3 / std::pow(var, 1.5);
}

const Rational& MomentTable::value(unsigned k, unsigned l) {
    if (auto it = memo_.find({k, l}); it != memo_.end()) return it->second;
    Rational v;
    if (k == 0 && l == 0) {
        v = Rational(-1, 2);
    } else {
        const long c = base_lambda();
        const long w = c * static_cast<long>(k) + 3 * static_cast<long>(l);
        v = 0;
        switch (family_) {
            case MomentFamily::p123: {
                if (k >= 1) v += Rational(static_cast<long>(l) + 1) * value(k - 1, l + 1);
                if (l >= 1) v += Rational(2 * (w - 4)) * value(k, l - 1);
                for (unsigned i = 0; i <= k; ++i)
                    for (unsigned j = 0; j <= l; ++j) {
                        if ((i == 0 && j == 0) || (i == k && j == l)) continue;
                        const Rational a = value(i, j);
                        v += a * value(k - i, l - j);
                    }
                break;
            }
            case MomentFamily::p213: {
                if (k >= 1) v += Rational(2 * (w - 6) * (w - 4)) * value(k - 1, l);
                if (l >= 1) v += Rational(2 * (w - 4)) * value(k, l - 1);
                for (unsigned i = 0; i <= k; ++i)
                    for (unsigned j = 0; j <= l; ++j) {
                        if ((i == 0 && j == 0) || (i == k && j == l)) continue;
                        const Rational a = value(i, j);
                        v += a * value(k - i, l - j);
                    }
                break;
            }
            case MomentFamily::p231: {
                if (l >= 1) v += Rational(2 * (w - 4)) * value(k, l - 1);
                for (unsigned i = 0; i <= k; ++i)
                    for (unsigned j = 0; j <= l; ++j)
                        for (unsigned mm = 0; mm + i <= k; ++mm) {
                            if (i == 0 && j == 0 && mm == 0) continue;
                            if (i == k && j == l && mm == 0) continue;
                            const Rational base =
                                make_rational(5 * static_cast<long>(i) + 3 * static_cast<long>(j) - 1, 2);
                            Rational factor = rising_factorial(base, mm);
                            factor *= Rational(BigInt(1) << (2 * mm));
                            factor *= Rational(binomial(static_cast<unsigned long>(l - j + mm),
                                                        static_cast<unsigned long>(mm)));
                            const Rational a = value(i, j);
                            v += factor * a * value(k - i - mm, l - j + mm);
                        }
                break;
            }
        }
    }
    return memo_.emplace(std::make_pair(k, l), std::move(v)).first->second;
}

SymbolicConstant MomentTable::prefactor(unsigned k, unsigned l) const {
    if (k + l == 0) throw std::invalid_argument("prefactor undefined at (0,0)");
    const long w = base_lambda() * static_cast<long>(k) + 3 * static_cast<long>(l);
    auto [g, gp] = gamma_half(static_cast<int>(w) - 1);
    SymbolicConstant out;
    out.coef = Rational(factorial(k) * factorial(l)) / (Rational(BigInt(1) << (w - 2)) * g);
    out.pi_half_power = 1 - gp;
    out.n_exponent = make_rational(w, 2);
    return out;
}

SymbolicConstant MomentTable::mixed_moment(unsigned k, unsigned l) {
    SymbolicConstant out = prefactor(k, l);
    out.coef *= value(k, l);
    return out;
}

}  // namespace pav
