#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pav/enumerate.hpp"
#include "pav/expectation.hpp"
#include "pav/moments.hpp"
#include "pav/permutation.hpp"
#include "pav/rational.hpp"
#include "pav/series.hpp"

using namespace pav;

namespace {

SymbolicConstant symc(const Rational& c, int p, const Rational& e) {
    SymbolicConstant s;
    s.coef = c;
    s.pi_half_power = p;
    s.n_exponent = e;
    return s;
}

}  // namespace

TEST_CASE("monomial construction, parsing, and printing") {
    MomentEngine eng;
    const Monomial a = eng.parse_monomial("12^2");
    CHECK(a == eng.make_monomial({{parse_pattern("12"), 2}}));
    CHECK(eng.parse_monomial("12*12") == a);
    CHECK(eng.monomial_str(a) == "12^2");

    const Monomial b = eng.parse_monomial("231*12*213");
    CHECK(eng.monomial_str(b) == "12*213*231");  // sorted by length, then word
    CHECK(eng.weight(b) == 13);
    CHECK(eng.weight(a) == 6);

    CHECK(eng.make_monomial({{parse_pattern("21"), 0}}).empty());
    CHECK(eng.monomial_str({}) == "1");

    CHECK_THROWS_AS(eng.parse_monomial(""), std::invalid_argument);
    CHECK_THROWS_AS(eng.parse_monomial("12**21"), std::invalid_argument);
    CHECK_THROWS_AS(eng.parse_monomial("12^0"), std::invalid_argument);
    CHECK_THROWS_AS(eng.parse_monomial("12^2x"), std::invalid_argument);
    CHECK_THROWS_AS(eng.moment_poly({}), std::invalid_argument);
}

TEST_CASE("single-factor monomials reduce to the mean polynomials") {
    MomentEngine eng;
    for (const char* s : {"1", "12", "21", "213", "321", "3241"}) {
        const Permutation sigma = parse_pattern(s);
        CHECK(eng.moment_poly(eng.make_monomial({{sigma, 1}})) ==
              eng.expectation().mean_poly(sigma));
        CHECK(eng.asymptotic_moment(eng.make_monomial({{sigma, 1}})) ==
              eng.expectation().asymptotic_mean(sigma));
    }
}

TEST_CASE("pure size moments match iterated size biasing") {
    MomentEngine eng;
    const Permutation point = parse_pattern("1");
    LaurentPoly f{Rational(1)};
    for (unsigned k = 1; k <= 5; ++k) {
        f = size_bias(f);
        CHECK(eng.moment_poly(eng.make_monomial({{point, k}})) == f);
    }
    // mixing in one size factor is one application of the bias operator
    CHECK(eng.moment_poly(eng.parse_monomial("1*12")) ==
          size_bias(eng.expectation().mean_poly(parse_pattern("12"))));
}

TEST_CASE("moment polynomials reproduce the exhaustive mixed moments") {
    MomentEngine eng;
    struct Case {
        const char* text;
        std::vector<std::pair<const char*, unsigned>> factors;
        int max_n;
    };
    const std::vector<Case> cases = {{"12^2", {{"12", 2}}, 8},
                                     {"21^2", {{"21", 2}}, 7},
                                     {"12*123", {{"12", 1}, {"123", 1}}, 7},
                                     {"213*231", {{"213", 1}, {"231", 1}}, 6},
                                     {"12^3", {{"12", 3}}, 6}};
    for (const Case& c : cases) {
        const LaurentPoly& f = eng.moment_poly(eng.parse_monomial(c.text));
        std::vector<PatternPower> mono;
        for (const auto& [s, e] : c.factors) mono.emplace_back(parse_pattern(s), e);
        for (int n = 1; n <= c.max_n; ++n) {
            const Rational want =
                exact_mixed_moment(mono, n) * Rational(catalan(static_cast<unsigned long>(n)));
            CHECK(gf_coefficient(f, static_cast<std::size_t>(n)) == want);
        }
    }
}

TEST_CASE("limit second moments of the scaled counts") {
    MomentEngine eng;
    auto mom = [&](const char* text) { return eng.asymptotic_moment(eng.parse_monomial(text)); };
    CHECK(mom("12^2") == symc(make_rational(5, 6), 0, Rational(3)));
    CHECK(mom("123^2") == symc(make_rational(19, 60), 0, Rational(4)));
    CHECK(mom("213^2") == symc(make_rational(7, 120), 0, Rational(5)));
    CHECK(mom("231^2") == symc(make_rational(43, 840), 0, Rational(5)));
    CHECK(mom("312^2") == symc(make_rational(43, 840), 0, Rational(5)));
    CHECK(mom("12*213") == symc(make_rational(13, 60), 0, Rational(4)));
    CHECK(mom("12*231") == symc(make_rational(1, 5), 0, Rational(4)));
    CHECK(mom("12*312") == symc(make_rational(1, 5), 0, Rational(4)));
    CHECK(mom("231*312") == symc(make_rational(41, 840), 0, Rational(5)));
    CHECK(mom("213*231") == symc(make_rational(1, 20), 0, Rational(5)));
    CHECK(mom("213*312") == symc(make_rational(1, 20), 0, Rational(5)));
}

TEST_CASE("finite scaled moments approach their limits from below") {
    MomentEngine eng;
    const Monomial m = eng.parse_monomial("12^2");
    const double limit = eng.asymptotic_moment(m).value();
    const double direct = exact_mixed_moment({{parse_pattern("12"), 2}}, 8).get_d() / std::pow(8.0, 3.0);
    CHECK(eng.finite_scaled_moment(m, 8) == doctest::Approx(direct).epsilon(1e-13));
    const double at_200 = eng.finite_scaled_moment(m, 200);
    const double at_2000 = eng.finite_scaled_moment(m, 2000);
    CHECK(at_200 < at_2000);
    CHECK(at_2000 < limit);
    CHECK(std::abs(at_2000 - limit) < std::abs(at_200 - limit));
}

TEST_CASE("limit-law skewness") {
    MomentEngine eng;
    CHECK(!eng.skewness(parse_pattern("21")).has_value());
    CHECK(!eng.skewness(parse_pattern("321")).has_value());
    CHECK(!eng.skewness(parse_pattern("4321")).has_value());

    const auto s312 = eng.skewness(parse_pattern("312"));
    REQUIRE(s312.has_value());
    CHECK(*s312 == doctest::Approx(0.76384).epsilon(3e-5));
    CHECK(eng.skewness(parse_pattern("231")) == s312);

    const auto s12 = eng.skewness(parse_pattern("12"));
    REQUIRE(s12.has_value());
    CHECK(*s12 > 0.0);
}

TEST_CASE("scalar tables start from the shared seed and pure-pair column") {
    MomentTable t123(MomentFamily::p123);
    MomentTable t213(MomentFamily::p213);
    MomentTable t231(MomentFamily::p231);
    CHECK(t123.base_lambda() == 4);
    CHECK(t213.base_lambda() == 5);
    CHECK(t231.base_lambda() == 5);
    for (MomentTable* t : {&t123, &t213, &t231}) {
        CHECK(t->value(0, 0) == make_rational(-1, 2));
        CHECK(t->value(0, 1) == 1);
        CHECK(t->value(0, 2) == 5);
    }
    for (unsigned l = 1; l <= 5; ++l) {
        CHECK(t123.value(0, l) == t213.value(0, l));
        CHECK(t123.value(0, l) == t231.value(0, l));
    }
}

TEST_CASE("scalar table entries for the first mixed rows") {
    MomentTable t123(MomentFamily::p123);
    MomentTable t213(MomentFamily::p213);
    MomentTable t231(MomentFamily::p231);
    CHECK(t123.value(1, 1) == 18);
    CHECK(t123.value(2, 0) == 19);
    CHECK(t213.value(1, 1) == 26);
    CHECK(t213.value(2, 0) == 49);
    CHECK(t231.value(1, 1) == 24);
    CHECK(t231.value(2, 0) == 43);
}

TEST_CASE("table prefactors") {
    MomentTable t123(MomentFamily::p123);
    CHECK_THROWS_AS(t123.prefactor(0, 0), std::invalid_argument);
    // 0!1! sqrt(pi) / (2^1 Gamma(1)) = sqrt(pi)/2 on growth n^{3/2}
    CHECK(t123.prefactor(0, 1) == symc(make_rational(1, 2), 1, make_rational(3, 2)));
    CHECK(t123.mixed_moment(0, 1) == symc(make_rational(1, 2), 1, make_rational(3, 2)));
    // 2!0! sqrt(pi) / (2^6 Gamma(7/2)) = 1/60
    CHECK(t123.prefactor(2, 0) == symc(make_rational(1, 60), 0, Rational(4)));
    CHECK(t123.mixed_moment(2, 0) == symc(make_rational(19, 60), 0, Rational(4)));
}

TEST_CASE("scalar tables and the monomial engine agree on every joint moment") {
    MomentEngine eng;
    const Permutation p12 = parse_pattern("12");
    const std::pair<MomentFamily, const char*> families[] = {
        {MomentFamily::p123, "123"}, {MomentFamily::p213, "213"}, {MomentFamily::p231, "231"}};
    for (const auto& [fam, base_text] : families) {
        MomentTable table(fam);
        const Permutation base = parse_pattern(base_text);
        for (unsigned k = 0; k <= 3; ++k) {
            for (unsigned l = 0; l <= 4; ++l) {
                if (k + l == 0) continue;
                const int w = table.base_lambda() * static_cast<int>(k) + 3 * static_cast<int>(l);
                if (w > 14) continue;
                const Monomial mono = eng.make_monomial({{base, k}, {p12, l}});
                CHECK(table.mixed_moment(k, l) == eng.asymptotic_moment(mono));
            }
        }
    }
}
