// pavstat: command-line front end for the pattern-statistics engines.
//
// Subcommands: expect, moment, exact, gf, sample, excursion, table, verify.
// Exact rationals print as "p/q"; constants involving pi print as
// "q*sqrt(pi)" together with a decimal.  Exit codes: 0 success, 1 internal
// failure or verification mismatch, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pav/enumerate.hpp"
#include "pav/excursion.hpp"
#include "pav/expectation.hpp"
#include "pav/laurent.hpp"
#include "pav/moments.hpp"
#include "pav/permutation.hpp"
#include "pav/rational.hpp"
#include "pav/sampler.hpp"
#include "pav/series.hpp"

using json = nlohmann::json;
using namespace pav;

namespace {

std::vector<Permutation> parse_pattern_list(const std::vector<std::string>& texts) {
    std::vector<Permutation> out;
    out.reserve(texts.size());
    for (const std::string& t : texts) out.push_back(parse_pattern(t));
    if (out.empty()) throw std::invalid_argument("at least one pattern is required");
    return out;
}

void emit(const json& j, bool to_stdout, const std::string& out_path) {
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << j.dump(2) << '\n';
    }
    if (to_stdout) std::cout << j.dump(2) << '\n';
}

json per_pattern_json(const PatternSampleStats& p) {
    return json{{"pattern", p.pattern},
                {"lambda", p.lambda},
                {"mean", p.mean},
                {"se_mean", p.se_mean},
                {"variance", p.variance},
                {"second_moment", p.second_moment},
                {"se_second", p.se_second},
                {"skewness", p.skewness}};
}

void print_per_pattern(const std::vector<PatternSampleStats>& rows) {
    std::printf("%-10s %6s %12s %12s %12s %12s %12s %10s\n", "pattern", "lambda", "mean", "se",
                "variance", "second", "se_second", "skewness");
    for (const auto& p : rows)
        std::printf("%-10s %6d %12.6f %12.3g %12.6f %12.6f %12.3g %10.4f\n", p.pattern.c_str(),
                    p.lambda, p.mean, p.se_mean, p.variance, p.second_moment, p.se_second,
                    p.skewness);
}

void print_matrix(const char* title, const std::vector<std::vector<double>>& m) {
    std::printf("%s:\n", title);
    for (const auto& row : m) {
        for (double v : row) std::printf(" %12.6f", v);
        std::printf("\n");
    }
}

// ---- expect -----------------------------------------------------------------
int run_expect(const std::string& sigma_text, int gf_terms, bool as_json) {
    ExpectationContext ctx;
    const Permutation sigma = parse_pattern(sigma_text);
    const LaurentPoly& f = ctx.mean_poly(sigma);
    const SymbolicConstant a = ctx.asymptotic_mean(sigma);
    const PatternStats facts = pattern_stats(sigma);
    json gf_rows = json::array();
    for (int n = 1; n <= gf_terms; ++n) {
        const Rational total = gf_coefficient(f, static_cast<std::size_t>(n));
        const Rational mean = total / Rational(catalan(static_cast<unsigned long>(n)));
        gf_rows.push_back(json{{"n", n}, {"total", to_string(total)}, {"mean", to_string(mean)}});
    }
    if (as_json) {
        json j{{"pattern", sigma.str()},
               {"lambda", facts.lambda},
               {"mean_poly", f.str()},
               {"leading_coeff", to_string(ctx.leading_coeff(sigma))},
               {"growth",
                json{{"constant", a.coef_str()},
                     {"decimal", a.value()},
                     {"n_exponent", to_string(a.n_exponent)},
                     {"str", a.str()}}}};
        if (gf_terms > 0) j["gf"] = gf_rows;
        emit(j, true, "");
        return 0;
    }
    std::printf("pattern %s   lambda = %d\n", sigma.str().c_str(), facts.lambda);
    std::printf("mean polynomial: %s\n", f.str().c_str());
    std::printf("leading coefficient: %s\n", to_string(ctx.leading_coeff(sigma)).c_str());
    std::printf("A = %s  (constant %s ~ %.10g)\n", a.str().c_str(), a.coef_str().c_str(),
                a.value());
    if (gf_terms > 0) {
        std::printf("%4s %20s %20s\n", "n", "total", "mean");
        for (const auto& row : gf_rows)
            std::printf("%4d %20s %20s\n", row["n"].get<int>(),
                        row["total"].get<std::string>().c_str(),
                        row["mean"].get<std::string>().c_str());
    }
    return 0;
}

// ---- moment -----------------------------------------------------------------
int run_moment(const std::string& monomial_text, bool as_json) {
    MomentEngine eng;
    const Monomial m = eng.parse_monomial(monomial_text);
    const LaurentPoly& f = eng.moment_poly(m);
    const SymbolicConstant a = eng.asymptotic_moment(m);
    if (as_json) {
        emit(json{{"monomial", eng.monomial_str(m)},
                  {"weight", eng.weight(m)},
                  {"moment_poly", f.str()},
                  {"limit",
                   json{{"constant", a.coef_str()},
                        {"decimal", a.value()},
                        {"n_exponent", to_string(a.n_exponent)},
                        {"str", a.str()}}}},
             true, "");
        return 0;
    }
    std::printf("monomial %s   weight = %d\n", eng.monomial_str(m).c_str(), eng.weight(m));
    std::printf("moment polynomial: %s\n", f.str().c_str());
    std::printf("E = %s  (constant %s ~ %.10g)\n", a.str().c_str(), a.coef_str().c_str(),
                a.value());
    return 0;
}

// ---- exact ------------------------------------------------------------------
int run_exact(int n, const std::vector<std::string>& pattern_texts, const std::string& stat,
              int cap, bool as_json) {
    const std::vector<Permutation> sigmas = parse_pattern_list(pattern_texts);
    json rows = json::array();
    for (const Permutation& s : sigmas) {
        Rational value;
        if (stat == "mean") {
            value = exact_mean(s, n, cap);
        } else if (stat == "second") {
            value = exact_mixed_moment({{s, 2}}, n, cap);
        } else {  // var
            const Rational m1 = exact_mean(s, n, cap);
            value = exact_mixed_moment({{s, 2}}, n, cap) - m1 * m1;
        }
        rows.push_back(json{{"sigma", s.str()}, {"stat", stat}, {"value", to_string(value)}});
    }
    if (as_json) {
        emit(json{{"n", n}, {"rows", rows}}, true, "");
    } else {
        std::printf("n,sigma,stat,value\n");
        for (const auto& r : rows)
            std::printf("%d,%s,%s,%s\n", n, r["sigma"].get<std::string>().c_str(),
                        r["stat"].get<std::string>().c_str(),
                        r["value"].get<std::string>().c_str());
    }
    return 0;
}

// ---- gf ---------------------------------------------------------------------
int run_gf(const std::string& sigma_text, int count, bool as_json) {
    ExpectationContext ctx;
    const Permutation sigma = parse_pattern(sigma_text);
    const LaurentPoly& f = ctx.mean_poly(sigma);
    json rows = json::array();
    for (int n = 1; n <= count; ++n) {
        const Rational total = gf_coefficient(f, static_cast<std::size_t>(n));
        const Rational mean = total / Rational(catalan(static_cast<unsigned long>(n)));
        rows.push_back(json{{"n", n}, {"total", to_string(total)}, {"mean", to_string(mean)}});
    }
    if (as_json) {
        emit(json{{"pattern", sigma.str()}, {"rows", rows}}, true, "");
    } else {
        std::printf("n,total,mean\n");
        for (const auto& r : rows)
            std::printf("%d,%s,%s\n", r["n"].get<int>(), r["total"].get<std::string>().c_str(),
                        r["mean"].get<std::string>().c_str());
    }
    return 0;
}

// ---- sample -----------------------------------------------------------------
int run_sample(int n, uint64_t reps, const std::vector<std::string>& pattern_texts, uint64_t seed,
               unsigned threads, const std::string& out_path, bool as_json) {
    const std::vector<Permutation> sigmas = parse_pattern_list(pattern_texts);
    const SampleStats s = sample_scaled_stats(n, sigmas, reps, seed, threads);
    json per = json::array();
    for (const auto& p : s.per_pattern) per.push_back(per_pattern_json(p));
    const json j{{"n", s.n},
                 {"reps", s.reps},
                 {"seed", s.seed},
                 {"per_pattern", per},
                 {"second_moments", s.second_moment_matrix},
                 {"second_moment_se", s.second_moment_se},
                 {"covariances", s.covariance}};
    emit(j, as_json, out_path);
    if (!as_json) {
        std::printf("n=%d reps=%llu seed=%llu\n", s.n, static_cast<unsigned long long>(s.reps),
                    static_cast<unsigned long long>(s.seed));
        print_per_pattern(s.per_pattern);
        print_matrix("covariances", s.covariance);
    }
    return 0;
}

// ---- excursion --------------------------------------------------------------
int run_excursion(int m, uint64_t reps, const std::vector<std::string>& pattern_texts,
                  uint64_t seed, unsigned threads, const std::string& out_path, bool as_json) {
    const std::vector<Permutation> sigmas = parse_pattern_list(pattern_texts);
    const ExcursionStats s = excursion_scaled_stats(m, sigmas, reps, seed, threads);
    json per = json::array();
    for (const auto& p : s.per_pattern) per.push_back(per_pattern_json(p));
    const json j{{"m", s.m},
                 {"reps", s.reps},
                 {"seed", s.seed},
                 {"per_pattern", per},
                 {"second_moments", s.second_moment_matrix},
                 {"covariances", s.covariance},
                 {"identity",
                  json{{"checked", s.identity_checked},
                       {"max_residual", s.max_identity_residual}}}};
    emit(j, as_json, out_path);
    if (!as_json) {
        std::printf("m=%d reps=%llu seed=%llu\n", s.m, static_cast<unsigned long long>(s.reps),
                    static_cast<unsigned long long>(s.seed));
        print_per_pattern(s.per_pattern);
        if (s.identity_checked)
            std::printf("pair identity max residual: %.3g\n", s.max_identity_residual);
    }
    return 0;
}

// ---- table ------------------------------------------------------------------
int run_table(bool as_json, bool as_csv) {
    MomentEngine eng;
    ExpectationContext& ctx = eng.expectation();

    struct MeanRow {
        std::string pattern, poly, growth, constant;
        int lambda;
        double decimal;
    };
    std::vector<MeanRow> means;
    for (int k = 1; k <= 4; ++k)
        for (const Permutation& s : all_avoiders(k)) {
            const SymbolicConstant a = ctx.asymptotic_mean(s);
            means.push_back({s.str(), ctx.mean_poly(s).str(), a.str(), a.coef_str(),
                             pattern_stats(s).lambda, a.value()});
        }
    for (int k = 5; k <= 6; ++k) {  // the increasing family beyond size 4
        std::vector<int> w(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = i + 1;
        const Permutation s{w};
        const SymbolicConstant a = ctx.asymptotic_mean(s);
        means.push_back({s.str(), ctx.mean_poly(s).str(), a.str(), a.coef_str(),
                         pattern_stats(s).lambda, a.value()});
    }

    const std::vector<std::string> moment_texts = {"12^2",   "123^2",  "213^2",   "231^2",
                                                   "312^2",  "12*213", "12*231",  "12*312",
                                                   "213*231", "213*312", "231*312"};
    struct MomRow {
        std::string monomial, exact;
        int weight;
        double decimal;
        std::string n_exponent;
    };
    std::vector<MomRow> moments;
    for (const std::string& t : moment_texts) {
        const Monomial m = eng.parse_monomial(t);
        const SymbolicConstant a = eng.asymptotic_moment(m);
        moments.push_back(
            {eng.monomial_str(m), a.coef_str(), eng.weight(m), a.value(), to_string(a.n_exponent)});
    }

    const char* trio[3] = {"213", "231", "312"};
    std::vector<std::vector<std::string>> matrix(3, std::vector<std::string>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Monomial m = eng.make_monomial(
                {{parse_pattern(trio[i]), 1}, {parse_pattern(trio[j]), 1}});
            matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                eng.asymptotic_moment(m).coef_str();
        }
    const double skew312 = *eng.skewness(parse_pattern("312"));

    if (as_json) {
        json jm = json::array();
        for (const auto& r : means)
            jm.push_back(json{{"pattern", r.pattern},
                              {"lambda", r.lambda},
                              {"mean_poly", r.poly},
                              {"growth", r.growth},
                              {"constant", r.constant},
                              {"decimal", r.decimal}});
        json jo = json::array();
        for (const auto& r : moments)
            jo.push_back(json{{"monomial", r.monomial},
                              {"weight", r.weight},
                              {"exact", r.exact},
                              {"decimal", r.decimal},
                              {"n_exponent", r.n_exponent}});
        emit(json{{"means", jm},
                  {"limit_moments", jo},
                  {"pair_moment_matrix", json{{"patterns", {"213", "231", "312"}},
                                              {"entries", matrix}}},
                  {"skewness_312", skew312}},
             true, "");
        return 0;
    }
    if (as_csv) {
        std::printf("section,key,weight,exact,decimal\n");
        for (const auto& r : means)
            std::printf("mean,%s,%d,%s,%.12g\n", r.pattern.c_str(), r.lambda, r.constant.c_str(),
                        r.decimal);
        for (const auto& r : moments)
            std::printf("moment,%s,%d,%s,%.12g\n", r.monomial.c_str(), r.weight, r.exact.c_str(),
                        r.decimal);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                std::printf("pair_moment,%s*%s,10,%s,\n", trio[i], trio[j],
                            matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                .c_str());
        std::printf("skewness,312,,,%.6f\n", skew312);
        return 0;
    }
    std::printf("Mean polynomials and growth constants\n");
    std::printf("%-8s %6s  %-22s %-12s %s\n", "pattern", "lambda", "growth", "~decimal",
                "mean polynomial");
    for (const auto& r : means)
        std::printf("%-8s %6d  %-22s %-12.8g %s\n", r.pattern.c_str(), r.lambda, r.growth.c_str(),
                    r.decimal, r.poly.c_str());
    std::printf("\nLimit mixed moments (scaled counts)\n");
    std::printf("%-10s %6s %14s %14s\n", "monomial", "weight", "exact", "decimal");
    for (const auto& r : moments)
        std::printf("%-10s %6d %14s %14.8f\n", r.monomial.c_str(), r.weight, r.exact.c_str(),
                    r.decimal);
    std::printf("\nPair moment matrix (213, 231, 312), entries E L_i L_j on n^5\n");
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j)
            std::printf(" %10s",
                        matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].c_str());
        std::printf("\n");
    }
    std::printf("\nskewness of the 312 limit law: %.6f\n", skew312);
    return 0;
}

// ---- verify -----------------------------------------------------------------
int run_verify() {
    int mismatches = 0;
    auto report = [&](bool ok, const std::string& what) {
        std::printf("[%s] %s\n", ok ? "ok" : "MISMATCH", what.c_str());
        if (!ok) ++mismatches;
    };

    {  // generating function vs exhaustive enumeration, all patterns k<=4
        ExpectationContext ctx;
        bool ok = true;
        int checked = 0;
        for (int k = 1; k <= 4 && ok; ++k) {
            const std::vector<Permutation> sigmas = all_avoiders(k);
            for (int n = 1; n <= 6 && ok; ++n) {
                const std::vector<Rational> means = exact_mean_table(sigmas, n);
                const Rational cn{catalan(static_cast<unsigned long>(n))};
                for (std::size_t i = 0; i < sigmas.size(); ++i, ++checked)
                    if (gf_coefficient(ctx.mean_poly(sigmas[i]), static_cast<std::size_t>(n)) !=
                        means[i] * cn) {
                        ok = false;
                        break;
                    }
            }
        }
        report(ok, "generating-function coefficients equal exhaustive means (" +
                       std::to_string(checked) + " checks)");
    }
    {  // binomial sum rule through the generating functions
        ExpectationContext ctx;
        bool ok = true;
        for (int k = 2; k <= 4; ++k)
            for (int n = k; n <= 8; ++n) {
                Rational sum(0);
                for (const Permutation& s : all_avoiders(k))
                    sum += gf_coefficient(ctx.mean_poly(s), static_cast<std::size_t>(n));
                const Rational want = Rational(binomial(static_cast<unsigned long>(n),
                                                        static_cast<unsigned long>(k))) *
                                      Rational(catalan(static_cast<unsigned long>(n)));
                if (sum != want) ok = false;
            }
        report(ok, "pattern counts of one size sum to binomial(n, k)");
    }
    {  // linear identity between sizes 2 and 3
        ExpectationContext ctx;
        bool ok = true;
        for (int n = 3; n <= 10; ++n) {
            const auto g = [&](const char* s) {
                return gf_coefficient(ctx.mean_poly(parse_pattern(s)),
                                      static_cast<std::size_t>(n));
            };
            if (Rational(n - 2) * g("12") !=
                Rational(3) * g("123") + Rational(2) * g("213") + g("231") + g("312"))
                ok = false;
        }
        report(ok, "(n-2) E n_12 = 3 E n_123 + 2 E n_213 + E n_231 + E n_312");
    }
    {  // scalar tables vs the monomial engine
        MomentEngine eng;
        bool ok = true;
        const std::pair<MomentFamily, const char*> families[] = {{MomentFamily::p123, "123"},
                                                                 {MomentFamily::p213, "213"},
                                                                 {MomentFamily::p231, "231"}};
        for (const auto& [fam, base] : families) {
            MomentTable table(fam);
            const int bl = table.base_lambda();
            for (unsigned k = 0; bl * static_cast<int>(k) <= 12; ++k)
                for (unsigned l = (k == 0 ? 1u : 0u);
                     bl * static_cast<int>(k) + 3 * static_cast<int>(l) <= 12; ++l) {
                    const Monomial mono =
                        eng.make_monomial({{parse_pattern(base), k}, {parse_pattern("12"), l}});
                    if (table.mixed_moment(k, l) != eng.asymptotic_moment(mono)) ok = false;
                }
        }
        report(ok, "scalar moment tables match the monomial engine through weight 12");
    }
    {  // pure powers of the size pattern via iterated size-biasing
        MomentEngine eng;
        bool ok = true;
        LaurentPoly f = eng.expectation().mean_poly(parse_pattern("1"));
        for (unsigned k = 2; k <= 4; ++k) {
            f = size_bias(f);
            Monomial m = eng.make_monomial({{parse_pattern("1"), k}});
            if (eng.moment_poly(m) != f) ok = false;
        }
        report(ok, "size-pattern powers equal iterated size-biasing");
    }
    {  // Monte Carlo tree sampler against the exact engines
        MomentEngine eng;
        const std::vector<Permutation> ps = {parse_pattern("12"), parse_pattern("213")};
        const SampleStats s = sample_scaled_stats(300, ps, 4000, 12321, 0);
        bool ok = true;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const double exact = exact_scaled_moment(eng.expectation().mean_poly(ps[i]),
                                                     s.per_pattern[i].lambda, 300);
            if (std::abs(s.per_pattern[i].mean - exact) > 6.0 * s.per_pattern[i].se_mean)
                ok = false;
        }
        report(ok, "tree sampler means within 6 s.e. of exact values (n=300, R=4000)");
    }
    {  // excursion sampler: identity and the integral functional
        const std::vector<Permutation> ps = {parse_pattern("12"), parse_pattern("213"),
                                             parse_pattern("231"), parse_pattern("312")};
        const ExcursionStats s = excursion_scaled_stats(256, ps, 600, 777, 0);
        bool ok = s.identity_checked && s.max_identity_residual < 1e-12;
        const double limit = std::sqrt(3.14159265358979323846) / 2.0;
        if (std::abs(s.per_pattern[0].mean - limit) >
            6.0 * s.per_pattern[0].se_mean + 2.0 / std::sqrt(256.0))
            ok = false;
        report(ok, "excursion functionals: pair identity exact, area mean near sqrt(pi)/2");
    }
    std::printf("%s\n", mismatches == 0 ? "verify: all checks passed"
                                        : "verify: mismatches detected");
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern statistics of random 132-avoiding permutations"};
    app.set_config("--config", "", "key=value config file; command-line flags override");
    app.require_subcommand(1);

    // expect
    std::string expect_sigma;
    int expect_gf = 0;
    bool expect_json = false;
    auto* c_expect = app.add_subcommand("expect", "mean polynomial and growth constant");
    c_expect->add_option("sigma", expect_sigma, "pattern, e.g. 213 or 4,3,2,1")->required();
    c_expect->add_option("--gf", expect_gf, "also print this many generating-function terms");
    c_expect->add_flag("--json", expect_json, "JSON output");

    // moment
    std::string moment_text;
    bool moment_json = false;
    auto* c_moment = app.add_subcommand("moment", "mixed moment of a pattern monomial");
    c_moment->add_option("monomial", moment_text, "e.g. \"12^2\" or \"213*231\"")->required();
    c_moment->add_flag("--json", moment_json, "JSON output");

    // exact
    int exact_n = 0, exact_cap = kDefaultEnumCap;
    std::vector<std::string> exact_patterns;
    std::string exact_stat = "mean";
    bool exact_json = false;
    auto* c_exact = app.add_subcommand("exact", "exact statistics by exhaustive enumeration");
    c_exact->add_option("--n", exact_n, "permutation size")->required();
    c_exact->add_option("--pattern", exact_patterns, "pattern (repeatable)")
        ->required()
        ->delimiter(',');
    c_exact->add_option("--stat", exact_stat, "mean, var, or second")
        ->check(CLI::IsMember({"mean", "var", "second"}));
    c_exact->add_option("--cap", exact_cap, "enumeration size cap");
    c_exact->add_flag("--json", exact_json, "JSON output instead of CSV");

    // gf
    std::string gf_sigma;
    int gf_count = 10;
    bool gf_json = false;
    auto* c_gf = app.add_subcommand("gf", "generating-function coefficients of the mean");
    c_gf->add_option("sigma", gf_sigma, "pattern")->required();
    c_gf->add_option("--count", gf_count, "number of coefficients");
    c_gf->add_flag("--json", gf_json, "JSON output instead of CSV");

    // sample
    int sample_n = 0;
    uint64_t sample_reps = 10000, sample_seed = 12345;
    unsigned sample_threads = 0;
    std::vector<std::string> sample_patterns;
    std::string sample_out;
    bool sample_json = false;
    auto* c_sample = app.add_subcommand("sample", "Monte Carlo over uniform random trees");
    c_sample->add_option("--n", sample_n, "permutation size")->required();
    c_sample->add_option("--reps", sample_reps, "replicates");
    c_sample->add_option("--patterns", sample_patterns, "comma-separated patterns")
        ->required()
        ->delimiter(',');
    c_sample->add_option("--seed", sample_seed, "RNG seed");
    c_sample->add_option("--threads", sample_threads, "0 = hardware count");
    c_sample->add_option("--out", sample_out, "write JSON to this file");
    c_sample->add_flag("--json", sample_json, "JSON on stdout");

    // excursion
    int exc_m = 0;
    uint64_t exc_reps = 10000, exc_seed = 12345;
    unsigned exc_threads = 0;
    std::vector<std::string> exc_patterns;
    std::string exc_out;
    bool exc_json = false;
    auto* c_exc = app.add_subcommand("excursion", "Monte Carlo over random-walk excursions");
    c_exc->add_option("--m", exc_m, "number of up-steps (walk length 2m)")->required();
    c_exc->add_option("--reps", exc_reps, "replicates");
    c_exc->add_option("--patterns", exc_patterns, "comma-separated patterns")
        ->required()
        ->delimiter(',');
    c_exc->add_option("--seed", exc_seed, "RNG seed");
    c_exc->add_option("--threads", exc_threads, "0 = hardware count");
    c_exc->add_option("--out", exc_out, "write JSON to this file");
    c_exc->add_flag("--json", exc_json, "JSON on stdout");

    // table
    bool table_json = false, table_csv = false;
    auto* c_table = app.add_subcommand("table", "regenerate the constant tables");
    c_table->add_flag("--json", table_json, "JSON output");
    c_table->add_flag("--csv", table_csv, "CSV output");

    // verify
    auto* c_verify =
        app.add_subcommand("verify", "cross-engine oracle suite; nonzero exit on mismatch");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_expect->parsed()) return run_expect(expect_sigma, expect_gf, expect_json);
        if (c_moment->parsed()) return run_moment(moment_text, moment_json);
        if (c_exact->parsed())
            return run_exact(exact_n, exact_patterns, exact_stat, exact_cap, exact_json);
        if (c_gf->parsed()) return run_gf(gf_sigma, gf_count, gf_json);
        if (c_sample->parsed())
            return run_sample(sample_n, sample_reps, sample_patterns, sample_seed, sample_threads,
                              sample_out, sample_json);
        if (c_exc->parsed())
            return run_excursion(exc_m, exc_reps, exc_patterns, exc_seed, exc_threads, exc_out,
                                 exc_json);
        if (c_table->parsed()) return run_table(table_json, table_csv);
        if (c_verify->parsed()) return run_verify();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
