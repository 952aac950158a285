#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mcfrac/verify.hpp"

using namespace mcfrac;

TEST_CASE("rate fit for the first euler correction") {
    auto rep = derive(Family::euler(), 1);
    RateFit fit = rate_fit(rep, {64, 128, 256, 512, 1024}, 192);
    CHECK(fit.target_exponent == 3);
    CHECK(std::fabs(fit.fitted_exponent.to_double() - 3.0) < 0.05);
    CHECK(std::fabs(fit.loglog_exponent - 3.0) < 0.1);
    // Constant within 1% of C_1 = -1/72.
    Enclosure target = pi_ratio_enclosure(rep.limit_constant, 192);
    double rel = std::fabs(fit.fitted_constant.midpoint().to_double() /
                               target.midpoint().to_double() - 1.0);
    CHECK(rel < 0.01);
    // Exponent estimates drift monotonically toward the target.
    for (size_t i = 1; i < fit.exponent_steps.size(); ++i)
        CHECK(std::fabs(fit.exponent_steps[i] - 3.0) <=
              std::fabs(fit.exponent_steps[i - 1] - 3.0) + 1e-9);
}

TEST_CASE("rate fit landau depth 2 on the printed schedule") {
    auto rep = derive(Family::landau(), 2);
    RateFit fit = rate_fit(rep, {32, 64, 128, 256, 512}, 192);
    CHECK(fit.target_exponent == 10);
    CHECK(std::fabs(fit.fitted_exponent.to_double() - 10.0) < 0.05);
    Enclosure target = pi_ratio_enclosure(rep.limit_constant, 192);
    // The plain largest-sample estimator carries an O(1/n) bias of about
    // 1.5% at n = 512; the Richardson-refined constant removes it.
    double plain = std::fabs(fit.fitted_constant.midpoint().to_double() /
                                 target.midpoint().to_double() - 1.0);
    CHECK(plain < 0.02);
    double refined = std::fabs(fit.extrapolated_constant.midpoint().to_double() /
                                   target.midpoint().to_double() - 1.0);
    CHECK(refined < 0.001);
}

TEST_CASE("richardson refinement beats the plain constant estimate") {
    auto rep = derive(Family::landau(), 3);
    RateFit fit = rate_fit(rep, {64, 128, 256, 512, 1024}, 256);
    Enclosure target = pi_ratio_enclosure(rep.limit_constant, 256);
    double plain = std::fabs(fit.fitted_constant.midpoint().to_double() /
                                 target.midpoint().to_double() - 1.0);
    double refined = std::fabs(fit.extrapolated_constant.midpoint().to_double() /
                                   target.midpoint().to_double() - 1.0);
    CHECK(refined < plain);
    CHECK(refined < 0.001);
}

TEST_CASE("rate fit input validation") {
    auto rep = derive(Family::euler(), 1);
    CHECK_THROWS_WITH(rate_fit(rep, {64, 128, 256}, 192), doctest::Contains("at least 4"));
    CHECK_THROWS_WITH(rate_fit(rep, {64, 128, 256, 500}, 192), doctest::Contains("geometric"));
}

TEST_CASE("rate fit reports enclosures too wide at starved precision") {
    auto rep = derive(Family::euler(), 8);
    CHECK_THROWS_WITH(rate_fit(rep, {128, 256, 512, 1024}, 64),
                      doctest::Contains("enclosures too wide"));
}

TEST_CASE("theorem 2 certifies on a prefix and at n = 0") {
    auto rep = derive(Family::landau(), 2);
    CheckOptions opts;
    opts.prec = 192;
    InequalityReport single = check_theorem2(0, rep, opts);
    REQUIRE(single.verdicts.size() == 1);
    CHECK(single.verdicts[0].second == Verdict::CertifiedTrue);
    InequalityReport prefix = check_theorem2(50, rep, opts);
    CHECK(prefix.all_certified_true());
    CHECK(prefix.count(Verdict::CertifiedTrue) == 51);
}

TEST_CASE("theorem 2 checker flags a doubled lower constant") {
    auto rep = derive(Family::landau(), 2);
    CheckOptions opts;
    opts.prec = 192;
    opts.lower_scale = Rational(2);
    InequalityReport report = check_theorem2(80, rep, opts);
    CHECK(report.any_certified_false());
    // The perturbed bound still holds near n = 0 where the gap is huge.
    CHECK(report.verdicts.front().second == Verdict::CertifiedTrue);
    CHECK(report.verdicts.back().second == Verdict::CertifiedFalse);
}

TEST_CASE("theorem 4 certifies on a prefix, using exact L_0 at n = 0") {
    auto rep = derive(Family::lebesgue(), 1);
    CheckOptions opts;
    opts.prec = 192;
    InequalityReport report = check_theorem4(30, rep, opts);
    CHECK(report.all_certified_true());
    CHECK(report.verdicts.front().first == 0);
    CHECK(report.verdicts.front().second == Verdict::CertifiedTrue);
}

TEST_CASE("monotone decrease certification") {
    auto landau2 = derive(Family::landau(), 2);
    CheckOptions opts;
    opts.prec = 192;
    InequalityReport report = check_monotone_decreasing(landau2, 60, opts);
    CHECK(report.all_certified_true());

    // Single point: no comparisons, vacuously certified.
    InequalityReport empty = check_monotone_decreasing(landau2, 0, opts);
    CHECK(empty.verdicts.empty());
    CHECK(empty.all_certified_true());

    auto lebesgue1 = derive(Family::lebesgue(), 1);
    InequalityReport leb = check_monotone_decreasing(lebesgue1, 40, opts);
    CHECK(leb.all_certified_true());
}

TEST_CASE("monotone checker detects a broken numerator") {
    // Doubling kappa_2 flips the sign of the tail of E_2, so it increases
    // toward zero and the strict decrease fails.
    auto rep = derive(Family::landau(), 2);
    rep.cf.terms[1].first = rep.cf.terms[1].first * PiRatio(Rational(2));
    CheckOptions opts;
    opts.prec = 192;
    InequalityReport report = check_monotone_decreasing(rep, 60, opts);
    CHECK(report.any_certified_false());
}

TEST_CASE("a 10% lambda_2 perturbation breaks theorem 2 but not monotonicity") {
    auto rep = derive(Family::landau(), 2);
    rep.cf.terms[1].second = rep.cf.terms[1].second * PiRatio(Rational(11, 10));
    CheckOptions opts;
    opts.prec = 192;
    InequalityReport thm2 = check_theorem2(60, rep, opts);
    CHECK(thm2.any_certified_false());
    // The error term with the perturbed constant is still strictly
    // decreasing; only the tight double-sided bound is destroyed.
    InequalityReport mono = check_monotone_decreasing(rep, 60, opts);
    CHECK(mono.all_certified_true());
}

TEST_CASE("certified verdicts are stable under a precision bump") {
    auto rep = derive(Family::landau(), 2);
    CheckOptions lo, hi;
    lo.prec = 128;
    hi.prec = 320;
    InequalityReport a = check_theorem2(25, rep, lo);
    InequalityReport b = check_theorem2(25, rep, hi);
    REQUIRE(a.verdicts.size() == b.verdicts.size());
    for (size_t i = 0; i < a.verdicts.size(); ++i) {
        if (a.verdicts[i].second != Verdict::Inconclusive)
            CHECK(a.verdicts[i].second == b.verdicts[i].second);
    }
}

TEST_CASE("verdict bookkeeping") {
    CHECK(verdict_name(Verdict::CertifiedTrue) == "certified-true");
    CHECK(verdict_name(Verdict::CertifiedFalse) == "certified-false");
    CHECK(verdict_name(Verdict::Inconclusive) == "inconclusive");
    InequalityReport r;
    r.verdicts = {{0, Verdict::CertifiedTrue}, {1, Verdict::Inconclusive}};
    CHECK_FALSE(r.all_certified_true());
    CHECK(r.any_inconclusive());
    CHECK_FALSE(r.any_certified_false());
    CHECK(r.count(Verdict::CertifiedTrue) == 1);
}
