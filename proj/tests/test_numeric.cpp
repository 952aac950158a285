#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcfrac/numeric.hpp"

using namespace mcfrac;

namespace {

// Direct-sum oracle for G(n) from binomial coefficients.
Rational landau_G_oracle(int n) {
    Rational total(0);
    for (long k = 0; k <= n; ++k) {
        Rational c = binomial(2 * k, k);
        total += c * c / Rational(16).pow(k);
    }
    return total;
}

Enclosure literal(const char* digits, int prec = 192) {
    return Enclosure::from_decimal_string(digits, prec);
}

}  // namespace

TEST_CASE("landau G values") {
    CHECK(landau_G(0) == Rational(1));
    CHECK(landau_G(1) == Rational(5, 4));
    CHECK(landau_G(2) == Rational(89, 64));
    for (int n = 0; n <= 12; ++n) CHECK(landau_G(n) == landau_G_oracle(n));
    CHECK_THROWS(landau_G(-1));
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(1) == Rational(1));
    CHECK(harmonic(3) == Rational(11, 6));
    CHECK(harmonic(5) == Rational(137, 60));
    CHECK_THROWS(harmonic(0));
}

TEST_CASE("gamma reference encloses the known digits") {
    Enclosure g = gamma_reference(128);
    CHECK(literal("0.5772156649015328606").contains_interval(g));
    // Consistency across explicit choices of n.
    Enclosure g1000 = gamma_reference(128, 1000);
    Enclosure g10000 = gamma_reference(128, 10000);
    CHECK(Enclosure::intersect(g, g1000).has_value());
    CHECK(Enclosure::intersect(g1000, g10000).has_value());
}

TEST_CASE("gamma reference refines under precision") {
    Enclosure g128 = gamma_reference(128);
    Enclosure g256 = gamma_reference(256);
    CHECK(g128.contains_interval(g256));
    CHECK(BigFloat::cmp(g256.width(), g128.width()) < 0);
    CHECK(g128.width_below_pow2(-120));
    CHECK_THROWS(gamma_reference(32));
}

TEST_CASE("c0 matches the 19 printed digits and its defining identity") {
    Enclosure c0 = const_c0(128);
    CHECK(literal("1.0662758532089143543").contains_interval(c0));
    CHECK(const_c0(192).width_below_pow2(-184));
    CHECK(const_c0(128).contains_interval(const_c0(256)));
    // c0 pi - gamma - 4 ln 2 encloses zero.
    int wp = 256;
    Enclosure residue = const_c0(wp)
                            .mul(Enclosure::pi(wp))
                            .sub(gamma_reference(wp))
                            .sub(Enclosure::log2_constant(wp).scale_rational(Rational(4), wp));
    CHECK(residue.contains_zero());
}

TEST_CASE("c1 accelerated mode") {
    Enclosure c1 = const_c1(64);
    // At least 12 correct digits at the lowest precision.
    CHECK(c1.width_below_pow2(-44));
    CHECK(Enclosure::intersect(c1, literal("0.98943127383114695174", 128)).has_value());
    Enclosure c192 = const_c1(192);
    CHECK(c1.contains_interval(c192));
    CHECK(c192.width_below_pow2(-184));
}

TEST_CASE("c1 literal mode agrees with a brute-force partial sum") {
    Enclosure lit = const_c1(192, C1Mode::Literal);
    CHECK(lit.contains_interval(const_c1(192)));
    // Independent check: 10^6-term partial sum with the elementary
    // integral bracket ln x/(4x^2) < f(x) <= ln x/(4x^2) (1 + 1/(4N^2-1)).
    const long cut = 1000000;
    int wp = 128;
    Enclosure sum = Enclosure::from_long(0, wp);
    for (long k = 2; k < cut; ++k)
        sum = sum.add(
            Enclosure::from_long(k, wp).log().scale_rational(Rational(1, 4 * k * k - 1), wp));
    Enclosure logn = Enclosure::from_long(cut, wp).log();
    Enclosure base =
        logn.add(Enclosure::from_long(1, wp)).scale_rational(Rational(1, 4 * cut), wp);
    Enclosure fn = logn.scale_rational(Rational(1, 4 * cut * cut - 1), wp);
    Enclosure tail(base.lo(),
                   fn.add(base.scale_rational(Rational(4 * cut * cut, 4 * cut * cut - 1), wp)).hi());
    Enclosure pi2 = Enclosure::pi(wp).pow_int(2);
    Enclosure direct = sum.add(tail).scale_rational(Rational(8), wp).div(pi2).add(
        gamma_reference(wp).add(Enclosure::log2_constant(wp).scale_rational(Rational(2), wp))
            .scale_rational(Rational(4), wp)
            .div(pi2));
    CHECK(Enclosure::intersect(direct, lit).has_value());
}

TEST_CASE("lebesgue series enclosure") {
    // Contains the quadrature oracle value.
    Enclosure series = lebesgue_enclosure(10, 2, 128);
    Enclosure quad = lebesgue_quadrature(10, 1e-10, 128);
    CHECK(Enclosure::intersect(series, quad).has_value());
    // Width at fixed N decreases as n grows.
    CHECK(BigFloat::cmp(lebesgue_enclosure(20, 2, 128).width(),
                        lebesgue_enclosure(10, 2, 128).width()) < 0);
    // n = 0: L_0 = 1 lies inside for sufficient N.
    CHECK(lebesgue_enclosure(0, 2, 128).contains(Rational(1)));
    CHECK(lebesgue_enclosure(0, 3, 128).contains(Rational(1)));
}

TEST_CASE("lebesgue quadrature") {
    // n = 0: the integrand is identically 1.
    Enclosure l0 = lebesgue_quadrature(0, 1e-15, 128);
    CHECK(l0.contains(Rational(1)));
    CHECK(l0.width_below_pow2(-45));

    // n = 2: classical closed form L_1 = 1/3 + 2 sqrt(3)/pi (external pin,
    // not from the correction machinery).
    Enclosure pin = Enclosure::from_long(3, 192)
                        .sqrt()
                        .scale_rational(Rational(2), 192)
                        .div(Enclosure::pi(192))
                        .add(Enclosure::from_rational(Rational(1, 3), 192));
    Enclosure l1 = lebesgue_quadrature(2, 1e-12, 192);
    CHECK(Enclosure::intersect(pin, l1).has_value());

    CHECK_THROWS_WITH(lebesgue_quadrature(3, 1e-60, 64),
                      doctest::Contains("tolerance not reached"));
}

TEST_CASE("series and quadrature oracles agree across a range") {
    for (int n = 1; n <= 12; ++n) {
        Enclosure series = lebesgue_enclosure(n, 2, 128);
        Enclosure quad = lebesgue_quadrature(n, 1e-9, 128);
        CHECK(Enclosure::intersect(series, quad).has_value());
    }
}

TEST_CASE("error terms approach their limit constants") {
    // Landau depth 1: n^6 E_1(n) near C_1 = 89684299/(18166579200 pi).
    auto landau = derive(Family::landau(), 1);
    Enclosure e = error_term(landau.cf, 1024, 192);
    Enclosure scaled = Enclosure::from_long(1024, 192).pow_int(6).mul(e);
    Enclosure c1 = pi_ratio_enclosure(landau.limit_constant, 192);
    Enclosure ratio = scaled.div(c1);
    CHECK(ratio.lo().cmp_rational(Rational(99, 100)) > 0);
    CHECK(ratio.hi().cmp_rational(Rational(101, 100)) < 0);

    // Euler depth 0: n E_0(n) approaches 1/2.
    CFApprox depth0{Family::euler(), {}};
    Enclosure e0 = error_term(depth0, 1024, 192);
    Enclosure scaled0 = Enclosure::from_long(1024, 192).mul(e0);
    CHECK(scaled0.lo().cmp_rational(Rational(499, 1000)) > 0);
    CHECK(scaled0.hi().cmp_rational(Rational(501, 1000)) < 0);

    // Lebesgue depth 1: E_1(n) > 0 on 0..50.
    auto lebesgue = derive(Family::lebesgue(), 1);
    for (long n = 0; n <= 50; ++n) {
        Enclosure err = error_term(lebesgue.cf, n, 192);
        CHECK(err.lo().sign() > 0);
    }
}

TEST_CASE("gamma oracle agrees with the depth-8 correction estimate") {
    // H_n - ln n - MC_8(n) approximates gamma with error E_8(n) ~ C_8 n^-17.
    auto rep = derive(Family::euler(), 8);
    const long n = 50;
    int wp = 256;
    Rational exact = harmonic(n) - cf_evaluate_exact(rep.cf, Rational(n)).as_rational();
    Enclosure estimate =
        Enclosure::from_rational(exact, wp).sub(Enclosure::from_long(n, wp).log());
    Enclosure gap = estimate.sub(gamma_reference(wp)).abs();
    Enclosure budget = pi_ratio_enclosure(rep.limit_constant, wp)
                           .abs()
                           .mul(Enclosure::from_long(n, wp).pow_int(-17))
                           .scale_rational(Rational(3, 2), wp);
    CHECK(BigFloat::cmp(gap.hi(), budget.lo()) < 0);
}

TEST_CASE("enclosure refinement is nested across precision") {
    auto lebesgue = derive(Family::lebesgue(), 1);
    Enclosure coarse = error_term(lebesgue.cf, 7, 128);
    Enclosure fine = error_term(lebesgue.cf, 7, 320);
    CHECK(coarse.contains_interval(fine));
    Enclosure g_c = lebesgue_enclosure(5, 2, 96), g_f = lebesgue_enclosure(5, 2, 256);
    CHECK(Enclosure::intersect(g_c, g_f).has_value());
    CHECK(BigFloat::cmp(g_f.width(), g_c.width()) <= 0);
}
