#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mcfrac/series.hpp"

using mcfrac::PiRatio;
using mcfrac::Rational;
using mcfrac::TruncSeries;

namespace {

TruncSeries random_series(std::mt19937& rng, int valid, bool unit_leading = false) {
    std::uniform_int_distribution<long> coeff(-5, 5), den(1, 3);
    std::uniform_int_distribution<int> mo(0, 2);
    int m = unit_leading ? 0 : mo(rng);
    std::vector<PiRatio> c;
    for (int k = m; k <= valid; ++k) c.emplace_back(Rational(coeff(rng), den(rng)));
    if (unit_leading && (c.empty() || c[0].is_zero())) c[0] = PiRatio(1);
    return TruncSeries::from_coeffs(m, std::move(c)).truncated(valid);
}

PiRatio q(long n, long d) { return PiRatio(Rational(n, d)); }

}  // namespace

TEST_CASE("monomial product propagates the valid order") {
    TruncSeries x = TruncSeries::monomial(PiRatio(1), 1, 5);
    TruncSeries x2 = x * x;
    CHECK(x2.min_order() == 2);
    CHECK(x2.coeff(2) == PiRatio(1));
    CHECK(x2.valid_order() == 6);  // x exact to order 5 shifts by one
    CHECK(x2.coeff(5).is_zero());
    CHECK_THROWS(x2.coeff(7));
}

TEST_CASE("hand-multiplied product") {
    // (x - x^2/2)(x + x^2) at order 3 is x^2 + x^3/2.
    TruncSeries a = TruncSeries::polynomial({PiRatio(0), PiRatio(1), q(-1, 2)}, 3);
    TruncSeries b = TruncSeries::polynomial({PiRatio(0), PiRatio(1), PiRatio(1)}, 3);
    TruncSeries p = a * b;
    CHECK(p.coeff(2) == PiRatio(1));
    CHECK(p.coeff(3) == q(1, 2));
    CHECK(p.coeff(4) == q(-1, 2));
    CHECK(p.valid_order() == 4);
}

TEST_CASE("reciprocal of 1+x is the alternating geometric series") {
    TruncSeries s = TruncSeries::polynomial({PiRatio(1), PiRatio(1)}, 3);
    TruncSeries r = s.reciprocal();
    CHECK(r.coeff(0) == PiRatio(1));
    CHECK(r.coeff(1) == PiRatio(-1));
    CHECK(r.coeff(2) == PiRatio(1));
    CHECK(r.coeff(3) == PiRatio(-1));
}

TEST_CASE("reciprocal errors") {
    CHECK_THROWS_WITH(TruncSeries::zero(4).reciprocal(),
                      doctest::Contains("non-invertible"));
    TruncSeries x = TruncSeries::monomial(PiRatio(1), 1, 4);
    CHECK_THROWS_WITH(x.reciprocal(), doctest::Contains("Laurent"));
    TruncSeries laurent = x.reciprocal(true);
    CHECK(laurent.min_order() == -1);
    CHECK(laurent.coeff(-1) == PiRatio(1));
}

TEST_CASE("reciprocal times original is one") {
    std::mt19937 rng(23);
    for (int i = 0; i < 60; ++i) {
        TruncSeries s = random_series(rng, 7, /*unit_leading=*/true);
        TruncSeries p = s * s.reciprocal();
        CHECK(p.coeff(0) == PiRatio(1));
        for (int k = 1; k <= 7; ++k) CHECK(p.coeff(k).is_zero());
    }
}

TEST_CASE("ring axioms hold exactly up to the propagated valid order") {
    std::mt19937 rng(29);
    for (int i = 0; i < 60; ++i) {
        TruncSeries a = random_series(rng, 6), b = random_series(rng, 6),
                    c = random_series(rng, 6);
        TruncSeries lhs = (a + b) * c, rhs = a * c + b * c;
        int v = std::min(lhs.valid_order(), rhs.valid_order());
        for (int k = 0; k <= v; ++k) CHECK(lhs.coeff(k) == rhs.coeff(k));
        TruncSeries assoc_l = (a * b) * c, assoc_r = a * (b * c);
        v = std::min(assoc_l.valid_order(), assoc_r.valid_order());
        for (int k = 0; k <= v; ++k) CHECK(assoc_l.coeff(k) == assoc_r.coeff(k));
    }
}

TEST_CASE("shift substitution basics") {
    // x -> x - x^2 + x^3 - x^4.
    TruncSeries x = TruncSeries::monomial(PiRatio(1), 1, 4);
    TruncSeries s = x.shift_substitute();
    CHECK(s.coeff(1) == PiRatio(1));
    CHECK(s.coeff(2) == PiRatio(-1));
    CHECK(s.coeff(3) == PiRatio(1));
    CHECK(s.coeff(4) == PiRatio(-1));

    // x^2 -> x^2 - 2x^3 + 3x^4 (square of the previous).
    TruncSeries x2 = TruncSeries::monomial(PiRatio(1), 2, 4);
    TruncSeries s2 = x2.shift_substitute();
    CHECK(s2.coeff(2) == PiRatio(1));
    CHECK(s2.coeff(3) == PiRatio(-2));
    CHECK(s2.coeff(4) == PiRatio(3));

    // Constants are shift-invariant.
    TruncSeries c = TruncSeries::constant(q(5, 3), 4);
    TruncSeries sc = c.shift_substitute();
    CHECK(sc.coeff(0) == q(5, 3));
    for (int k = 1; k <= 4; ++k) CHECK(sc.coeff(k).is_zero());
}

TEST_CASE("shift substitution is a ring homomorphism") {
    std::mt19937 rng(31);
    for (int i = 0; i < 60; ++i) {
        TruncSeries a = random_series(rng, 6), b = random_series(rng, 6);
        TruncSeries lhs = (a * b).shift_substitute();
        TruncSeries rhs = a.shift_substitute() * b.shift_substitute();
        int v = std::min(lhs.valid_order(), rhs.valid_order());
        for (int k = 0; k <= v; ++k) CHECK(lhs.coeff(k) == rhs.coeff(k));
        TruncSeries sum_l = (a + b).shift_substitute();
        TruncSeries sum_r = a.shift_substitute() + b.shift_substitute();
        v = std::min(sum_l.valid_order(), sum_r.valid_order());
        for (int k = 0; k <= v; ++k) CHECK(sum_l.coeff(k) == sum_r.coeff(k));
    }
}

TEST_CASE("log shift series") {
    // ln(n+7/4) - ln(n+3/4) = x - 5/4 x^2 + 79/48 x^3 + ...
    TruncSeries s = mcfrac::log_shift_series(Rational(3, 4), Rational(7, 4), 3);
    CHECK(s.coeff(1) == PiRatio(1));
    CHECK(s.coeff(2) == q(-5, 4));
    CHECK(s.coeff(3) == q(79, 48));

    TruncSeries t = mcfrac::log_shift_series(Rational(1), Rational(2), 2);
    CHECK(t.coeff(1) == PiRatio(1));
    CHECK(t.coeff(2) == q(-3, 2));

    TruncSeries z = mcfrac::log_shift_series(Rational(5, 7), Rational(5, 7), 6);
    CHECK(z.is_zero());
}

TEST_CASE("log shift series is additive in its endpoints") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<long> v(-3, 3), d(1, 4);
    for (int i = 0; i < 60; ++i) {
        Rational a(v(rng), d(rng)), b(v(rng), d(rng)), c(v(rng), d(rng));
        TruncSeries lhs = mcfrac::log_shift_series(a, b, 6) + mcfrac::log_shift_series(b, c, 6);
        TruncSeries rhs = mcfrac::log_shift_series(a, c, 6);
        for (int k = 1; k <= 6; ++k) CHECK(lhs.coeff(k) == rhs.coeff(k));
    }
}

TEST_CASE("reading past the valid order is a hard error") {
    TruncSeries s = TruncSeries::from_coeffs(1, {PiRatio(1), PiRatio(2)});
    CHECK(s.valid_order() == 2);
    CHECK_THROWS_AS(s.coeff(3), std::out_of_range);
    CHECK_THROWS(s.truncated(5));
}

TEST_CASE("solve_leading") {
    using mcfrac::solve_leading;
    // The first-correction equation -1/6 + b = 0.
    auto affine = [](const PiRatio& u) { return u + PiRatio(Rational(-1, 6)); };
    auto sol = solve_leading(affine);
    CHECK_FALSE(sol.underdetermined);
    CHECK(sol.value == q(1, 6));

    // -1/24 + (3/2) a = 0 gives 1/36.
    auto scaled = [](const PiRatio& u) { return u * q(3, 2) + q(-1, 24); };
    CHECK(solve_leading(scaled).value == q(1, 36));

    auto quadratic = [](const PiRatio& u) { return u * u + PiRatio(1); };
    CHECK_THROWS_WITH(solve_leading(quadratic), doctest::Contains("non-linear"));

    auto inconsistent = [](const PiRatio&) { return PiRatio(1); };
    CHECK_THROWS_WITH(solve_leading(inconsistent), doctest::Contains("inconsistent"));

    auto degenerate = [](const PiRatio&) { return PiRatio(0); };
    CHECK(solve_leading(degenerate).underdetermined);
}
