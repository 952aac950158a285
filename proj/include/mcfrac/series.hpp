#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mcfrac/pi_ratio.hpp"

namespace mcfrac {

/// Truncated power series in x = 1/n with PiRatio coefficients and an
/// explicit validity order: coefficients beyond valid_order() are unknown and
/// reading them is a hard error, never a silent zero. min_order() is the
/// order of the first stored coefficient; the identically-zero series stores
/// nothing and has min_order = valid_order + 1. Negative orders (Laurent
/// terms) only arise from reciprocal(allow_laurent = true).
class TruncSeries {
public:
    static TruncSeries zero(int valid_order);
    /// c * x^order.
    static TruncSeries monomial(PiRatio c, int order, int valid_order);
    static TruncSeries constant(PiRatio c, int valid_order) {
        return monomial(std::move(c), 0, valid_order);
    }
    /// Coefficients for x^min_order, x^(min_order+1), ...
    static TruncSeries from_coeffs(int min_order, std::vector<PiRatio> coeffs);
    /// An exact polynomial (every coefficient beyond the list is truly zero),
    /// so any valid_order >= coeffs.size()-1 may be claimed.
    static TruncSeries polynomial(std::vector<PiRatio> coeffs, int valid_order);

    int min_order() const { return min_order_; }
    int valid_order() const { return valid_order_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^k; throws for k > valid_order().
    const PiRatio& coeff(int k) const;

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries operator*(const PiRatio& s) const;

    /// Multiplicative inverse. The lowest-order coefficient must be nonzero;
    /// a positive min_order produces Laurent terms, rejected unless
    /// allow_laurent is set.
    TruncSeries reciprocal(bool allow_laurent = false) const;

    /// Series of f(n+1) given that *this is the series of f(n) in x = 1/n,
    /// i.e. the composition with x -> x/(1+x).
    TruncSeries shift_substitute() const;

    TruncSeries truncated(int new_valid_order) const;

    std::string to_string() const;

private:
    TruncSeries(int min_order, std::vector<PiRatio> coeffs, int valid_order);
    void normalize();

    int min_order_ = 1;
    std::vector<PiRatio> coeffs_;
    int valid_order_ = 0;
};

/// Series of ln(n+b) - ln(n+a) in x = 1/n up to the given order; the
/// coefficient of x^m is (-1)^(m+1) (b^m - a^m)/m.
TruncSeries log_shift_series(const Rational& a, const Rational& b, int order);

struct SolveOutcome {
    PiRatio value;
    bool underdetermined = false;
};

/// Finds the value of a single unknown making a targeted series coefficient
/// vanish. The coefficient, supplied as a callback, must be an affine
/// function of the unknown; this is verified by probing at three points.
/// Throws on non-linear dependence or an inconsistent equation; a degenerate
/// (0 = 0) equation is reported as underdetermined, never silently chosen.
SolveOutcome solve_leading(const std::function<PiRatio(const PiRatio&)>& coeff_of_unknown);

}  // namespace mcfrac
