#pragma once

#include <string>
#include <vector>

#include "mcfrac/numeric.hpp"

namespace mcfrac {

/// Empirical convergence check for lim n^s E_k(n) = C_k: exponent estimates
/// from successive ratios along a geometric schedule, the constant from the
/// largest usable sample.
struct RateFit {
    struct Sample {
        long n;
        Enclosure value;
    };
    std::vector<Sample> samples;           // width-filtered, strictly increasing n
    std::vector<double> exponent_steps;    // log2(E(n_i)/E(n_{i+1})) per doubling
    BigFloat fitted_exponent{64};          // last (most asymptotic) ratio estimate
    double loglog_exponent = 0.0;          // least-squares cross-check
    Enclosure fitted_constant;             // n^target * E(n) at the largest sample
    /// First-order Richardson refinement of fitted_constant from the two
    /// largest samples; cancels the O(1/n) bias of the plain estimator.
    Enclosure extrapolated_constant;
    int target_exponent = 0;
    PiRatio target_constant;
};

/// Requires a geometric schedule (each n doubling) with at least 4 points.
/// Samples whose enclosure width exceeds 1% of the value magnitude are
/// dropped; fails if fewer than two samples survive.
RateFit rate_fit(const DerivationReport& report, const std::vector<long>& schedule, int prec);

enum class Verdict { CertifiedTrue, Inconclusive, CertifiedFalse };

std::string verdict_name(Verdict v);

struct InequalityReport {
    std::string theorem;
    long n_min = 0, n_max = 0;
    std::vector<std::pair<long, Verdict>> verdicts;
    int base_precision = 0;
    int max_precision_used = 0;

    bool all_certified_true() const;
    bool any_certified_false() const;
    bool any_inconclusive() const;
    long count(Verdict v) const;
};

struct CheckOptions {
    int prec = 192;
    int prec_cap = 768;
    int max_doublings = 4;
    /// Scale factors on the bound constants; only tests perturb these.
    Rational lower_scale = Rational(1);
    Rational upper_scale = Rational(1);
    /// Fall back to the quadrature oracle when the series bounds stay
    /// inconclusive (Lebesgue checks only).
    bool quadrature_fallback = true;
};

/// Certifies, per n in 0..n_max, the double inequality
/// C_2/(n+7/4)^10 < G(n) - (1/pi) ln(n+3/4) - c_0 - MC_2(n) < C_2/(n+3/4)^10.
/// `landau2` must be the depth-2 Landau derivation.
InequalityReport check_theorem2(long n_max, const DerivationReport& landau2,
                                const CheckOptions& opts = {});

/// Certifies, per n in 0..n_max, the double inequality
/// C_1/(n+13/8)^6 < L_{n/2} - (4/pi^2) ln(n+1) - c_1 - MC_1(n) < C_1/(n+5/8)^6.
/// `lebesgue1` must be the depth-1 Lebesgue derivation.
InequalityReport check_theorem4(long n_max, const DerivationReport& lebesgue1,
                                const CheckOptions& opts = {});

/// Certifies that E_k(n) is strictly decreasing on 0..n_max (0..n_max-1 vs
/// successors). Works for any family's derivation report.
InequalityReport check_monotone_decreasing(const DerivationReport& report, long n_max,
                                           const CheckOptions& opts = {});

}  // namespace mcfrac
