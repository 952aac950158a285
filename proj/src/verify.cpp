#include "mcfrac/verify.hpp"

#include <cmath>
#include <stdexcept>

namespace mcfrac {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::CertifiedTrue: return "certified-true";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::CertifiedFalse: return "certified-false";
    }
    throw std::logic_error("verdict_name: bad verdict");
}

bool InequalityReport::all_certified_true() const {
    for (const auto& [n, v] : verdicts)
        if (v != Verdict::CertifiedTrue) return false;
    return true;
}

bool InequalityReport::any_certified_false() const { return count(Verdict::CertifiedFalse) > 0; }
bool InequalityReport::any_inconclusive() const { return count(Verdict::Inconclusive) > 0; }

long InequalityReport::count(Verdict v) const {
    long c = 0;
    for (const auto& [n, verdict] : verdicts)
        if (verdict == v) ++c;
    return c;
}

RateFit rate_fit(const DerivationReport& report, const std::vector<long>& schedule, int prec) {
    if (schedule.size() < 4)
        throw std::invalid_argument("rate_fit: schedule needs at least 4 points");
    for (size_t i = 0; i + 1 < schedule.size(); ++i)
        if (schedule[i + 1] != 2 * schedule[i])
            throw std::invalid_argument("rate_fit: schedule must be geometric with ratio 2");

    RateFit fit;
    fit.target_exponent = report.limit_exponent;
    fit.target_constant = report.limit_constant;

    for (long n : schedule) {
        Enclosure e = error_term(report.cf, n, prec);
        // Keep only samples whose width is below 1% of the magnitude.
        BigFloat mag = e.midpoint().abs();
        BigFloat threshold = BigFloat::mul(
            mag, BigFloat::from_rational(Rational(1, 100), e.precision(), MPFR_RNDN),
            e.precision(), MPFR_RNDN);
        if (e.contains_zero() || BigFloat::cmp(e.width(), threshold) > 0) continue;
        fit.samples.push_back({n, e});
    }
    if (fit.samples.size() < 2)
        throw std::domain_error("rate_fit: enclosures too wide at the requested precision");

    int wp = prec + 32;
    std::vector<double> xs, ys;
    for (size_t i = 0; i + 1 < fit.samples.size(); ++i) {
        BigFloat ratio = BigFloat::div(fit.samples[i].value.midpoint().abs(),
                                       fit.samples[i + 1].value.midpoint().abs(), wp, MPFR_RNDN);
        BigFloat lg = BigFloat::div(BigFloat::log(ratio, wp, MPFR_RNDN),
                                    BigFloat::const_log2(wp, MPFR_RNDN), wp, MPFR_RNDN);
        // Steps between consecutive samples may span several doublings.
        double doublings = std::log2(static_cast<double>(fit.samples[i + 1].n) /
                                     static_cast<double>(fit.samples[i].n));
        fit.exponent_steps.push_back(lg.to_double() / doublings);
        if (i + 2 == fit.samples.size()) fit.fitted_exponent = lg;  // refined below
    }
    {  // normalize the last ratio by its doubling count
        size_t last = fit.samples.size() - 2;
        double doublings = std::log2(static_cast<double>(fit.samples[last + 1].n) /
                                     static_cast<double>(fit.samples[last].n));
        fit.fitted_exponent = BigFloat::div(
            fit.fitted_exponent, BigFloat::from_double(doublings, 64), 64, MPFR_RNDN);
    }

    // Log-log least squares cross-check.
    for (const auto& s : fit.samples) {
        xs.push_back(std::log2(static_cast<double>(s.n)));
        ys.push_back(-std::log2(std::fabs(s.value.midpoint().to_double())));
    }
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(ys.size());
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    fit.loglog_exponent = sxy / sxx;

    const auto& last = fit.samples.back();
    Enclosure n_pow = Enclosure::from_long(last.n, prec).pow_int(fit.target_exponent);
    fit.fitted_constant = n_pow.mul(last.value);

    // Richardson step: with K(n) = n^s E(n) = C (1 + d/n + ...), the
    // combination (r K(rn) - K(n))/(r - 1) removes the 1/n term.
    const auto& prev = fit.samples[fit.samples.size() - 2];
    Rational r(last.n, prev.n);
    Enclosure k_prev =
        Enclosure::from_long(prev.n, prec).pow_int(fit.target_exponent).mul(prev.value);
    fit.extrapolated_constant = fit.fitted_constant.scale_rational(r, prec)
                                    .sub(k_prev)
                                    .scale_rational((r - Rational(1)).reciprocal(), prec);
    return fit;
}

namespace {

std::vector<int> precision_ladder(const CheckOptions& opts) {
    std::vector<int> ladder;
    int p = opts.prec;
    for (int i = 0; i <= opts.max_doublings; ++i) {
        ladder.push_back(std::min(p, opts.prec_cap));
        if (p >= opts.prec_cap) break;
        p *= 2;
    }
    return ladder;
}

// certified-true when lower < value < upper is certain; certified-false when
// one of the inequalities certainly fails.
Verdict classify(const Enclosure& lower, const Enclosure& value, const Enclosure& upper) {
    bool below_ok = Enclosure::certainly_less(lower, value);
    bool above_ok = Enclosure::certainly_less(value, upper);
    if (below_ok && above_ok) return Verdict::CertifiedTrue;
    if (Enclosure::certainly_less(value, lower) || Enclosure::certainly_less(upper, value))
        return Verdict::CertifiedFalse;
    return Verdict::Inconclusive;
}

}  // namespace

InequalityReport check_theorem2(long n_max, const DerivationReport& landau2,
                                const CheckOptions& opts) {
    if (landau2.cf.family.tag != FamilyTag::Landau || landau2.cf.depth() != 2)
        throw std::invalid_argument("check_theorem2: expects the depth-2 Landau derivation");
    InequalityReport report;
    report.theorem = "landau-thm2";
    report.n_min = 0;
    report.n_max = n_max;
    report.base_precision = opts.prec;
    report.max_precision_used = opts.prec;

    PiRatio c2_low = landau2.limit_constant * PiRatio(opts.lower_scale);
    PiRatio c2_high = landau2.limit_constant * PiRatio(opts.upper_scale);
    auto ladder = precision_ladder(opts);
    for (long n = 0; n <= n_max; ++n) {
        // Exact Q(pi) bound values at this n.
        PiRatio low_exact = c2_low / PiRatio((Rational(n) + Rational(7, 4)).pow(10));
        PiRatio high_exact = c2_high / PiRatio((Rational(n) + Rational(3, 4)).pow(10));
        Verdict verdict = Verdict::Inconclusive;
        for (int p : ladder) {
            Enclosure value = error_term(landau2.cf, n, p);
            verdict = classify(pi_ratio_enclosure(low_exact, p), value,
                               pi_ratio_enclosure(high_exact, p));
            if (verdict != Verdict::Inconclusive) {
                report.max_precision_used = std::max(report.max_precision_used, p);
                break;
            }
            report.max_precision_used = std::max(report.max_precision_used, p);
        }
        report.verdicts.emplace_back(n, verdict);
    }
    return report;
}

InequalityReport check_theorem4(long n_max, const DerivationReport& lebesgue1,
                                const CheckOptions& opts) {
    if (lebesgue1.cf.family.tag != FamilyTag::Lebesgue || lebesgue1.cf.depth() != 1)
        throw std::invalid_argument("check_theorem4: expects the depth-1 Lebesgue derivation");
    InequalityReport report;
    report.theorem = "lebesgue-thm4";
    report.n_min = 0;
    report.n_max = n_max;
    report.base_precision = opts.prec;
    report.max_precision_used = opts.prec;

    PiRatio c1_low = lebesgue1.limit_constant * PiRatio(opts.lower_scale);
    PiRatio c1_high = lebesgue1.limit_constant * PiRatio(opts.upper_scale);
    auto ladder = precision_ladder(opts);
    for (long n = 0; n <= n_max; ++n) {
        PiRatio low_exact = c1_low / PiRatio((Rational(n) + Rational(13, 8)).pow(6));
        PiRatio high_exact = c1_high / PiRatio((Rational(n) + Rational(5, 8)).pow(6));
        Verdict verdict = Verdict::Inconclusive;
        for (int p : ladder) {
            Enclosure value = error_term(lebesgue1.cf, n, p);
            Enclosure low = pi_ratio_enclosure(low_exact, p);
            Enclosure high = pi_ratio_enclosure(high_exact, p);
            verdict = classify(low, value, high);
            if (verdict == Verdict::Inconclusive && opts.quadrature_fallback && n >= 1) {
                // Sharpen L_{n/2} with the quadrature oracle at a tolerance
                // tied to the gap between the bounds.
                try {
                    double gap = high.lo().to_double() - low.hi().to_double();
                    double tol = std::max(gap / 16.0, 1e-40);
                    Enclosure l_quad = lebesgue_quadrature(static_cast<int>(n), tol, p);
                    int wp = p + 64;
                    Enclosure mc0 = Enclosure::from_long(n + 1, wp)
                                        .log()
                                        .scale_rational(Rational(4), wp)
                                        .div(Enclosure::pi(wp).pow_int(2))
                                        .add(const_c1(p));
                    Enclosure mc1 = cf_enclosure(lebesgue1.cf, n, p);
                    Enclosure e_quad = l_quad.sub(mc0).sub(mc1);
                    auto merged = Enclosure::intersect(value, e_quad);
                    if (merged) verdict = classify(low, *merged, high);
                } catch (const std::domain_error&) {
                    // Oracle could not reach the needed tolerance; stay
                    // inconclusive and let the precision ladder continue.
                }
            }
            report.max_precision_used = std::max(report.max_precision_used, p);
            if (verdict != Verdict::Inconclusive) break;
        }
        report.verdicts.emplace_back(n, verdict);
    }
    return report;
}

InequalityReport check_monotone_decreasing(const DerivationReport& rep, long n_max,
                                           const CheckOptions& opts) {
    InequalityReport report;
    report.theorem = family_name(rep.cf.family.tag) + "-monotone";
    report.n_min = 0;
    report.n_max = n_max;
    report.base_precision = opts.prec;
    report.max_precision_used = opts.prec;

    long start = rep.cf.family.tag == FamilyTag::Euler ? 1 : 0;
    auto ladder = precision_ladder(opts);
    for (long n = start; n < n_max; ++n) {
        Verdict verdict = Verdict::Inconclusive;
        for (int p : ladder) {
            Enclosure a = error_term(rep.cf, n, p);
            Enclosure b = error_term(rep.cf, n + 1, p);
            if (Enclosure::certainly_less(b, a))
                verdict = Verdict::CertifiedTrue;
            else if (Enclosure::certainly_less(a, b))
                verdict = Verdict::CertifiedFalse;
            report.max_precision_used = std::max(report.max_precision_used, p);
            if (verdict != Verdict::Inconclusive) break;
        }
        report.verdicts.emplace_back(n, verdict);
    }
    return report;
}

}  // namespace mcfrac
