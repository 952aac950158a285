#include "mcfrac/correction.hpp"

#include <stdexcept>

namespace mcfrac {

namespace {

// Denominator of one level as a min-order-0 series, with the 1/x^2 (or 1/x)
// factored out: (1+shift*x)^2 + c*x^2 for the quadratic template, 1 + c*x
// for the linear one.
TruncSeries level_base(const Family& f, const PiRatio& den_const, int order) {
    if (f.cf_template == CFTemplate::QuadraticCF) {
        PiRatio s{f.shift};
        std::vector<PiRatio> c;
        c.push_back(PiRatio(1));
        c.push_back(s + s);
        c.push_back(s * s + den_const);
        return TruncSeries::polynomial(std::move(c), std::max(order, 2));
    }
    std::vector<PiRatio> c;
    c.push_back(PiRatio(1));
    c.push_back(den_const);
    return TruncSeries::polynomial(std::move(c), std::max(order, 1));
}

}  // namespace

TruncSeries cf_series(const CFApprox& cf, int order) {
    if (cf.depth() == 0) return TruncSeries::zero(order);
    const Family& f = cf.family;
    int hop = f.cf_template == CFTemplate::QuadraticCF ? 2 : 1;
    // Bottom-up: S_j = base_j + num_{j+1} x^(2*hop) / S_{j+1}; the factored
    // powers of x make every reciprocal a unit series.
    TruncSeries s = level_base(f, cf.terms.back().second, order);
    for (int j = cf.depth() - 2; j >= 0; --j) {
        TruncSeries inner = s.reciprocal() * cf.terms[static_cast<size_t>(j + 1)].first;
        TruncSeries shifted = TruncSeries::monomial(PiRatio(1), 2 * hop, order + 2 * hop) * inner;
        s = level_base(f, cf.terms[static_cast<size_t>(j)].second, order) +
            shifted.truncated(order);
    }
    TruncSeries lead = TruncSeries::monomial(PiRatio(1), hop, order + hop) * s.reciprocal();
    return (lead * cf.terms[0].first).truncated(order);
}

TruncSeries cf_difference_series(const CFApprox& cf, int order) {
    TruncSeries mc = cf_series(cf, order);
    return mc - mc.shift_substitute();
}

PiRatio cf_evaluate_exact(const CFApprox& cf, const Rational& n) {
    if (cf.depth() == 0) return PiRatio(0);
    const Family& f = cf.family;
    PiRatio base = f.cf_template == CFTemplate::QuadraticCF
                       ? PiRatio((n + f.shift) * (n + f.shift))
                       : PiRatio(n);
    PiRatio tail;
    for (int j = cf.depth() - 1; j >= 0; --j) {
        PiRatio den = base + cf.terms[static_cast<size_t>(j)].second + tail;
        if (den.is_zero())
            throw std::domain_error("cf_evaluate_exact: zero denominator at level " +
                                    std::to_string(j + 1));
        tail = cf.terms[static_cast<size_t>(j)].first / den;
    }
    return f.outer_scale * tail;
}

int certified_depth_limit(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Landau: return 5;
        case FamilyTag::Lebesgue: return 3;
        case FamilyTag::Euler: return 10;
    }
    throw std::logic_error("certified_depth_limit: bad tag");
}

namespace {

Corroboration corroboration_for(FamilyTag tag, int depth) {
    // Published values cover Landau through depth 4 plus the depth-5 partial
    // numerator, Lebesgue through depth 2 plus the depth-3 partial numerator,
    // and Euler through depth 10.
    switch (tag) {
        case FamilyTag::Landau:
            if (depth <= 4) return Corroboration::Full;
            return depth == 5 ? Corroboration::Partial : Corroboration::None;
        case FamilyTag::Lebesgue:
            if (depth <= 2) return Corroboration::Full;
            return depth == 3 ? Corroboration::Partial : Corroboration::None;
        case FamilyTag::Euler:
            return depth <= 10 ? Corroboration::Full : Corroboration::None;
    }
    return Corroboration::None;
}

}  // namespace

DerivationReport derive(const Family& family, int depth, bool allow_uncertified) {
    if (depth < 1) throw std::invalid_argument("derive: depth must be >= 1");
    if (depth > certified_depth_limit(family.tag) && !allow_uncertified)
        throw std::invalid_argument(
            "derive: depth " + std::to_string(depth) + " exceeds the certified limit for " +
            family_name(family.tag) + " (" +
            std::to_string(certified_depth_limit(family.tag)) +
            "); pass the uncertified flag to proceed");

    bool quadratic = family.cf_template == CFTemplate::QuadraticCF;
    int limit_exp = family.limit_exponent(depth);
    int budget = limit_exp + 1;  // first surviving order
    TruncSeries base = difference_series(family, budget);

    // Orders below the first targeted coefficient must already vanish.
    int first_target = quadratic ? 3 : 2;
    for (int m = 1; m < first_target; ++m)
        if (!base.coeff(m).is_zero())
            throw std::domain_error("derive: initial correction leaves order " +
                                    std::to_string(m) + " nonzero");

    CFApprox cf{family, {}};
    auto coeff_at = [&](int target, const PiRatio& num_v, const PiRatio& den_v) {
        CFApprox trial = cf;
        trial.terms.emplace_back(num_v, den_v);
        return (base - cf_difference_series(trial, target)).coeff(target);
    };

    for (int j = 1; j <= depth; ++j) {
        int t_num = quadratic ? 4 * j - 1 : 2 * j;
        int t_den = quadratic ? 4 * j + 1 : 2 * j + 1;

        SolveOutcome num_sol = solve_leading(
            [&](const PiRatio& u) { return coeff_at(t_num, u, PiRatio(0)); });
        if (num_sol.underdetermined)
            throw std::domain_error("derive: underdetermined numerator at level " +
                                    std::to_string(j));

        if (quadratic) {
            // The coefficient between the two targets must vanish for any
            // denominator constant once the numerator is fixed.
            if (!coeff_at(t_num + 1, num_sol.value, PiRatio(0)).is_zero() ||
                !coeff_at(t_num + 1, num_sol.value, PiRatio(1)).is_zero())
                throw std::domain_error("derive: auto-vanish violated at order " +
                                        std::to_string(t_num + 1) + ", level " +
                                        std::to_string(j));
        }

        SolveOutcome den_sol = solve_leading(
            [&](const PiRatio& u) { return coeff_at(t_den, num_sol.value, u); });
        if (den_sol.underdetermined)
            throw std::domain_error("derive: underdetermined denominator constant at level " +
                                    std::to_string(j));

        if (quadratic) {
            if (!coeff_at(t_den + 1, num_sol.value, den_sol.value).is_zero())
                throw std::domain_error("derive: auto-vanish violated at order " +
                                        std::to_string(t_den + 1) + ", level " +
                                        std::to_string(j));
        }
        cf.terms.emplace_back(num_sol.value, den_sol.value);
    }

    if (family.tag != FamilyTag::Lebesgue) {
        for (const auto& [num_v, den_v] : cf.terms)
            if (!num_v.is_rational() || !den_v.is_rational())
                throw std::domain_error("derive: non-rational coefficient in a rational family");
    }

    TruncSeries residual = base - cf_difference_series(cf, budget);
    for (int m = 1; m <= limit_exp; ++m)
        if (!residual.coeff(m).is_zero())
            throw std::domain_error("derive: residual coefficient at order " + std::to_string(m) +
                                    " failed to vanish");
    PiRatio leading = residual.coeff(limit_exp + 1);
    if (leading.is_zero())
        throw std::domain_error("derive: surviving coefficient vanished; no limit constant");

    DerivationReport report;
    report.cf = std::move(cf);
    report.limit_exponent = limit_exp;
    report.limit_constant = family.outer_scale * leading / PiRatio(Rational(limit_exp));
    report.residual = residual;
    report.corroboration = corroboration_for(family.tag, depth);
    return report;
}

}  // namespace mcfrac
