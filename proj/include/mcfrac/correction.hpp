#pragma once

#include <utility>
#include <vector>

#include "mcfrac/seriesgen.hpp"

namespace mcfrac {

/// A finite continued-fraction correction MC_k: the family fixes the
/// denominator template and outer scale; terms holds the per-level pairs
/// (partial numerator, denominator constant). For the quadratic template the
/// level-j denominator is (n+shift)^2 + terms[j-1].second; for the linear
/// template it is n + terms[j-1].second.
struct CFApprox {
    Family family;
    std::vector<std::pair<PiRatio, PiRatio>> terms;

    int depth() const { return static_cast<int>(terms.size()); }
};

/// How far the derived coefficients can be checked against independently
/// published values.
enum class Corroboration { Full, Partial, None };

struct DerivationReport {
    CFApprox cf;
    /// C_k, with the family's outer scale folded in (so the Landau constants
    /// carry their 1/pi factor).
    PiRatio limit_constant;
    /// 4k+2 for the quadratic families, 2k+1 for the linear one.
    int limit_exponent = 0;
    /// First surviving terms of the family-scaled difference series; its
    /// min order is limit_exponent + 1 and
    /// limit_constant = outer_scale * leading coefficient / limit_exponent.
    TruncSeries residual = TruncSeries::zero(0);
    Corroboration corroboration = Corroboration::Full;
};

/// Family-scaled series of MC_k(n) in x = 1/n (for Landau this is
/// pi * MC_k(n), matching the difference_series convention).
TruncSeries cf_series(const CFApprox& cf, int order);

/// Family-scaled series of MC_k(n) - MC_k(n+1) in x = 1/n.
TruncSeries cf_difference_series(const CFApprox& cf, int order);

/// Exact value of MC_k(n) as an element of Q(pi), outer scale included
/// (rational for the Euler family, a rational multiple of 1/pi for Landau).
PiRatio cf_evaluate_exact(const CFApprox& cf, const Rational& n);

/// Maximum depth whose derived coefficients are fully or partially covered
/// by published cross-checks; beyond it derive() demands allow_uncertified.
int certified_depth_limit(FamilyTag tag);

/// Runs the multiple-correction recursion to the given depth: level by
/// level, the partial numerator is fixed by vanishing the lowest surviving
/// coefficient of the telescoped error difference and the denominator
/// constant by the next one; for the quadratic template the two coefficients
/// in between must vanish automatically, which is asserted, not assumed.
/// The limit constant follows from the first surviving coefficient.
DerivationReport derive(const Family& family, int depth, bool allow_uncertified = false);

}  // namespace mcfrac
