#pragma once

#include <string>

#include "mcfrac/series.hpp"

namespace mcfrac {

/// Exact Bernoulli number B_m in the z/(e^z - 1) convention (B_1 = -1/2),
/// computed from the defining recurrence and memoized (thread-safe).
const Rational& bernoulli(int m);

enum class FamilyTag { Landau, Lebesgue, Euler };
enum class CFTemplate { QuadraticCF, LinearCF };

std::string family_name(FamilyTag tag);
FamilyTag family_from_name(const std::string& name);

/// One of the three constant families and its fixed continued-fraction
/// template: the argument shift inside the denominators, whether levels are
/// quadratic ((n+shift)^2 + c) or linear (n + c), and the outer scale factor
/// multiplying the whole fraction.
struct Family {
    FamilyTag tag;
    Rational shift;
    CFTemplate cf_template;
    PiRatio outer_scale;

    static Family landau();
    static Family lebesgue();
    static Family euler();
    static Family of(FamilyTag tag);

    /// Order of n^(-1) decay of E_k: 4k+2 for the quadratic families, 2k+1
    /// for the linear one.
    int limit_exponent(int depth) const {
        return cf_template == CFTemplate::QuadraticCF ? 4 * depth + 2 : 2 * depth + 1;
    }
};

/// Exact value of the k-term truncation q_k(n) of Brouncker's continued
/// fraction, evaluated innermost-first: q_1(n) = 4/(1+4n), and for k >= 2 the
/// partial numerators 1^2, 3^2, ..., (2k-3)^2 sit over repeated partial
/// denominators 2+8n.
Rational brouncker_qk_value(int k, const Rational& n);

/// Series of q_k(n) in x = 1/n (no argument shift). Internal building block;
/// performs no residual certification.
TruncSeries brouncker_qk_series_unshifted(int k, int order);

/// Series of q_k(n+1) in x = 1/n to the requested order. The order must be
/// covered by the residual guarantee for this k: the exact expansion of
/// q_{k+1} - q_k has to vanish through that order, which is verified, not
/// assumed.
TruncSeries brouncker_qk_series(int k, int order);

/// Largest order through which q_{k+1} - q_k vanishes identically (checked
/// by exact expansion, memoized). Orders up to this value are certified for
/// brouncker_qk_series(k, .).
int brouncker_certified_order(int k);

/// Exact Lebesgue expansion coefficient a_j in Q(pi):
/// a_j = 8/pi^2 * B_{2j}/(2j) * (2^(2j-1)-1) * (1 + sum_{k=1..j} (-1)^k B_{2k} pi^(2k)/(2k)!).
PiRatio lebesgue_aj(int j);

/// Exact truncated series of v(n) - v(n+1) - [MC_0(n) - MC_0(n+1)] in
/// x = 1/n: the raw input to the correction engine. For Landau the returned
/// series is pi * (difference), with the 1/pi carried in Family::outer_scale.
/// Fails when the requested order exceeds the certified residual budget of
/// the family's generator.
TruncSeries difference_series(const Family& family, int order);

}  // namespace mcfrac
