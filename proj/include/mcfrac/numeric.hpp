#pragma once

#include "mcfrac/correction.hpp"
#include "mcfrac/enclosure.hpp"

namespace mcfrac {

/// Exact G(n) = sum_{k=0..n} 16^-k C(2k,k)^2 via the rational term
/// recurrence; results are memoized incrementally.
Rational landau_G(int n);

/// Exact harmonic number H_n.
Rational harmonic(int n);

/// Evaluates an exact element of Q(pi) at the pi enclosure of the given
/// precision.
Enclosure pi_ratio_enclosure(const PiRatio& v, int prec);

/// Enclosure of the Euler-Mascheroni constant from the Euler-Maclaurin
/// expansion of H_n - ln n with the classical first-omitted-term bracket on
/// the exact rational part (widened to be symmetric). Never a hard-coded
/// literal. n = 0 picks a power of two large enough for the requested width
/// 2^(-prec+8).
Enclosure gamma_reference(int prec, long n = 0);

/// c0 = (gamma + 4 ln 2)/pi.
Enclosure const_c0(int prec);

enum class C1Mode { Accelerated, Literal };

/// c1 = (8/pi^2) sum_{k>=1} ln k/(4k^2-1) + (4/pi^2)(gamma + 2 ln 2).
/// Accelerated mode sums the series exactly to a cutoff and bounds the tail
/// by Euler-Maclaurin with rigorous remainder bounds; literal mode returns
/// the published 20-digit value widened by one last-place unit after a
/// consistency check against a direct partial sum.
Enclosure const_c1(int prec, C1Mode mode = C1Mode::Accelerated);

/// Enclosure of L_{n/2} from the two-sided Bernoulli-series bounds: the
/// lower bound keeps 2N correction terms, the upper 2N+1.
Enclosure lebesgue_enclosure(int n, int N, int prec);

/// Oracle value of L_{n/2} = (1/pi) int_0^pi |sin((n+1)t/2)|/sin(t/2) dt by
/// panel-wise adaptive Simpson quadrature, panels split at the integrand
/// zeros t_j = 2 j pi/(n+1). The returned interval has half-width <= tol
/// with the Richardson error estimate inflated 4x folded in.
Enclosure lebesgue_quadrature(int n, double tol, int prec);

/// Enclosure of the correction error term E_k(n) for the continued
/// fraction's family: exact G(n) for Landau, the Bernoulli-series bounds for
/// Lebesgue, exact H_n with the gamma oracle for Euler.
Enclosure error_term(const CFApprox& cf, long n, int prec);

/// Enclosure of E_k(n) - [two-sided bound terms] helper: numeric MC_k(n).
Enclosure cf_enclosure(const CFApprox& cf, long n, int prec);

}  // namespace mcfrac
