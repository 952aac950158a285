#include <stdexcept>
#include <vector>

#include "mcfrac/numeric.hpp"

namespace mcfrac {

namespace {

// Integrand |sin(nu t)| / sin(t/2) with nu = (n+1)/2, evaluated over a thin
// interval; the removable singularity at t = 0 takes the limit value n+1.
class LebesgueIntegrand {
public:
    LebesgueIntegrand(int n, int wp) : nu_(n + 1, 2), n_(n), wp_(wp) {}

    Enclosure operator()(const Enclosure& t) const {
        if (t.lo().sign() <= 0 && t.hi().sign() <= 0)
            return Enclosure::from_long(n_ + 1, wp_);
        Enclosure s1 = t.scale_rational(nu_, wp_).sin_thin().abs();
        Enclosure s2 = t.scale_rational(Rational(1, 2), wp_).sin_thin();
        return s1.div(s2);
    }

private:
    Rational nu_;
    int n_;
    int wp_;
};

struct SimpsonBudget {
    long evals = 0;
    long max_evals = 4'000'000;
};

Enclosure simpson_estimate(const Enclosure& h6, const Enclosure& fa, const Enclosure& fm,
                           const Enclosure& fb, int wp) {
    Enclosure four_fm = fm.scale_rational(Rational(4), wp);
    return fa.add(four_fm).add(fb).mul(h6);
}

// Recursive adaptive Simpson; returns an enclosure of the panel integral
// with the Richardson estimate |S2-S1|/15, inflated 4x, folded into the
// interval.
Enclosure adaptive_simpson(const LebesgueIntegrand& f, const Enclosure& a, const Enclosure& b,
                           const Enclosure& fa, const Enclosure& fm, const Enclosure& fb,
                           const Enclosure& s1, const BigFloat& tol, int depth, int wp,
                           SimpsonBudget& budget) {
    Enclosure m = a.add(b).scale_rational(Rational(1, 2), wp);
    Enclosure lm = a.add(m).scale_rational(Rational(1, 2), wp);
    Enclosure rm = m.add(b).scale_rational(Rational(1, 2), wp);
    Enclosure flm = f(lm);
    Enclosure frm = f(rm);
    budget.evals += 2;
    Enclosure h6 = m.sub(a).scale_rational(Rational(1, 6), wp);
    Enclosure left = simpson_estimate(h6, fa, flm, fm, wp);
    Enclosure right = simpson_estimate(h6, fm, frm, fb, wp);
    Enclosure s2 = left.add(right);
    BigFloat err = BigFloat::div(s2.sub(s1).abs().hi(), BigFloat::from_long(15, wp), wp,
                                 MPFR_RNDU);
    if (BigFloat::cmp(err, tol) <= 0 || depth <= 0 || budget.evals > budget.max_evals) {
        BigFloat pad = BigFloat::mul(err, BigFloat::from_long(4, wp), wp, MPFR_RNDU);
        return Enclosure(BigFloat::sub(s2.lo(), pad, wp, MPFR_RNDD),
                         BigFloat::add(s2.hi(), pad, wp, MPFR_RNDU));
    }
    BigFloat half_tol = BigFloat::mul(tol, BigFloat::from_rational(Rational(1, 2), wp, MPFR_RNDN),
                                      wp, MPFR_RNDD);
    Enclosure l = adaptive_simpson(f, a, m, fa, flm, fm, left, half_tol, depth - 1, wp, budget);
    Enclosure r = adaptive_simpson(f, m, b, fm, frm, fb, right, half_tol, depth - 1, wp, budget);
    return l.add(r);
}

Enclosure integrate_panel(const LebesgueIntegrand& f, const Enclosure& a, const Enclosure& b,
                          const BigFloat& tol, int wp, SimpsonBudget& budget) {
    Enclosure m = a.add(b).scale_rational(Rational(1, 2), wp);
    Enclosure fa = f(a), fm = f(m), fb = f(b);
    budget.evals += 3;
    Enclosure s1 = simpson_estimate(b.sub(a).scale_rational(Rational(1, 6), wp), fa, fm, fb, wp);
    return adaptive_simpson(f, a, b, fa, fm, fb, s1, tol, 36, wp, budget);
}

}  // namespace

Enclosure lebesgue_quadrature(int n, double tol, int prec) {
    if (n < 0) throw std::invalid_argument("lebesgue_quadrature: negative n");
    if (tol <= 0) throw std::invalid_argument("lebesgue_quadrature: tolerance must be positive");
    int wp = prec + 64;
    Enclosure pi = Enclosure::pi(wp);
    LebesgueIntegrand f(n, wp);

    // Panel boundaries at the zeros t_j = 2 j pi/(n+1) of sin(nu t).
    std::vector<Enclosure> cuts;
    cuts.push_back(Enclosure::from_long(0, wp));
    for (int j = 1; 2 * j < n + 1; ++j)
        cuts.push_back(pi.scale_rational(Rational(2 * j, n + 1), wp));
    cuts.push_back(pi);

    BigFloat total_tol = BigFloat::from_double(tol, wp);
    // Leave headroom for the final division by pi and the panel sum.
    BigFloat panel_tol = BigFloat::div(
        total_tol, BigFloat::from_long(4 * static_cast<long>(cuts.size()), wp), wp, MPFR_RNDD);

    SimpsonBudget budget;
    Enclosure total = Enclosure::from_long(0, wp);
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        total = total.add(integrate_panel(f, cuts[i], cuts[i + 1], panel_tol, wp, budget));
    Enclosure result = total.div(pi);

    BigFloat half_width = BigFloat::mul(result.width(),
                                        BigFloat::from_rational(Rational(1, 2), wp, MPFR_RNDN),
                                        wp, MPFR_RNDU);
    if (BigFloat::cmp(half_width, total_tol) > 0)
        throw std::domain_error("lebesgue_quadrature: tolerance not reached within panel budget");
    return result;
}

}  // namespace mcfrac
