#include "mcfrac/numeric.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace mcfrac {

namespace {

std::mutex g_table_mutex;
std::vector<Rational> g_values;  // G(0), G(1), ...
std::vector<Rational> g_terms;   // (16^-k C(2k,k)^2)

constexpr int kGuardBits = 64;

}  // namespace

Rational landau_G(int n) {
    if (n < 0) throw std::invalid_argument("landau_G: negative n");
    std::lock_guard<std::mutex> lock(g_table_mutex);
    if (g_values.empty()) {
        g_values.emplace_back(1);
        g_terms.emplace_back(1);
    }
    while (static_cast<int>(g_values.size()) <= n) {
        long k = static_cast<long>(g_terms.size());
        Rational ratio = Rational(2 * k - 1, 2 * k);
        g_terms.push_back(g_terms.back() * ratio * ratio);
        g_values.push_back(g_values.back() + g_terms.back());
    }
    return g_values[static_cast<size_t>(n)];
}

Rational harmonic(int n) {
    if (n < 1) throw std::invalid_argument("harmonic: n must be >= 1");
    Rational h(0);
    for (long m = 1; m <= n; ++m) h += Rational(1, m);
    return h;
}

Enclosure pi_ratio_enclosure(const PiRatio& v, int prec) {
    int wp = prec + kGuardBits;
    Enclosure pi = Enclosure::pi(wp);
    auto eval_poly = [&](const Poly& p) {
        Enclosure acc = Enclosure::from_long(0, wp);
        for (int k = p.degree(); k >= 0; --k)
            acc = acc.mul(pi).add(Enclosure::from_rational(p.coeff(k), wp));
        return acc;
    };
    Enclosure num = eval_poly(v.num());
    Enclosure den = eval_poly(v.den());
    return num.div(den);
}

namespace {

// gamma = H_n - ln n - 1/(2n) + sum_{k=1..K} B_{2k}/(2k n^{2k}) + R, with
// |R| below the first omitted term. The bracket is applied symmetrically to
// the exact rational part before ln n is subtracted.
Enclosure gamma_via_euler_maclaurin(int prec, long n) {
    int wp = prec + kGuardBits;
    Rational target(mpz_class(1), mpz_class(1) << static_cast<unsigned>(prec + 8));
    for (int attempt = 0; attempt < 4; ++attempt, n *= 2) {
        Rational n2(n * n);
        Rational exact = harmonic(static_cast<int>(n)) - Rational(1, 2 * n);
        Rational npow(1);
        bool converged = false;
        Rational first_omitted(0);
        for (int k = 1; k <= 2000; ++k) {
            npow *= n2;
            Rational term = bernoulli(2 * k) / (Rational(2 * k) * npow);
            if (term.abs() < target) {
                first_omitted = term.abs();
                converged = true;
                break;
            }
            exact += term;
        }
        if (!converged) continue;  // n too small for the asymptotic series
        Enclosure bracket(
            BigFloat::from_rational(exact - first_omitted, wp, MPFR_RNDD),
            BigFloat::from_rational(exact + first_omitted, wp, MPFR_RNDU));
        Enclosure log_n = Enclosure::from_long(n, wp).log();
        return bracket.sub(log_n);
    }
    throw std::domain_error("gamma_reference: Euler-Maclaurin series did not converge");
}

template <typename F>
const Enclosure& memoized_by_prec(std::map<long, Enclosure>& cache, std::mutex& m, long key,
                                  F&& compute) {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, compute()).first;
    return it->second;
}

}  // namespace

Enclosure gamma_reference(int prec, long n) {
    if (prec < 64) throw std::invalid_argument("gamma_reference: precision must be >= 64");
    if (n != 0) return gamma_via_euler_maclaurin(prec, n);
    static std::map<long, Enclosure> cache;
    static std::mutex mutex;
    return memoized_by_prec(cache, mutex, prec, [&] {
        long pick = 32;
        while (pick < (prec + 16) / 8) pick *= 2;
        return gamma_via_euler_maclaurin(prec, pick);
    });
}

Enclosure const_c0(int prec) {
    if (prec < 64) throw std::invalid_argument("const_c0: precision must be >= 64");
    static std::map<long, Enclosure> cache;
    static std::mutex mutex;
    return memoized_by_prec(cache, mutex, prec, [&] {
        int wp = prec + kGuardBits;
        Enclosure gamma = gamma_reference(prec + 16);
        Enclosure ln2 = Enclosure::log2_constant(wp);
        Enclosure pi = Enclosure::pi(wp);
        return gamma.add(ln2.scale_rational(Rational(4), wp)).div(pi);
    });
}

namespace {

// One derivative step of x^(-c) (alpha ln x + beta).
struct LogPowerTerm {
    Rational alpha, beta;
    long c;

    LogPowerTerm differentiate() const {
        return {-alpha * Rational(c), alpha - beta * Rational(c), c + 1};
    }

    // int_N^inf x^(-c)(alpha ln x + beta) dx for c >= 2.
    Enclosure integral_from(long n, const Enclosure& log_n, int wp) const {
        Rational cm1(c - 1);
        Rational scale = Rational(1, n).pow(c - 1);
        Enclosure ln_term = log_n.scale_rational(alpha / cm1, wp);
        Enclosure rest = Enclosure::from_rational(alpha / (cm1 * cm1) + beta / cm1, wp);
        return ln_term.add(rest).scale_rational(scale, wp);
    }

    Enclosure value_at(long n, const Enclosure& log_n, int wp) const {
        Rational scale = Rational(1, n).pow(c);
        return log_n.scale_rational(alpha, wp)
            .add(Enclosure::from_rational(beta, wp))
            .scale_rational(scale, wp);
    }

    LogPowerTerm absolute() const { return {alpha.abs(), beta.abs(), c}; }
};

// Tail sum_{k=N..inf} ln k * k^(-2m) by Euler-Maclaurin with the rigorous
// |B_{2S} - B_{2S}({x})| <= 2|B_{2S}| remainder bound.
Enclosure log_power_tail(long n, int m, const Enclosure& log_n, int wp, const BigFloat& eps) {
    LogPowerTerm g{Rational(1), Rational(0), 2 * m};
    Enclosure acc = g.integral_from(n, log_n, wp)
                        .add(g.value_at(n, log_n, wp).scale_rational(Rational(1, 2), wp));
    LogPowerTerm deriv = g;  // will step through g', g'', ...
    Rational fact(1);        // (2s)!
    int d = 0;
    for (int s = 1; s <= 80; ++s) {
        while (d < 2 * s - 1) {
            deriv = deriv.differentiate();
            ++d;
        }
        fact *= Rational(2 * s - 1) * Rational(2 * s);
        Enclosure correction =
            deriv.value_at(n, log_n, wp).scale_rational(bernoulli(2 * s) / fact, wp);
        acc = acc.sub(correction);
        // Remainder bound with the next derivative order.
        LogPowerTerm d2s = deriv.differentiate().absolute();
        Enclosure integral = d2s.integral_from(n, log_n, wp);
        Enclosure bound =
            integral.scale_rational(Rational(2) * bernoulli(2 * s).abs() / fact, wp);
        if (BigFloat::cmp(bound.hi(), eps) <= 0) {
            return Enclosure(BigFloat::sub(acc.lo(), bound.hi(), wp, MPFR_RNDD),
                             BigFloat::add(acc.hi(), bound.hi(), wp, MPFR_RNDU));
        }
    }
    throw std::domain_error("const_c1: tail bound unavailable at the requested width");
}

Enclosure c1_accelerated(int prec) {
    int wp = prec + kGuardBits;
    const long cutoff = 10000;
    Enclosure sum = Enclosure::from_long(0, wp);
    for (long k = 2; k < cutoff; ++k) {
        Enclosure term = Enclosure::from_long(k, wp).log().scale_rational(
            Rational(1, 4 * k * k - 1), wp);
        sum = sum.add(term);
    }
    // Tail via the geometric split 1/(4k^2-1) = sum_m 4^-m k^-2m.
    BigFloat eps = BigFloat::pow2(-(prec + 10), wp);
    Enclosure log_cut = Enclosure::from_long(cutoff, wp).log();
    Enclosure tail = Enclosure::from_long(0, wp);
    Enclosure last_tm = Enclosure::from_long(0, wp);
    bool geo_done = false;
    Rational quarter_pow(1);
    for (int m = 1; m <= 60; ++m) {
        quarter_pow *= Rational(1, 4);
        last_tm = log_power_tail(cutoff, m, log_cut, wp, eps);
        tail = tail.add(last_tm.scale_rational(quarter_pow, wp));
        // Remaining geometric part: 0 <= R <= 4^-m T_m / (4N^2 - 1).
        Enclosure rbound = last_tm.scale_rational(
            quarter_pow / Rational(4 * cutoff * cutoff - 1), wp);
        if (BigFloat::cmp(rbound.hi(), eps) <= 0) {
            tail = Enclosure(tail.lo(), BigFloat::add(tail.hi(), rbound.hi(), wp, MPFR_RNDU));
            geo_done = true;
            break;
        }
    }
    if (!geo_done)
        throw std::domain_error("const_c1: tail bound unavailable at the requested width");
    Enclosure series = sum.add(tail);
    Enclosure gamma = gamma_reference(prec + 16);
    Enclosure ln2 = Enclosure::log2_constant(wp);
    Enclosure pi2 = Enclosure::pi(wp).pow_int(2);
    Enclosure a = series.scale_rational(Rational(8), wp).div(pi2);
    Enclosure b = gamma.add(ln2.scale_rational(Rational(2), wp))
                      .scale_rational(Rational(4), wp)
                      .div(pi2);
    return a.add(b);
}

// Direct partial sum with an elementary integral bracket on the tail:
// for x >= N, ln x/(4x^2) < f(x) <= ln x/(4x^2) * 4N^2/(4N^2-1), and
// int_N^inf ln x/(4x^2) dx = (ln N + 1)/(4N).
Enclosure c1_direct_bracket(int prec, long cutoff) {
    int wp = prec + kGuardBits;
    Enclosure sum = Enclosure::from_long(0, wp);
    for (long k = 2; k < cutoff; ++k) {
        Enclosure term = Enclosure::from_long(k, wp).log().scale_rational(
            Rational(1, 4 * k * k - 1), wp);
        sum = sum.add(term);
    }
    Enclosure log_n = Enclosure::from_long(cutoff, wp).log();
    Enclosure base = log_n.add(Enclosure::from_long(1, wp))
                         .scale_rational(Rational(1, 4 * cutoff), wp);
    Enclosure f_n = log_n.scale_rational(Rational(1, 4 * cutoff * cutoff - 1), wp);
    Rational inflate(4 * cutoff * cutoff, 4 * cutoff * cutoff - 1);
    Enclosure tail(base.lo(), f_n.add(base.scale_rational(inflate, wp)).hi());
    Enclosure series = sum.add(tail);
    Enclosure gamma = gamma_reference(prec + 16);
    Enclosure ln2 = Enclosure::log2_constant(wp);
    Enclosure pi2 = Enclosure::pi(wp).pow_int(2);
    return series.scale_rational(Rational(8), wp)
        .div(pi2)
        .add(gamma.add(ln2.scale_rational(Rational(2), wp))
                 .scale_rational(Rational(4), wp)
                 .div(pi2));
}

}  // namespace

Enclosure const_c1(int prec, C1Mode mode) {
    if (prec < 64) throw std::invalid_argument("const_c1: precision must be >= 64");
    if (mode == C1Mode::Literal) {
        static std::map<long, Enclosure> cache;
        static std::mutex mutex;
        return memoized_by_prec(cache, mutex, prec, [&] {
            Enclosure literal =
                Enclosure::from_decimal_string("0.98943127383114695174", prec + kGuardBits);
            Enclosure direct = c1_direct_bracket(std::min(prec, 192), 100000);
            if (!Enclosure::intersect(literal, direct))
                throw std::logic_error("const_c1: literal value fails the partial-sum check");
            return literal;
        });
    }
    static std::map<long, Enclosure> cache;
    static std::mutex mutex;
    return memoized_by_prec(cache, mutex, prec, [&] { return c1_accelerated(prec); });
}

namespace {

std::mutex aj_mutex;
std::map<int, PiRatio> aj_cache;

const PiRatio& cached_aj(int j) {
    std::lock_guard<std::mutex> lock(aj_mutex);
    auto it = aj_cache.find(j);
    if (it == aj_cache.end()) it = aj_cache.emplace(j, lebesgue_aj(j)).first;
    return it->second;
}

}  // namespace

Enclosure lebesgue_enclosure(int n, int N, int prec) {
    if (n < 0 || N < 1) throw std::invalid_argument("lebesgue_enclosure: bad arguments");
    int wp = prec + kGuardBits;
    // Exact partial sums of the correction series in Q(pi).
    PiRatio lower_sum, upper_sum;
    Rational inv = Rational(1, n + 1) * Rational(1, n + 1);
    Rational power(1);
    for (int j = 1; j <= 2 * N + 1; ++j) {
        power *= inv;
        PiRatio term = cached_aj(j) * PiRatio(power);
        if (j <= 2 * N) lower_sum += term;
        upper_sum += term;
    }
    Enclosure log_part = Enclosure::from_long(n + 1, wp)
                             .log()
                             .scale_rational(Rational(4), wp)
                             .div(Enclosure::pi(wp).pow_int(2));
    Enclosure c1 = const_c1(prec);
    Enclosure base = log_part.add(c1);
    Enclosure lo = base.add(pi_ratio_enclosure(lower_sum, prec));
    Enclosure hi = base.add(pi_ratio_enclosure(upper_sum, prec));
    return Enclosure(lo.lo(), hi.hi());
}

Enclosure cf_enclosure(const CFApprox& cf, long n, int prec) {
    return pi_ratio_enclosure(cf_evaluate_exact(cf, Rational(n)), prec);
}

namespace {

// E_k(n) for the Lebesgue family directly from the two-sided series bounds:
// the log and c1 parts of MC_0 cancel exactly against the error-term
// definition, leaving exact Q(pi) bounds.
Enclosure lebesgue_error_term(const CFApprox& cf, long n, int prec) {
    PiRatio mc = cf_evaluate_exact(cf, Rational(n));
    if (n == 0) {
        // L_0 = 1 exactly: E = 1 - c1 - MC(0).
        Enclosure one = Enclosure::from_long(1, prec + kGuardBits);
        return one.sub(const_c1(prec)).sub(pi_ratio_enclosure(mc, prec));
    }
    Rational inv = Rational(1, n + 1) * Rational(1, n + 1);
    std::optional<Enclosure> best;
    BigFloat prev_width(prec);
    for (int N = 1; N <= 16; ++N) {
        PiRatio lower_sum, upper_sum;
        Rational power(1);
        for (int j = 1; j <= 2 * N + 1; ++j) {
            power *= inv;
            PiRatio term = cached_aj(j) * PiRatio(power);
            if (j <= 2 * N) lower_sum += term;
            upper_sum += term;
        }
        Enclosure lo = pi_ratio_enclosure(lower_sum - mc, prec);
        Enclosure hi = pi_ratio_enclosure(upper_sum - mc, prec);
        Enclosure candidate(lo.lo(), hi.hi());
        if (best) {
            auto merged = Enclosure::intersect(*best, candidate);
            if (!merged)
                throw std::logic_error("lebesgue_error_term: inconsistent series bounds");
            bool grew = BigFloat::cmp(candidate.width(), prev_width) > 0;
            best = *merged;
            if (grew) break;  // asymptotic turn reached
        } else {
            best = candidate;
        }
        prev_width = candidate.width();
    }
    return *best;
}

}  // namespace

Enclosure error_term(const CFApprox& cf, long n, int prec) {
    int wp = prec + kGuardBits;
    switch (cf.family.tag) {
        case FamilyTag::Landau: {
            if (n < 0) throw std::invalid_argument("error_term: negative n");
            Enclosure g = Enclosure::from_rational(landau_G(static_cast<int>(n)), wp);
            Enclosure log_part = Enclosure::from_rational(Rational(n) + Rational(3, 4), wp)
                                     .log()
                                     .div(Enclosure::pi(wp));
            Enclosure mc = pi_ratio_enclosure(cf_evaluate_exact(cf, Rational(n)), prec);
            return g.sub(log_part).sub(const_c0(prec)).sub(mc);
        }
        case FamilyTag::Lebesgue:
            return lebesgue_error_term(cf, n, prec);
        case FamilyTag::Euler: {
            if (n < 1) throw std::invalid_argument("error_term: Euler family needs n >= 1");
            Rational exact = harmonic(static_cast<int>(n)) -
                             cf_evaluate_exact(cf, Rational(n)).as_rational();
            Enclosure log_n = Enclosure::from_long(n, wp).log();
            return Enclosure::from_rational(exact, wp).sub(log_n).sub(gamma_reference(prec));
        }
    }
    throw std::logic_error("error_term: bad family tag");
}

}  // namespace mcfrac
