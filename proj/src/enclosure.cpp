#include "mcfrac/enclosure.hpp"

#include <stdexcept>

namespace mcfrac {

namespace {
void check_order(const BigFloat& lo, const BigFloat& hi) {
    if (lo.is_nan() || hi.is_nan() || BigFloat::cmp(lo, hi) > 0)
        throw std::logic_error("Enclosure: invalid endpoints");
}
}  // namespace

Enclosure::Enclosure(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    check_order(lo_, hi_);
}

Enclosure Enclosure::from_rational(const Rational& q, int prec) {
    return Enclosure(BigFloat::from_rational(q, prec, MPFR_RNDD),
                     BigFloat::from_rational(q, prec, MPFR_RNDU));
}

Enclosure Enclosure::from_long(long n, int prec) {
    return from_rational(Rational(n), prec);
}

Enclosure Enclosure::from_decimal_string(const std::string& s, int prec) {
    BigFloat lo = BigFloat::from_string(s, prec, MPFR_RNDD);
    BigFloat hi = BigFloat::from_string(s, prec, MPFR_RNDU);
    // Widen by one unit in the last decimal place given.
    auto dot = s.find('.');
    long frac_digits = dot == std::string::npos ? 0 : static_cast<long>(s.size() - dot - 1);
    Rational ulp = Rational(1, 10).pow(frac_digits);
    BigFloat pad = BigFloat::from_rational(ulp, prec, MPFR_RNDU);
    return Enclosure(BigFloat::sub(lo, pad, prec, MPFR_RNDD),
                     BigFloat::add(hi, pad, prec, MPFR_RNDU));
}

Enclosure Enclosure::pi(int prec) {
    return Enclosure(BigFloat::const_pi(prec, MPFR_RNDD), BigFloat::const_pi(prec, MPFR_RNDU));
}

Enclosure Enclosure::log2_constant(int prec) {
    return Enclosure(BigFloat::const_log2(prec, MPFR_RNDD),
                     BigFloat::const_log2(prec, MPFR_RNDU));
}

Enclosure Enclosure::add(const Enclosure& o) const {
    int p = std::max(precision(), o.precision());
    return Enclosure(BigFloat::add(lo_, o.lo_, p, MPFR_RNDD),
                     BigFloat::add(hi_, o.hi_, p, MPFR_RNDU));
}

Enclosure Enclosure::sub(const Enclosure& o) const {
    int p = std::max(precision(), o.precision());
    return Enclosure(BigFloat::sub(lo_, o.hi_, p, MPFR_RNDD),
                     BigFloat::sub(hi_, o.lo_, p, MPFR_RNDU));
}

Enclosure Enclosure::mul(const Enclosure& o) const {
    int p = std::max(precision(), o.precision());
    const BigFloat* xs[2] = {&lo_, &hi_};
    const BigFloat* ys[2] = {&o.lo_, &o.hi_};
    BigFloat lo(p), hi(p);
    bool first = true;
    for (const auto* x : xs) {
        for (const auto* y : ys) {
            BigFloat d = BigFloat::mul(*x, *y, p, MPFR_RNDD);
            BigFloat u = BigFloat::mul(*x, *y, p, MPFR_RNDU);
            if (first || BigFloat::cmp(d, lo) < 0) lo = d;
            if (first || BigFloat::cmp(u, hi) > 0) hi = u;
            first = false;
        }
    }
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::div(const Enclosure& o) const {
    if (o.contains_zero())
        throw std::domain_error("Enclosure: division by interval containing zero");
    int p = std::max(precision(), o.precision());
    const BigFloat* xs[2] = {&lo_, &hi_};
    const BigFloat* ys[2] = {&o.lo_, &o.hi_};
    BigFloat lo(p), hi(p);
    bool first = true;
    for (const auto* x : xs) {
        for (const auto* y : ys) {
            BigFloat d = BigFloat::div(*x, *y, p, MPFR_RNDD);
            BigFloat u = BigFloat::div(*x, *y, p, MPFR_RNDU);
            if (first || BigFloat::cmp(d, lo) < 0) lo = d;
            if (first || BigFloat::cmp(u, hi) > 0) hi = u;
            first = false;
        }
    }
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::neg() const { return Enclosure(hi_.neg(), lo_.neg()); }

Enclosure Enclosure::abs() const {
    if (lo_.sign() >= 0) return *this;
    if (hi_.sign() <= 0) return neg();
    BigFloat m = lo_.neg();
    if (BigFloat::cmp(m, hi_) < 0) m = hi_;
    return Enclosure(BigFloat::from_long(0, precision()), std::move(m));
}

Enclosure Enclosure::pow_int(long e) const {
    int p = precision();
    if (e == 0) return from_long(1, p);
    if (e < 0) return from_long(1, p).div(pow_int(-e));
    if (e % 2 == 0 && contains_zero()) {
        Enclosure a = abs();
        return Enclosure(BigFloat::from_long(0, p),
                         BigFloat::pow_si(a.hi_, e, p, MPFR_RNDU));
    }
    // Monotone on each sign region for odd e, and on |x| for even e with a
    // sign-definite interval; endpoint evaluation suffices.
    BigFloat a = BigFloat::pow_si(lo_, e, p, MPFR_RNDD);
    BigFloat b = BigFloat::pow_si(hi_, e, p, MPFR_RNDU);
    BigFloat a2 = BigFloat::pow_si(lo_, e, p, MPFR_RNDU);
    BigFloat b2 = BigFloat::pow_si(hi_, e, p, MPFR_RNDD);
    BigFloat lo = BigFloat::cmp(a, b2) < 0 ? a : b2;
    BigFloat hi = BigFloat::cmp(b, a2) > 0 ? b : a2;
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::log() const {
    if (lo_.sign() <= 0) throw std::domain_error("Enclosure: log of non-positive interval");
    int p = precision();
    return Enclosure(BigFloat::log(lo_, p, MPFR_RNDD), BigFloat::log(hi_, p, MPFR_RNDU));
}

Enclosure Enclosure::sqrt() const {
    if (lo_.sign() < 0) throw std::domain_error("Enclosure: sqrt of negative interval");
    int p = precision();
    return Enclosure(BigFloat::sqrt(lo_, p, MPFR_RNDD), BigFloat::sqrt(hi_, p, MPFR_RNDU));
}

Enclosure Enclosure::sin_thin() const {
    int p = precision();
    BigFloat w = width();
    BigFloat slo = BigFloat::sin(lo_, p, MPFR_RNDD);
    BigFloat shi = BigFloat::sin(lo_, p, MPFR_RNDU);
    return Enclosure(BigFloat::sub(slo, w, p, MPFR_RNDD),
                     BigFloat::add(shi, w, p, MPFR_RNDU));
}

Enclosure Enclosure::scale_rational(const Rational& q, int prec) const {
    return mul(from_rational(q, prec));
}


bool Enclosure::contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

bool Enclosure::contains(const Rational& q) const {
    return lo_.cmp_rational(q) <= 0 && hi_.cmp_rational(q) >= 0;
}

bool Enclosure::contains_interval(const Enclosure& o) const {
    return BigFloat::cmp(lo_, o.lo_) <= 0 && BigFloat::cmp(hi_, o.hi_) >= 0;
}

bool Enclosure::certainly_less(const Enclosure& a, const Enclosure& b) {
    return BigFloat::cmp(a.hi_, b.lo_) < 0;
}

std::optional<Enclosure> Enclosure::intersect(const Enclosure& a, const Enclosure& b) {
    const BigFloat& lo = BigFloat::cmp(a.lo_, b.lo_) > 0 ? a.lo_ : b.lo_;
    const BigFloat& hi = BigFloat::cmp(a.hi_, b.hi_) < 0 ? a.hi_ : b.hi_;
    if (BigFloat::cmp(lo, hi) > 0) return std::nullopt;
    return Enclosure(lo, hi);
}

BigFloat Enclosure::width() const {
    return BigFloat::sub(hi_, lo_, precision(), MPFR_RNDU);
}

BigFloat Enclosure::midpoint() const {
    BigFloat s = BigFloat::add(lo_, hi_, precision(), MPFR_RNDN);
    return BigFloat::mul(s, BigFloat::from_rational(Rational(1, 2), precision(), MPFR_RNDN),
                         precision(), MPFR_RNDN);
}

bool Enclosure::width_below_pow2(long e) const {
    BigFloat w = width();
    BigFloat bound = BigFloat::pow2(e, precision());
    return BigFloat::cmp(w, bound) <= 0;
}

std::string Enclosure::to_string(int digits) const {
    return "[" + lo_.to_string(digits) + ", " + hi_.to_string(digits) + "]";
}

}  // namespace mcfrac
