#pragma once

#include <optional>

#include "mcfrac/big_float.hpp"

namespace mcfrac {

/// Two-sided interval [lo, hi] guaranteed to contain the represented real
/// quantity. Every constructing operation rounds outward (lo down, hi up via
/// mpfr directed rounding), so containment is preserved through arithmetic.
class Enclosure {
public:
    Enclosure() = default;
    Enclosure(BigFloat lo, BigFloat hi);

    static Enclosure from_rational(const Rational& q, int prec);
    static Enclosure from_long(long n, int prec);
    /// Exact point interval from a decimal string, widened by one unit in
    /// the last supplied digit.
    static Enclosure from_decimal_string(const std::string& s, int prec);
    static Enclosure pi(int prec);
    static Enclosure log2_constant(int prec);

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    int precision() const { return lo_.precision(); }

    Enclosure add(const Enclosure& o) const;
    Enclosure sub(const Enclosure& o) const;
    Enclosure mul(const Enclosure& o) const;
    /// Throws when o contains zero.
    Enclosure div(const Enclosure& o) const;
    Enclosure neg() const;
    Enclosure abs() const;
    /// Integer power; negative exponents require the interval to exclude 0.
    Enclosure pow_int(long e) const;
    /// Natural log; requires lo > 0.
    Enclosure log() const;
    Enclosure sqrt() const;
    /// Image under sin for a thin interval, via |sin'| <= 1: the hull of the
    /// endpoint values widened by the interval width.
    Enclosure sin_thin() const;

    Enclosure scale_rational(const Rational& q, int prec) const;

    bool contains_zero() const;
    bool contains(const Rational& q) const;
    bool contains_interval(const Enclosure& o) const;
    /// Certified strict comparison: every point of *this is below every
    /// point of o.
    static bool certainly_less(const Enclosure& a, const Enclosure& b);
    static std::optional<Enclosure> intersect(const Enclosure& a, const Enclosure& b);

    BigFloat width() const;  // hi - lo rounded up
    BigFloat midpoint() const;
    /// width <= 2^e ?
    bool width_below_pow2(long e) const;

    std::string to_string(int digits = 20) const;

private:
    BigFloat lo_, hi_;
};

}  // namespace mcfrac
