#pragma once

#include <mpfr.h>

#include <string>

#include "mcfrac/rational.hpp"

namespace mcfrac {

/// Thin RAII wrapper over an mpfr value at a stated binary precision. Every
/// deriving operation takes an explicit rounding mode; nothing rounds
/// implicitly. Precision is per-value, never ambient state.
class BigFloat {
public:
    explicit BigFloat(int prec_bits = 64);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }

    static BigFloat from_long(long n, int prec);
    static BigFloat from_rational(const Rational& q, int prec, mpfr_rnd_t rnd);
    /// Parses a decimal string.
    static BigFloat from_string(const std::string& s, int prec, mpfr_rnd_t rnd);
    /// 2^e exactly.
    static BigFloat pow2(long e, int prec);
    /// Exact embedding of a double.
    static BigFloat from_double(double d, int prec);

    static BigFloat add(const BigFloat& a, const BigFloat& b, int prec, mpfr_rnd_t rnd);
    static BigFloat sub(const BigFloat& a, const BigFloat& b, int prec, mpfr_rnd_t rnd);
    static BigFloat mul(const BigFloat& a, const BigFloat& b, int prec, mpfr_rnd_t rnd);
    static BigFloat div(const BigFloat& a, const BigFloat& b, int prec, mpfr_rnd_t rnd);
    static BigFloat log(const BigFloat& a, int prec, mpfr_rnd_t rnd);
    static BigFloat sin(const BigFloat& a, int prec, mpfr_rnd_t rnd);
    static BigFloat sqrt(const BigFloat& a, int prec, mpfr_rnd_t rnd);
    static BigFloat pow_si(const BigFloat& a, long e, int prec, mpfr_rnd_t rnd);
    static BigFloat const_pi(int prec, mpfr_rnd_t rnd);
    static BigFloat const_log2(int prec, mpfr_rnd_t rnd);

    BigFloat neg() const;  // exact
    BigFloat abs() const;  // exact

    int sign() const { return mpfr_sgn(v_); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }

    static int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
    int cmp_rational(const Rational& q) const { return mpfr_cmp_q(v_, q.raw().get_mpq_t()); }

    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }
    std::string to_string(int digits) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    mpfr_t v_;
};

}  // namespace mcfrac
