#include "mcfrac/big_float.hpp"

#include <stdexcept>
#include <vector>

namespace mcfrac {

BigFloat::BigFloat(int prec_bits) {
    if (prec_bits < MPFR_PREC_MIN) prec_bits = MPFR_PREC_MIN;
    mpfr_init2(v_, prec_bits);
    mpfr_set_nan(v_);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);  // same precision: exact
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_long(long n, int prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, n, MPFR_RNDN);  // exact for |n| < 2^prec
    return r;
}

BigFloat BigFloat::from_rational(const Rational& q, int prec, mpfr_rnd_t rnd) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.raw().get_mpq_t(), rnd);
    return r;
}

BigFloat BigFloat::from_string(const std::string& s, int prec, mpfr_rnd_t rnd) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, rnd) != 0)
        throw std::invalid_argument("BigFloat: cannot parse '" + s + "'");
    return r;
}

BigFloat BigFloat::pow2(long e, int prec) {
    BigFloat r(prec);
    mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_double(double d, int prec) {
    BigFloat r(prec < 64 ? 64 : prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);  // exact: doubles embed in >= 64 bits
    return r;
}

#define MCFRAC_BINOP(name, fn)                                                            \
    BigFloat BigFloat::name(const BigFloat& a, const BigFloat& b, int prec, mpfr_rnd_t rnd) { \
        BigFloat r(prec);                                                                 \
        fn(r.v_, a.v_, b.v_, rnd);                                                        \
        return r;                                                                         \
    }

MCFRAC_BINOP(add, mpfr_add)
MCFRAC_BINOP(sub, mpfr_sub)
MCFRAC_BINOP(mul, mpfr_mul)
MCFRAC_BINOP(div, mpfr_div)
#undef MCFRAC_BINOP

BigFloat BigFloat::log(const BigFloat& a, int prec, mpfr_rnd_t rnd) {
    BigFloat r(prec);
    mpfr_log(r.v_, a.v_, rnd);
    return r;
}

BigFloat BigFloat::sin(const BigFloat& a, int prec, mpfr_rnd_t rnd) {
    BigFloat r(prec);
    mpfr_sin(r.v_, a.v_, rnd);
    return r;
}

BigFloat BigFloat::sqrt(const BigFloat& a, int prec, mpfr_rnd_t rnd) {
    BigFloat r(prec);
    mpfr_sqrt(r.v_, a.v_, rnd);
    return r;
}

BigFloat BigFloat::pow_si(const BigFloat& a, long e, int prec, mpfr_rnd_t rnd) {
    BigFloat r(prec);
    mpfr_pow_si(r.v_, a.v_, e, rnd);
    return r;
}

BigFloat BigFloat::const_pi(int prec, mpfr_rnd_t rnd) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, rnd);
    return r;
}

BigFloat BigFloat::const_log2(int prec, mpfr_rnd_t rnd) {
    BigFloat r(prec);
    mpfr_const_log2(r.v_, rnd);
    return r;
}

BigFloat BigFloat::neg() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(int digits) const {
    if (digits < 2) digits = 2;
    std::vector<char> buf(static_cast<size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

}  // namespace mcfrac
