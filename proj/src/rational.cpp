#include "mcfrac/rational.hpp"

namespace mcfrac {

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    return Rational(q);
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(r);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) return reciprocal().pow(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational binomial(long n, long k) {
    if (k < 0) throw std::invalid_argument("binomial: negative k");
    Rational r(1);
    for (long i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
    return r;
}

}  // namespace mcfrac
