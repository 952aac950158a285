#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "mcfrac/rational.hpp"

namespace mcfrac {

/// Dense univariate polynomial with Rational coefficients. Trailing zero
/// coefficients are trimmed; the zero polynomial has an empty coefficient
/// vector and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rational c) { c_.push_back(std::move(c)); trim(); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly variable() { return Poly({Rational(0), Rational(1)}); }
    static Poly monomial(Rational c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(int k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Rational& s) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Field division over Q: returns (quotient, remainder) with
    /// deg(remainder) < deg(divisor).
    std::pair<Poly, Poly> divrem(const Poly& d) const;

    Rational eval(const Rational& x) const;

    /// Positive rational c such that (1/c)*this has coprime integer
    /// coefficients. Zero polynomial has content 0.
    Rational content() const;

    /// this / content(), with positive leading coefficient.
    Poly primitive() const;

    /// Monic gcd over Q[x]; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b);

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Element of the field Q(pi): a ratio num/den of polynomials in a formal
/// transcendental symbol standing for pi. Canonical form: num and den are
/// coprime in Q[pi], both have integer coefficients, the integer contents of
/// num and den are coprime, and den's leading coefficient is positive.
/// Equality is decidable and structural on the canonical form.
class PiRatio {
public:
    PiRatio() : num_(), den_(Rational(1)) {}
    PiRatio(const Rational& r) : num_(r), den_(Rational(1)) { normalize(); }  // NOLINT
    PiRatio(long n) : PiRatio(Rational(n)) {}                                 // NOLINT
    PiRatio(Poly num, Poly den);

    static PiRatio pi() { return PiRatio(Poly::variable(), Poly(Rational(1))); }
    /// pi^k for any integer k (negative k gives 1/pi^|k|).
    static PiRatio pi_pow(int k);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return num_.degree() <= 0 && den_.degree() == 0; }
    /// Throws unless the value lies in Q.
    Rational as_rational() const;
    int pi_degree() const { return std::max(num_.degree(), den_.degree()); }

    PiRatio operator-() const;
    PiRatio& operator+=(const PiRatio& o);
    PiRatio& operator-=(const PiRatio& o);
    PiRatio& operator*=(const PiRatio& o);
    PiRatio& operator/=(const PiRatio& o);
    friend PiRatio operator+(PiRatio a, const PiRatio& b) { return a += b; }
    friend PiRatio operator-(PiRatio a, const PiRatio& b) { return a -= b; }
    friend PiRatio operator*(PiRatio a, const PiRatio& b) { return a *= b; }
    friend PiRatio operator/(PiRatio a, const PiRatio& b) { return a /= b; }

    friend bool operator==(const PiRatio& a, const PiRatio& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const PiRatio& a, const PiRatio& b) { return !(a == b); }

    /// Cross-multiplication equality test, independent of canonicalization.
    static bool equal_cross(const PiRatio& a, const PiRatio& b);

    PiRatio reciprocal() const;
    PiRatio pow(int e) const;

    /// Canonical rendering over the symbol "pi", e.g. "(12 - pi^2)/(18*pi^2)".
    std::string to_string() const;

    /// Parses an arithmetic expression over integers, '/', '*', '+', '-',
    /// '^', parentheses and the symbol "pi". Accepts everything to_string
    /// produces.
    static PiRatio parse(const std::string& s);

private:
    void normalize();
    void scale_canonical();
    bool both_rational(const PiRatio& o) const;
    void assign_rational(const Rational& r);
    Rational rational_unchecked() const;

    Poly num_, den_;
};

}  // namespace mcfrac
