#include "mcfrac/pi_ratio.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mcfrac {

Poly Poly::monomial(Rational c, int k) {
    if (k < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
    std::vector<Rational> v(static_cast<size_t>(k) + 1);
    v.back() = std::move(c);
    return Poly(std::move(v));
}

const Rational& Poly::coeff(int k) const {
    static const Rational zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(k)];
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(-c);
    return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    }
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& s) const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c * s);
    return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly r = *this;
    std::vector<Rational> q(degree() >= d.degree() ? static_cast<size_t>(degree() - d.degree()) + 1 : 0);
    const Rational& lead = d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rational f = r.leading() / lead;
        q[static_cast<size_t>(k)] = f;
        r = r - d * Poly::monomial(f, k);
    }
    return {Poly(std::move(q)), std::move(r)};
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational Poly::content() const {
    if (is_zero()) return Rational(0);
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& c : c_) {
        if (c.is_zero()) continue;
        mpz_class n = c.numerator();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_class d = c.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    return Rational(num_gcd, den_lcm);
}

Poly Poly::primitive() const {
    if (is_zero()) return Poly();
    Rational c = content();
    if (leading().sign() < 0) c = -c;
    return *this * c.reciprocal();
}

namespace {

// Integer-coefficient view of a primitive polynomial, highest degree last.
std::vector<mpz_class> primitive_int_coeffs(const Poly& p) {
    Poly prim = p.primitive();
    std::vector<mpz_class> v;
    v.reserve(static_cast<size_t>(prim.degree()) + 1);
    for (int k = 0; k <= prim.degree(); ++k) v.push_back(prim.coeff(k).numerator());
    return v;
}

void divide_by_content(std::vector<mpz_class>& v) {
    mpz_class g(0);
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0 || g == 1) return;
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

void trim_int(std::vector<mpz_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Pseudo-remainder of a by b (integer coefficients, b nonzero).
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const mpz_class& lead = b.back();
    while (a.size() >= b.size()) {
        mpz_class top = a.back();
        size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lead;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= top * b[i];
        trim_int(a);
        if (a.empty()) break;
    }
    return a;
}

}  // namespace

Poly Poly::gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.is_zero() ? Poly() : b * b.leading().reciprocal();
    if (b.is_zero()) return a * a.leading().reciprocal();
    // Primitive pseudo-remainder sequence over the integers.
    std::vector<mpz_class> u = primitive_int_coeffs(a), v = primitive_int_coeffs(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        std::vector<mpz_class> r = pseudo_rem(std::move(u), v);
        divide_by_content(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(u.size());
    for (auto& c : u) coeffs.emplace_back(Rational(c));
    Poly g{std::move(coeffs)};
    return g * g.leading().reciprocal();
}

PiRatio::PiRatio(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

PiRatio PiRatio::pi_pow(int k) {
    if (k >= 0) return PiRatio(Poly::monomial(Rational(1), k), Poly(Rational(1)));
    return PiRatio(Poly(Rational(1)), Poly::monomial(Rational(1), -k));
}

Rational PiRatio::as_rational() const {
    if (!is_rational() && !is_zero())
        throw std::domain_error("PiRatio: value is not rational: " + to_string());
    if (is_zero()) return Rational(0);
    return num_.coeff(0) / den_.coeff(0);
}

namespace {

// Exact quotient by a monic divisor known to divide evenly.
Poly exact_quotient(const Poly& p, const Poly& monic) {
    if (monic.degree() == 0) return p;
    return p.divrem(monic).first;
}

}  // namespace

// Scales coprime num/den to coprime integer contents and a positive-leading
// denominator; assumes gcd(num, den) = 1 already.
void PiRatio::scale_canonical() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Rational cn = num_.content(), cd = den_.content();
    Rational ratio = cn / cd;  // positive
    mpz_class alpha = ratio.numerator(), beta = ratio.denominator();
    num_ = num_ * (Rational(alpha) / cn);
    den_ = den_ * (Rational(beta) / cd);
    if (den_.leading().sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

void PiRatio::normalize() {
    if (den_.is_zero()) throw std::domain_error("PiRatio: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_quotient(num_, g);
        den_ = exact_quotient(den_, g);
    }
    scale_canonical();
}

bool PiRatio::both_rational(const PiRatio& o) const {
    return num_.degree() <= 0 && den_.degree() <= 0 && o.num_.degree() <= 0 &&
           o.den_.degree() <= 0;
}

void PiRatio::assign_rational(const Rational& r) {
    num_ = Poly(r);
    den_ = Poly(Rational(1));
    scale_canonical();
}

Rational PiRatio::rational_unchecked() const {
    if (num_.is_zero()) return Rational(0);
    return num_.coeff(0) / den_.coeff(0);
}

PiRatio PiRatio::operator-() const {
    PiRatio r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

PiRatio& PiRatio::operator+=(const PiRatio& o) {
    if (both_rational(o)) {
        assign_rational(rational_unchecked() + o.rational_unchecked());
        return *this;
    }
    if (num_.is_zero()) return *this = o;
    if (o.num_.is_zero()) return *this;
    // a/b + c/d with g = gcd(b, d): only g's factors can cancel.
    Poly g = Poly::gcd(den_, o.den_);
    if (g.degree() == 0) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    } else {
        Poly b1 = exact_quotient(den_, g);
        Poly d1 = exact_quotient(o.den_, g);
        Poly t = num_ * d1 + o.num_ * b1;
        if (t.is_zero()) {
            num_ = Poly();
            den_ = Poly(Rational(1));
            return *this;
        }
        Poly h = Poly::gcd(t, g);
        num_ = h.degree() == 0 ? std::move(t) : exact_quotient(t, h);
        den_ = b1 * (h.degree() == 0 ? o.den_ : exact_quotient(o.den_, h));
    }
    scale_canonical();
    return *this;
}

PiRatio& PiRatio::operator-=(const PiRatio& o) { return *this += -o; }

PiRatio& PiRatio::operator*=(const PiRatio& o) {
    if (both_rational(o)) {
        assign_rational(rational_unchecked() * o.rational_unchecked());
        return *this;
    }
    if (num_.is_zero() || o.num_.is_zero()) {
        num_ = Poly();
        den_ = Poly(Rational(1));
        return *this;
    }
    // Cross-reduce so the product is born coprime.
    Poly g1 = Poly::gcd(num_, o.den_);
    Poly g2 = Poly::gcd(o.num_, den_);
    num_ = exact_quotient(num_, g1) * exact_quotient(o.num_, g2);
    den_ = exact_quotient(den_, g2) * exact_quotient(o.den_, g1);
    scale_canonical();
    return *this;
}

PiRatio& PiRatio::operator/=(const PiRatio& o) {
    if (o.is_zero()) throw std::domain_error("PiRatio: division by zero");
    if (both_rational(o)) {
        assign_rational(rational_unchecked() / o.rational_unchecked());
        return *this;
    }
    if (num_.is_zero()) return *this;
    Poly g1 = Poly::gcd(num_, o.num_);
    Poly g2 = Poly::gcd(o.den_, den_);
    num_ = exact_quotient(num_, g1) * exact_quotient(o.den_, g2);
    den_ = exact_quotient(den_, g2) * exact_quotient(o.num_, g1);
    scale_canonical();
    return *this;
}

bool PiRatio::equal_cross(const PiRatio& a, const PiRatio& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

PiRatio PiRatio::reciprocal() const {
    if (is_zero()) throw std::domain_error("PiRatio: reciprocal of zero");
    return PiRatio(den_, num_);
}

PiRatio PiRatio::pow(int e) const {
    if (e == 0) return PiRatio(Rational(1));
    PiRatio base = e < 0 ? reciprocal() : *this;
    int k = e < 0 ? -e : e;
    PiRatio acc(Rational(1));
    for (int i = 0; i < k; ++i) acc *= base;
    return acc;
}

namespace {

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        const Rational& c = p.coeff(k);
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = a.is_one();
        if (k == 0) {
            out << a.to_string();
        } else {
            if (!unit) out << a.to_string() << "*";
            out << (k == 1 ? "pi" : "pi^" + std::to_string(k));
        }
    }
    return out.str();
}

int poly_term_count(const Poly& p) {
    int n = 0;
    for (int k = 0; k <= p.degree(); ++k)
        if (!p.coeff(k).is_zero()) ++n;
    return n;
}

}  // namespace

std::string PiRatio::to_string() const {
    std::string n = poly_to_string(num_);
    if (den_ == Poly(Rational(1))) return n;
    std::string d = poly_to_string(den_);
    bool n_parens = poly_term_count(num_) > 1;
    bool d_parens = poly_term_count(den_) > 1 || d.find('*') != std::string::npos;
    std::string out = n_parens ? "(" + n + ")" : n;
    out += "/";
    out += d_parens ? "(" + d + ")" : d;
    return out;
}

namespace {

// Minimal recursive-descent evaluator for Q(pi) expressions.
class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    PiRatio parse() {
        PiRatio v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    PiRatio expr() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (get() == '-') neg = !neg;
            skip_ws();
        }
        PiRatio v = term();
        if (neg) v = -v;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                get();
                PiRatio rhs = term();
                v = (c == '+') ? v + rhs : v - rhs;
            } else {
                return v;
            }
        }
    }

    PiRatio term() {
        PiRatio v = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*' || c == '/') {
                get();
                PiRatio rhs = factor();
                v = (c == '*') ? v * rhs : v / rhs;
            } else {
                return v;
            }
        }
    }

    PiRatio factor() {
        PiRatio base = atom();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            bool neg = false;
            if (peek() == '-') {
                get();
                neg = true;
            }
            long e = integer();
            return base.pow(static_cast<int>(neg ? -e : e));
        }
        return base;
    }

    PiRatio atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            PiRatio v = expr();
            skip_ws();
            if (get() != ')') fail("expected ')'");
            return v;
        }
        if (c == 'p') {
            if (s_.compare(pos_, 2, "pi") != 0) fail("expected 'pi'");
            pos_ += 2;
            return PiRatio::pi();
        }
        if (c == '-') {
            get();
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return PiRatio(Rational(mpz_class(digits())));
        fail("unexpected character");
        return PiRatio();
    }

    long integer() {
        std::string d = digits();
        return std::stol(d);
    }

    std::string digits() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return s_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("PiRatio::parse: " + why + " at offset " +
                                    std::to_string(pos_) + " in '" + s_ + "'");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

PiRatio PiRatio::parse(const std::string& s) { return ExprParser(s).parse(); }

}  // namespace mcfrac
