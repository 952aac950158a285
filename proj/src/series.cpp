#include "mcfrac/series.hpp"

#include <sstream>
#include <stdexcept>

namespace mcfrac {

TruncSeries::TruncSeries(int min_order, std::vector<PiRatio> coeffs, int valid_order)
    : min_order_(min_order), coeffs_(std::move(coeffs)), valid_order_(valid_order) {
    normalize();
}

void TruncSeries::normalize() {
    // Drop known-zero leading coefficients so min_order is tight, and drop
    // anything past valid_order.
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        min_order_ += static_cast<int>(lead);
    }
    if (min_order_ + static_cast<int>(coeffs_.size()) - 1 > valid_order_) {
        coeffs_.resize(static_cast<size_t>(valid_order_ - min_order_ + 1 > 0
                                               ? valid_order_ - min_order_ + 1
                                               : 0));
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) min_order_ = valid_order_ + 1;
}

TruncSeries TruncSeries::zero(int valid_order) {
    return TruncSeries(valid_order + 1, {}, valid_order);
}

TruncSeries TruncSeries::monomial(PiRatio c, int order, int valid_order) {
    if (order > valid_order) throw std::invalid_argument("TruncSeries: monomial beyond valid order");
    std::vector<PiRatio> v;
    v.push_back(std::move(c));
    return TruncSeries(order, std::move(v), valid_order);
}

TruncSeries TruncSeries::from_coeffs(int min_order, std::vector<PiRatio> coeffs) {
    int valid = min_order + static_cast<int>(coeffs.size()) - 1;
    return TruncSeries(min_order, std::move(coeffs), valid);
}

TruncSeries TruncSeries::polynomial(std::vector<PiRatio> coeffs, int valid_order) {
    if (valid_order < static_cast<int>(coeffs.size()) - 1)
        throw std::invalid_argument("TruncSeries: polynomial valid order too small");
    return TruncSeries(0, std::move(coeffs), valid_order);
}

const PiRatio& TruncSeries::coeff(int k) const {
    static const PiRatio zero_value;
    if (k > valid_order_)
        throw std::out_of_range("TruncSeries: coefficient of x^" + std::to_string(k) +
                                " requested beyond valid order " + std::to_string(valid_order_));
    int idx = k - min_order_;
    if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return zero_value;
    return coeffs_[static_cast<size_t>(idx)];
}

TruncSeries TruncSeries::operator-() const {
    std::vector<PiRatio> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return TruncSeries(min_order_, std::move(v), valid_order_);
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    int valid = std::min(a.valid_order_, b.valid_order_);
    int mo = std::min(a.min_order_, b.min_order_);
    if (mo > valid) return TruncSeries(valid + 1, {}, valid);
    std::vector<PiRatio> v(static_cast<size_t>(valid - mo + 1));
    for (int k = mo; k <= valid; ++k)
        v[static_cast<size_t>(k - mo)] = a.coeff(k) + b.coeff(k);
    return TruncSeries(mo, std::move(v), valid);
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int valid = std::min(a.valid_order_ + b.min_order_, b.valid_order_ + a.min_order_);
    int mo = a.min_order_ + b.min_order_;
    if (a.coeffs_.empty() || b.coeffs_.empty() || mo > valid)
        return TruncSeries(valid + 1, {}, valid);
    std::vector<PiRatio> v(static_cast<size_t>(valid - mo + 1));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        int oa = a.min_order_ + static_cast<int>(i);
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            int k = oa + b.min_order_ + static_cast<int>(j);
            if (k > valid) break;
            v[static_cast<size_t>(k - mo)] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return TruncSeries(mo, std::move(v), valid);
}

TruncSeries TruncSeries::operator*(const PiRatio& s) const {
    std::vector<PiRatio> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c * s);
    return TruncSeries(min_order_, std::move(v), valid_order_);
}

TruncSeries TruncSeries::reciprocal(bool allow_laurent) const {
    if (coeffs_.empty())
        throw std::domain_error("TruncSeries: non-invertible series (zero leading coefficient)");
    int m = min_order_;
    if (-m < 0 && !allow_laurent)
        throw std::domain_error(
            "TruncSeries: reciprocal would produce Laurent terms (min order " +
            std::to_string(m) + "); pass allow_laurent to permit");
    int rel_valid = valid_order_ - m;  // relative coefficients 0..rel_valid are known
    std::vector<PiRatio> b(static_cast<size_t>(rel_valid) + 1);
    PiRatio inv_a0 = coeffs_[0].reciprocal();
    b[0] = inv_a0;
    for (int i = 1; i <= rel_valid; ++i) {
        PiRatio acc;
        for (int j = 1; j <= i; ++j) {
            int idx = j;  // relative coefficient a_j
            if (idx < static_cast<int>(coeffs_.size()) && !coeffs_[static_cast<size_t>(idx)].is_zero())
                acc += coeffs_[static_cast<size_t>(idx)] * b[static_cast<size_t>(i - j)];
        }
        b[static_cast<size_t>(i)] = -(acc * inv_a0);
    }
    return TruncSeries(-m, std::move(b), valid_order_ - 2 * m);
}

TruncSeries TruncSeries::shift_substitute() const {
    // c x^m -> c x^m (1+x)^(-m) = c sum_i binom(-m, i) x^(m+i).
    int valid = valid_order_;
    if (coeffs_.empty()) return *this;
    int mo = min_order_;
    if (mo > valid) return *this;
    std::vector<PiRatio> v(static_cast<size_t>(valid - mo + 1));
    for (size_t t = 0; t < coeffs_.size(); ++t) {
        if (coeffs_[t].is_zero()) continue;
        int m = min_order_ + static_cast<int>(t);
        for (int i = 0; m + i <= valid; ++i) {
            Rational bin = binomial(-m, i);
            if (bin.is_zero()) break;  // happens for m < 0 once i > -m
            v[static_cast<size_t>(m + i - mo)] += coeffs_[t] * PiRatio(bin);
        }
    }
    return TruncSeries(mo, std::move(v), valid);
}

TruncSeries TruncSeries::truncated(int new_valid_order) const {
    if (new_valid_order > valid_order_)
        throw std::out_of_range("TruncSeries: cannot extend valid order by truncation");
    return TruncSeries(min_order_, coeffs_, new_valid_order);
}

std::string TruncSeries::to_string() const {
    std::ostringstream out;
    bool any = false;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (any) out << " + ";
        out << "(" << coeffs_[i].to_string() << ")*x^" << (min_order_ + static_cast<int>(i));
        any = true;
    }
    if (!any) out << "0";
    out << " + O(x^" << (valid_order_ + 1) << ")";
    return out.str();
}

TruncSeries log_shift_series(const Rational& a, const Rational& b, int order) {
    if (order < 1) throw std::invalid_argument("log_shift_series: order must be >= 1");
    std::vector<PiRatio> v(static_cast<size_t>(order));
    Rational pa = a, pb = b;  // running powers a^m, b^m
    for (int m = 1; m <= order; ++m) {
        Rational c = (pb - pa) / Rational(m);
        if (m % 2 == 0) c = -c;
        v[static_cast<size_t>(m - 1)] = PiRatio(c);
        pa *= a;
        pb *= b;
    }
    return TruncSeries::from_coeffs(1, std::move(v));
}

SolveOutcome solve_leading(const std::function<PiRatio(const PiRatio&)>& coeff_of_unknown) {
    PiRatio c0 = coeff_of_unknown(PiRatio(0));
    PiRatio c1 = coeff_of_unknown(PiRatio(1));
    PiRatio c2 = coeff_of_unknown(PiRatio(2));
    PiRatio slope = c1 - c0;
    if (c2 - c0 != slope + slope)
        throw std::domain_error("solve_leading: non-linear dependence on unknown");
    if (slope.is_zero()) {
        if (!c0.is_zero())
            throw std::domain_error("solve_leading: inconsistent equation (no solution)");
        return {PiRatio(0), /*underdetermined=*/true};
    }
    return {-(c0 / slope), false};
}

}  // namespace mcfrac
