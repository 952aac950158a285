#include "mcfrac/seriesgen.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace mcfrac {

namespace {
std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table;  // append-only under bernoulli_mutex
}  // namespace

const Rational& bernoulli(int m) {
    if (m < 0) throw std::invalid_argument("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    if (bernoulli_table.empty()) bernoulli_table.emplace_back(1);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1 determines B_m.
    while (static_cast<int>(bernoulli_table.size()) <= m) {
        int k = static_cast<int>(bernoulli_table.size());
        Rational acc(0);
        for (int j = 0; j < k; ++j)
            acc += binomial(k + 1, j) * bernoulli_table[static_cast<size_t>(j)];
        bernoulli_table.push_back(-acc / binomial(k + 1, k));
    }
    return bernoulli_table[static_cast<size_t>(m)];
}

std::string family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Landau: return "landau";
        case FamilyTag::Lebesgue: return "lebesgue";
        case FamilyTag::Euler: return "euler";
    }
    throw std::logic_error("family_name: bad tag");
}

FamilyTag family_from_name(const std::string& name) {
    if (name == "landau") return FamilyTag::Landau;
    if (name == "lebesgue") return FamilyTag::Lebesgue;
    if (name == "euler") return FamilyTag::Euler;
    throw std::invalid_argument("unknown family '" + name + "'");
}

Family Family::landau() {
    return {FamilyTag::Landau, Rational(3, 4), CFTemplate::QuadraticCF,
            PiRatio::pi_pow(-1)};
}
Family Family::lebesgue() {
    return {FamilyTag::Lebesgue, Rational(1), CFTemplate::QuadraticCF, PiRatio(1)};
}
Family Family::euler() {
    return {FamilyTag::Euler, Rational(0), CFTemplate::LinearCF, PiRatio(1)};
}
Family Family::of(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Landau: return landau();
        case FamilyTag::Lebesgue: return lebesgue();
        case FamilyTag::Euler: return euler();
    }
    throw std::logic_error("Family::of: bad tag");
}

Rational brouncker_qk_value(int k, const Rational& n) {
    if (k < 1) throw std::invalid_argument("brouncker_qk_value: k must be >= 1");
    // Innermost partial denominator upward; level j has numerator (2j-1)^2.
    Rational tail(0);
    Rational base = Rational(2) + Rational(8) * n;
    for (int j = k - 1; j >= 1; --j) {
        Rational den = base + tail;
        if (den.is_zero())
            throw std::domain_error("brouncker_qk_value: division by zero in continued fraction");
        tail = Rational(2 * j - 1).pow(2) / den;
    }
    Rational head = Rational(1) + Rational(4) * n + tail;
    if (head.is_zero())
        throw std::domain_error("brouncker_qk_value: division by zero in continued fraction");
    return Rational(4) / head;
}

TruncSeries brouncker_qk_series_unshifted(int k, int order) {
    if (k < 1) throw std::invalid_argument("brouncker_qk_series: k must be >= 1");
    if (order < 1) throw std::invalid_argument("brouncker_qk_series: order must be >= 1");
    // Each level 2+8n = (8+2x)/x; factoring the 1/x out of every level keeps
    // all intermediate series at min order 0:
    //   U_{k-1} = 8+2x,  U_j = 8+2x + (2j+1)^2 x^2 / U_{j+1},
    //   q_k = 4x / (4 + x + x^2/U_1)     (k >= 2),  q_1 = 4x/(4+x).
    int v = order;
    TruncSeries x = TruncSeries::monomial(PiRatio(1), 1, v);
    TruncSeries x2 = TruncSeries::monomial(PiRatio(1), 2, v + 1);
    TruncSeries head = TruncSeries::constant(PiRatio(4), v) + x;
    if (k >= 2) {
        TruncSeries u = TruncSeries::constant(PiRatio(8), v) +
                        TruncSeries::monomial(PiRatio(2), 1, v);
        for (int j = k - 2; j >= 1; --j) {
            u = TruncSeries::constant(PiRatio(8), v) +
                TruncSeries::monomial(PiRatio(2), 1, v) +
                (x2 * u.reciprocal()) * PiRatio(Rational((2 * j + 1) * (2 * j + 1)));
        }
        head = head + x2 * u.reciprocal();
    }
    return (x * head.reciprocal()) * PiRatio(4);
}

namespace {
std::mutex certified_mutex;
std::map<int, int> certified_order_table;  // k -> verified vanishing order
}  // namespace

int brouncker_certified_order(int k) {
    {
        std::lock_guard<std::mutex> lock(certified_mutex);
        auto it = certified_order_table.find(k);
        if (it != certified_order_table.end()) return it->second;
    }
    // The gap q_{k+1} - q_k vanishes through order 2k; verify by exact
    // expansion rather than trusting the pattern.
    int candidate = 2 * k;
    TruncSeries gap = brouncker_qk_series_unshifted(k + 1, candidate + 1) -
                      brouncker_qk_series_unshifted(k, candidate + 1);
    int verified = 0;
    for (int m = 1; m <= candidate; ++m) {
        if (!gap.coeff(m).is_zero()) break;
        verified = m;
    }
    std::lock_guard<std::mutex> lock(certified_mutex);
    certified_order_table[k] = verified;
    return verified;
}

TruncSeries brouncker_qk_series(int k, int order) {
    if (order > brouncker_certified_order(k))
        throw std::domain_error("brouncker_qk_series: order " + std::to_string(order) +
                                " exceeds residual guarantee for k = " + std::to_string(k) +
                                " (certified through " +
                                std::to_string(brouncker_certified_order(k)) + ")");
    return brouncker_qk_series_unshifted(k, order).shift_substitute();
}

PiRatio lebesgue_aj(int j) {
    if (j < 1) throw std::invalid_argument("lebesgue_aj: j must be >= 1");
    PiRatio correction(1);
    Rational factorial(1);
    for (int k = 1; k <= j; ++k) {
        factorial *= Rational(2 * k - 1) * Rational(2 * k);
        Rational c = bernoulli(2 * k) / factorial;
        if (k % 2 != 0) c = -c;
        correction += PiRatio(c) * PiRatio::pi_pow(2 * k);
    }
    Rational front = bernoulli(2 * j) / Rational(2 * j) * (Rational(2).pow(2 * j - 1) - 1);
    return PiRatio(Rational(8) * front) * PiRatio::pi_pow(-2) * correction;
}

namespace {

TruncSeries landau_difference(int order) {
    // pi*(E_0(n) - E_0(n+1)) = -q(n+1) + ln(n+7/4) - ln(n+3/4), with q(n+1)
    // replaced by a certified q_k(n+1); k grows (even values) until the
    // q_{k+1} - q_k gap covers the requested order.
    constexpr int k_cap = 32;
    int k = 8;
    while (k <= k_cap && brouncker_certified_order(k) < order) k += 2;
    if (k > k_cap)
        throw std::domain_error("difference_series: order " + std::to_string(order) +
                                " exceeds the residual budget for the Landau family");
    return log_shift_series(Rational(3, 4), Rational(7, 4), order) -
           brouncker_qk_series(k, order);
}

TruncSeries lebesgue_difference(int order) {
    // W_M(n) - W_M(n+1) with W_M(n) = sum_{j=1..M} a_j/(n+1)^(2j); the first
    // omitted term perturbs the difference at order 2M+3 only, so M is the
    // smallest value with 2M+3 > order.
    int m_terms = 1;
    while (2 * m_terms + 3 <= order) ++m_terms;
    TruncSeries w = TruncSeries::zero(order);
    for (int j = 1; j <= m_terms; ++j) {
        if (2 * j > order) break;
        w = w + TruncSeries::monomial(PiRatio(1), 2 * j, order).shift_substitute() *
                    lebesgue_aj(j);
    }
    return w - w.shift_substitute();
}

TruncSeries euler_difference(int order) {
    // ln(1 + 1/n) - 1/(n+1).
    return log_shift_series(Rational(0), Rational(1), order) -
           TruncSeries::monomial(PiRatio(1), 1, order).shift_substitute();
}

}  // namespace

TruncSeries difference_series(const Family& family, int order) {
    if (order < 1) throw std::invalid_argument("difference_series: order must be >= 1");
    switch (family.tag) {
        case FamilyTag::Landau: return landau_difference(order);
        case FamilyTag::Lebesgue: return lebesgue_difference(order);
        case FamilyTag::Euler: return euler_difference(order);
    }
    throw std::logic_error("difference_series: bad family tag");
}

}  // namespace mcfrac
